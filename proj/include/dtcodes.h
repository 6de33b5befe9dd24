#ifndef DTCODES_H
#define DTCODES_H

/*
 * C interface to the doubled triorthogonal code toolkit.
 *
 * Every report-producing call follows the same shape: it returns 0 on
 * success and fills *out with a NUL-terminated, malloc'd report of
 * "key: value" lines ending in "status: ok"; the caller releases it with
 * dtc_free().  On failure the return value is DTC_ERR_RUNTIME or
 * DTC_ERR_INVALID, *out is left untouched, and dtc_last_error() returns a
 * thread-local description valid until the next failing call on the same
 * thread.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define DTC_OK 0
#define DTC_ERR_RUNTIME 1
#define DTC_ERR_INVALID 2

typedef struct dtc_code dtc_code;

const char* dtc_version(void);
const char* dtc_last_error(void);
void dtc_free(char* report);

/* One line per catalog code with its parameters. */
int dtc_catalog(char** out);

/* Opens a catalog code by name ("trivial1" included) or, failing that,
 * parses the argument as the path of a code text file. */
int dtc_code_open(const char* name_or_path, dtc_code** out);
void dtc_code_close(dtc_code* code);

int dtc_code_describe(const dtc_code* code, char** out);
/* Round-trippable code text (the same format dtc_code_open reads). */
int dtc_code_export(const dtc_code* code, char** out);
/* Defining algebraic properties plus k-orthogonality of the generator
 * stack; invalid codes report the violated property as an error. */
int dtc_code_verify(const dtc_code* code, char** out);

/* Doubling construction: outer self-dual code, inner triorthogonal code.
 * complement selects the Z-only completion: 0 separated, 1 low-weight. */
int dtc_double(const dtc_code* self_dual, const dtc_code* inner, int complement,
               dtc_code** out);

/* Exhaustive minimum-weight logical search; weights 1..max_weight are fully
 * enumerated and a first-hit hunt one weight higher sharpens the bound.
 * error_type is 'X' or 'Z'; budget 0 keeps the default candidate ceiling;
 * threads 0 picks the hardware concurrency. */
int dtc_distance(const dtc_code* code, char error_type, unsigned max_weight,
                 unsigned long long budget, unsigned threads, char** out);

/* Weight-mod-8 certificate for the transversal T gate (triorthogonal codes
 * only).  budget 0 keeps the default enumeration ceiling. */
int dtc_tcert(const dtc_code* code, unsigned long long budget, char** out);

/* Decodes one syndrome, given as a string of '0'/'1' characters, bit 0
 * first.  code_name must be a catalog code.  full_set != 0 decodes X errors
 * of the doubled codes against the full stabilizer set instead of the
 * shared rows (the syndrome string then covers all Z rows). */
int dtc_decode(const char* code_name, char error_type, const char* syndrome,
               int full_set, char** out);

/* Decision table of a doubled code's hierarchical decoder. */
int dtc_tables(const char* code_name, char** out);

/* Canned gadget checks over all six logical eigenstates: convert_up,
 * convert_down, roundtrip, cnot_up, cnot_down, s_gadget. */
int dtc_simulate_scenario(const char* scenario, unsigned long long trials,
                          unsigned long long seed, char** out);

/* Runs a gadget script (see the tool documentation for the grammar) and
 * reports its recorded labels in order. */
int dtc_simulate_script(const char* script, unsigned long long seed, char** out);

/* Samples decoder performance.  mode is "shared" or "full"; model is
 * "fixed_weight" (uses weight) or "iid" (uses rate).  threads 0 picks the
 * hardware concurrency.  Identical arguments give identical reports. */
int dtc_montecarlo(const char* code_name, char error_type, const char* mode,
                   const char* model, unsigned weight, double rate,
                   unsigned long long trials, unsigned long long seed,
                   unsigned threads, char** out);

/* Decodes every error of weight 1..max_weight. */
int dtc_montecarlo_exhaustive(const char* code_name, char error_type,
                              unsigned max_weight, const char* mode, char** out);

/* Qubit and CNOT cost arithmetic with per-figure traces, plus concatenated
 * code parameters.  overrides may be NULL or "key = value" lines replacing
 * individual model constants. */
int dtc_costs(const char* overrides, char** out);

#ifdef __cplusplus
}
#endif

#endif /* DTCODES_H */
