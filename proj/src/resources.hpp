#pragma once

// Resource arithmetic for magic-state production: qubit and CNOT counts for
// distillation versus the doubled-code route, plus parameter composition for
// concatenated codes.  Every reported figure carries the expression it was
// computed from, and figures that are also quoted as standalone totals keep
// the quoted value alongside so a changed assumption is flagged instead of
// silently absorbed.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dtc::resources {

struct CostModel {
    // code sizes
    std::uint64_t golay_n = 23;
    std::uint64_t doubled_n = 95;
    // distillation route: noisy inputs per output state, logical CNOTs per
    // round, physical CNOTs per round, and first-round batch count
    std::uint64_t noisy_magic_states_per_output = 9;
    std::uint64_t distillation_logical_cnot_per_round = 61;
    std::uint64_t distillation_cnot_per_round = 1403;
    std::uint64_t distillation_round1_batches = 5;
    // ancilla overheads for measurement-based checking
    std::uint64_t golay_noisy_ancilla_per_verified = 4;
    std::uint64_t doubled_noisy_ancilla_assumed = 12;
    std::uint64_t doubled_logical_cnot_rounds = 11;
    // encoding-circuit CNOT counts (Latin-rectangle construction and the
    // hand-optimized variants)
    std::uint64_t latin_rect_zero_cost = 359;
    std::uint64_t latin_rect_plus_cost = 473;
    std::uint64_t optimized_zero = 267;
    std::uint64_t optimized_plus = 315;
};

// Parses "key = value" lines (one per line, '#' starts a comment) into a
// model, starting from the defaults.  Unknown keys and malformed numbers
// throw std::invalid_argument.
CostModel parse_cost_model(const std::string& text);

struct CostEntry {
    std::string name;   // dotted, e.g. "qubits.distillation_basic"
    std::uint64_t value = 0;
    std::string trace;  // the arithmetic behind the value, e.g. "23 * 9"
    // independently quoted total, when one exists; a mismatch means the
    // model's assumptions have drifted from the quoted figure
    std::optional<std::uint64_t> reference;
    bool matches_reference() const { return !reference || *reference == value; }
};

std::vector<CostEntry> cost_entries(const CostModel& model);

// [[n, k, d]] parameters; composition multiplies block sizes and distances.
struct CodeParams {
    std::uint64_t n = 1;
    std::uint64_t k = 1;
    std::uint64_t d = 1;
};

// Outer code applied to each qubit of the inner code.  Only single-logical
// blocks compose this way; k != 1 throws std::invalid_argument.
CodeParams concatenated(const CodeParams& outer, const CodeParams& inner);

std::uint64_t corrected_weight(const CodeParams& params);  // floor((d-1)/2)
std::string format_params(const CodeParams& params);       // "[[n,k,d]]"

// Parameters of a catalog code (k is always 1 there).
CodeParams params_of(const std::string& catalog_name);

}  // namespace dtc::resources
