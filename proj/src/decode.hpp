#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gf2.hpp"

namespace dtc::decode {

// Hierarchical minimum-weight decoding for the doubled codes.  The 49- and
// 95-qubit decoders work from the stabilizers shared between the X and Z
// sides, so one routine serves both error types.  Component lookup tables are
// built once on first use and are immutable afterwards; decoding itself is
// pure and safe to run concurrently.

// Outcome of the parity-repair step: `none` when the correlating stabilizer
// is already satisfied, `move` relocates one corrected qubit from the first
// self-dual block to the second, `plus2` flips the first qubit of both
// self-dual blocks, `plusL` adds a fixed minimum-weight logical on the inner
// block to switch its coset class.
enum class Rule { none, move, plus2, plusL };
std::string to_string(Rule rule);

enum class StabilizerSet { shared_only, full };

// Measurement outcomes for one code block.  X-stabilizer outcomes flag Z
// errors and vice versa.  With `shared_only` both vectors run over the same
// generating rows; with `full` the z_syndrome additionally covers the
// complement rows (the X side has no extra generators).
struct SyndromePair {
    gf2::BitVec x_syndrome;
    gf2::BitVec z_syndrome;
    StabilizerSet stabilizer_set = StabilizerSet::shared_only;
};

struct BlockCorrection {
    std::string block;
    gf2::BitVec bits;  // within-block, before the parity-repair step
};

struct CorrectionPlan {
    gf2::BitVec x_correction;  // repairs the z_syndrome (X-type flips)
    gf2::BitVec z_correction;  // repairs the x_syndrome
    Rule x_rule = Rule::none;
    Rule z_rule = Rule::none;
    std::vector<BlockCorrection> x_components;
    std::vector<BlockCorrection> z_components;
};

struct GolayResult {
    gf2::BitVec correction;
    std::size_t weight = 0;
};

struct TableResult {
    gf2::BitVec correction;  // representative of the lighter coset class
    std::size_t wE = 0;      // weight of that representative
    std::size_t wEL = 0;     // minimum weight of the logically shifted class
};

// Perfect-code lookup: every 11-bit syndrome has a unique representative of
// weight at most 3.
GolayResult decode_golay(const gf2::BitVec& syndrome);

// 256-entry table over the 8 color-code stabilizers.
TableResult decode_color17(const gf2::BitVec& syndrome);

// 16-entry table over the 4 stabilizers shared between the X and Z sides.
TableResult decode_rm15_shared(const gf2::BitVec& syndrome);

// One error type against the shared rows: 13 bits for the 49-qubit code
// (color 8, correlating 1, inner 4), 25 bits for the 95-qubit code (Golay
// 11, correlating 1, inner 13).
struct SharedDecode {
    gf2::BitVec correction;
    Rule rule = Rule::none;
    std::vector<BlockCorrection> components;
};
SharedDecode decode_shared49(const gf2::BitVec& syndrome);
SharedDecode decode_shared95(const gf2::BitVec& syndrome);

// Both error types at once.  Shared mode expects 13/13 (or 25/25) bits; full
// mode keeps the 13 (25) X-side bits and takes 35 (69) Z-side bits, repairing
// X errors by direct minimum-weight search instead of the shared tables.
CorrectionPlan decode_tri49(const SyndromePair& syndromes);
CorrectionPlan decode_tri95(const SyndromePair& syndromes);

// Shared generating rows the syndromes above are measured against.
const gf2::BitMatrix& shared_stabilizers49();
const gf2::BitMatrix& shared_stabilizers95();

// Fixed logicals added by plusL: odd-weight vectors with zero shared
// syndrome, lexicographically first at minimum weight.
const gf2::BitVec& logical_rep_rm15();   // weight 3
const gf2::BitVec& logical_rep_tri49();  // weight 5

// Decision tables of the two shared decoders, one row per reachable
// combination of block-decode weights and correlating-stabilizer state.  For
// the 49-qubit code the rows carry exhaustively verified coset weights: every
// syndrome with the same block weights and parity state has the same pair.
struct TableRow {
    std::size_t outer_weight = 0;  // color-block (49) or Golay-block (95) decode weight
    std::size_t inner_weight = 0;  // inner-block decode weight
    bool parity_violated = false;
    Rule rule = Rule::none;
    std::size_t wE = 0;   // 49-qubit table only
    std::size_t wEL = 0;  // 49-qubit table only
};
std::vector<TableRow> table_tri49();
std::vector<TableRow> table_tri95();

}  // namespace dtc::decode
