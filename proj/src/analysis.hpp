#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "codes.hpp"

// Exhaustive searches: code distance, per-syndrome coset minimum weights,
// and the weight-mod-8 certificate for the transversal T gate.
namespace dtc::analysis {

using codes::CssCode;
using gf2::BitMatrix;
using gf2::BitVec;

enum class ErrorType { X, Z };
char to_char(ErrorType t);
ErrorType error_type_from(std::string_view s);

inline constexpr std::uint64_t default_budget = 2'000'000'000ull;

struct SearchLimits {
    std::uint64_t budget = default_budget;  // candidate ceiling; exceeding it throws
    unsigned threads = 0;                   // 0 picks hardware concurrency
};

struct DistanceReport {
    std::string code;
    ErrorType error_type = ErrorType::Z;
    bool found = false;            // distance certified exactly
    std::size_t distance = 0;      // weight of the witness when found
    BitVec witness;                // lexicographically-first minimum-weight logical
    std::size_t search_bound = 0;  // weights fully enumerated below the witness
};

// Ascending-weight exhaustive scan for the lightest nontrivial logical of
// the given type, with incremental packed-syndrome updates.  Weights
// 1..max_weight are fully enumerated; if nothing is found there, a
// sequential first-hit hunt at max_weight+1 runs inside the leftover budget
// so "distance > max_weight" can be sharpened to an exact value.
DistanceReport min_weight_logical(const CssCode& code, ErrorType t, std::size_t max_weight,
                                  const SearchLimits& limits = {});

// Minimum weights over the two error classes consistent with a syndrome of
// the opposing-type stabilizers: wE for the class the decoder picks
// (the lighter one), wEL for the logically shifted class.
struct CosetWeights {
    std::size_t wE = 0;
    std::size_t wEL = 0;
};
CosetWeights coset_weights(const CssCode& code, const BitVec& syndrome, ErrorType t,
                           const SearchLimits& limits = {});

// Bulk form: one pass over all vectors of weight <= max_weight fills the
// per-syndrome class minima.  Entry index packs stabilizer-row outcomes, row
// 0 in the lowest bit.  255 marks "not reached within max_weight".
struct CosetTable {
    std::size_t syndrome_bits = 0;
    std::vector<std::uint8_t> even_min;  // class with even overlap against the opposite logical
    std::vector<std::uint8_t> odd_min;   // logically shifted class
};
CosetTable coset_weight_table(const CssCode& code, ErrorType t, std::size_t max_weight,
                              const SearchLimits& limits = {});

// Lexicographically-first minimum-weight error with the given syndrome,
// ignoring the logical class split.
gf2::BitVec coset_leader(const CssCode& code, const gf2::BitVec& syndrome, ErrorType t,
                         const SearchLimits& limits = {});

struct TGateCertificate {
    std::string code;
    std::vector<int> coset0_residues;  // distinct weight-mod-8 values over the X-stabilizer span
    std::vector<int> coset1_residues;  // same over the logical-X coset
    bool diagonal = false;             // both singletons: transversal T acts logically diagonal
    int logical_phase_exponent = -1;   // (coset1 - coset0) mod 8 when diagonal
};

// Gray-code enumeration of the X-stabilizer span and its logical coset,
// collecting codeword weights mod 8.
TGateCertificate t_gate_certificate(const codes::TriorthogonalCode& code,
                                    std::uint64_t budget = std::uint64_t{1} << 26);

}  // namespace dtc::analysis
