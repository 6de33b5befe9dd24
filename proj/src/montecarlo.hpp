#pragma once

// Code-capacity sampling of decoder performance.  Errors are drawn either as
// uniform fixed-weight supports or as i.i.d. per-qubit flips, decoded with
// the same decoders the conversion gadgets use, and the residual is classed
// as identity, harmless (commutes with the logical pair), or a logical
// failure.  Per-trial generators are derived from the root seed, so results
// are reproducible bit for bit regardless of the thread count.

#include <cstdint>
#include <optional>
#include <string>

#include "analysis.hpp"
#include "gf2.hpp"

namespace dtc::montecarlo {

enum class DecoderMode {
    shared,  // hierarchical decoding from the shared syndromes only
    full,    // minimum-weight decoding against the full stabilizer set
};

enum class ErrorModel { fixed_weight, iid };

struct RunConfig {
    std::string code = "tri49";
    analysis::ErrorType type = analysis::ErrorType::Z;
    DecoderMode mode = DecoderMode::shared;
    ErrorModel model = ErrorModel::fixed_weight;
    std::size_t weight = 1;  // fixed_weight model
    double rate = 0.0;       // iid model
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    unsigned threads = 1;  // 0 picks the hardware concurrency
};

struct Tally {
    std::uint64_t trials = 0;
    std::uint64_t identity = 0;
    std::uint64_t stabilizer = 0;
    std::uint64_t logical = 0;
    double failure_rate = 0.0;
    // Wilson 95% interval on the failure rate
    double ci_low = 0.0;
    double ci_high = 0.0;
};

Tally monte_carlo(const RunConfig& config);

struct ExhaustiveReport {
    std::uint64_t cases = 0;
    std::uint64_t identity = 0;
    std::uint64_t stabilizer = 0;
    std::uint64_t logical = 0;
    std::optional<gf2::BitVec> first_failure;
};

// Decode every error with 1 <= weight <= max_weight, in ascending weight and
// lexicographic support order.
ExhaustiveReport exhaustive_up_to(const std::string& code, analysis::ErrorType type,
                                  std::size_t max_weight, DecoderMode mode = DecoderMode::shared);

// splitmix64 step; trial_seed spreads a root seed into independent per-trial
// generator seeds.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t trial_seed(std::uint64_t root, std::uint64_t trial);

}  // namespace dtc::montecarlo
