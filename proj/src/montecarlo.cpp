#include "montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "codes.hpp"
#include "decode.hpp"

namespace dtc::montecarlo {

using analysis::ErrorType;
using codes::CssCode;
using gf2::BitMatrix;
using gf2::BitVec;

namespace {

// Minimum-weight lookup over a small stabilizer set: ascending-weight
// enumeration fills one representative per syndrome, so every entry is a
// global minimum-weight repair (lexicographically first at its weight).
class MinWeightTable {
  public:
    explicit MinWeightTable(const BitMatrix& stabs)
        : n_(stabs.ncols()), bits_(stabs.nrows()) {
        if (bits_ > 12)
            throw std::logic_error("syndrome table would need more than 2^12 entries");
        std::vector<std::uint32_t> cols(n_, 0);
        for (std::size_t q = 0; q < n_; ++q)
            for (std::size_t r = 0; r < bits_; ++r)
                if (stabs.get(r, q)) cols[q] |= std::uint32_t{1} << r;

        reps_.assign(std::size_t{1} << bits_, BitVec(n_));
        std::vector<bool> have(reps_.size(), false);
        have[0] = true;
        std::size_t filled = 1;
        std::vector<std::size_t> support;
        auto place = [&](std::uint32_t syn) {
            if (have[syn]) return;
            have[syn] = true;
            ++filled;
            BitVec rep(n_);
            for (std::size_t q : support) rep.set(q, true);
            reps_[syn] = rep;
        };
        auto extend = [&](auto&& self, std::size_t start, std::size_t left,
                          std::uint32_t syn) -> void {
            if (left == 0) {
                place(syn);
                return;
            }
            for (std::size_t q = start; q + left <= n_ && filled < reps_.size(); ++q) {
                support.push_back(q);
                self(self, q + 1, left - 1, syn ^ cols[q]);
                support.pop_back();
            }
        };
        for (std::size_t w = 1; w <= n_ && filled < reps_.size(); ++w)
            extend(extend, 0, w, 0);
        if (filled != reps_.size())
            throw std::logic_error("dependent stabilizer rows leave unreachable syndromes");
    }

    BitVec decode(const BitVec& syndrome) const {
        if (syndrome.len() != bits_)
            throw std::invalid_argument("syndrome length does not match the stabilizer count");
        std::uint32_t idx = 0;
        for (std::size_t r = 0; r < bits_; ++r)
            if (syndrome.get(r)) idx |= std::uint32_t{1} << r;
        return reps_[idx];
    }

  private:
    std::size_t n_;
    std::size_t bits_;
    std::vector<BitVec> reps_;
};

struct Decoder {
    std::size_t n = 0;
    BitMatrix stabs;  // rows the syndrome is measured against
    BitVec logical;   // opposing logical; odd overlap with the residual is a failure
    std::function<BitVec(const BitVec&)> decode;
};

Decoder make_decoder(const std::string& name, ErrorType type, DecoderMode mode) {
    CssCode css = codes::as_css(codes::catalog(name));
    Decoder dec;
    dec.n = css.n;
    dec.logical = (type == ErrorType::Z) ? css.logical_x : css.logical_z;
    const bool doubled = (name == "tri49" || name == "tri95");
    if (doubled) {
        // Z errors are covered by the X stabilizers, which are exactly the
        // shared rows, so for them the two modes coincide.
        const bool big = (name == "tri95");
        if (mode == DecoderMode::shared || type == ErrorType::Z) {
            dec.stabs = big ? decode::shared_stabilizers95() : decode::shared_stabilizers49();
            dec.decode = big ? +[](const BitVec& s) { return decode::decode_shared95(s).correction; }
                             : +[](const BitVec& s) { return decode::decode_shared49(s).correction; };
        } else {
            dec.stabs = css.z_stabs;
            const std::size_t shared_bits = big ? 25u : 13u;
            dec.decode = [big, shared_bits](const BitVec& s) {
                decode::SyndromePair pair{BitVec(shared_bits), s, decode::StabilizerSet::full};
                auto plan = big ? decode::decode_tri95(pair) : decode::decode_tri49(pair);
                return plan.x_correction;
            };
        }
    } else {
        dec.stabs = (type == ErrorType::Z) ? css.x_stabs : css.z_stabs;
        auto table = std::make_shared<const MinWeightTable>(dec.stabs);
        dec.decode = [table](const BitVec& s) { return table->decode(s); };
    }
    return dec;
}

enum class Outcome { identity, stabilizer, logical };

Outcome classify(const Decoder& dec, const BitVec& error) {
    BitVec residual = error;
    residual ^= dec.decode(gf2::syndrome_of(dec.stabs, error));
    if (residual.is_zero()) return Outcome::identity;
    if (BitVec::odd_overlap(dec.logical, residual)) return Outcome::logical;
    return Outcome::stabilizer;
}

// Unbiased bounded draw via the 128-bit multiply trick; the bias of at most
// range/2^64 is far below anything the tallies could resolve.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * range) >> 64);
}

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Counts {
    std::uint64_t identity = 0;
    std::uint64_t stabilizer = 0;
    std::uint64_t logical = 0;
};

void run_range(const Decoder& dec, const RunConfig& cfg, std::uint64_t lo, std::uint64_t hi,
               Counts& out) {
    std::vector<std::uint32_t> idx(dec.n);
    for (std::uint64_t trial = lo; trial < hi; ++trial) {
        std::mt19937_64 rng(trial_seed(cfg.seed, trial));
        BitVec error(dec.n);
        if (cfg.model == ErrorModel::fixed_weight) {
            std::iota(idx.begin(), idx.end(), 0u);
            for (std::size_t i = 0; i < cfg.weight; ++i) {
                std::size_t j = i + static_cast<std::size_t>(bounded(rng, dec.n - i));
                std::swap(idx[i], idx[j]);
                error.set(idx[i], true);
            }
        } else {
            for (std::size_t q = 0; q < dec.n; ++q)
                if (unit_double(rng) < cfg.rate) error.set(q, true);
        }
        switch (classify(dec, error)) {
            case Outcome::identity: ++out.identity; break;
            case Outcome::stabilizer: ++out.stabilizer; break;
            case Outcome::logical: ++out.logical; break;
        }
    }
}

void attach_wilson_interval(Tally& tally) {
    const double n = static_cast<double>(tally.trials);
    const double p = static_cast<double>(tally.logical) / n;
    tally.failure_rate = p;
    constexpr double z = 1.959963984540054;  // two-sided 95%
    const double z2 = z * z;
    const double center = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
    const double half =
        (z / (1.0 + z2 / n)) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    // at the boundaries the interval edge is exactly 0 or 1; computing it
    // through the sqrt leaves rounding residue, so pin those cases
    tally.ci_low = tally.logical == 0 ? 0.0 : std::max(0.0, center - half);
    tally.ci_high = tally.logical == tally.trials ? 1.0 : std::min(1.0, center + half);
}

}  // namespace

Tally monte_carlo(const RunConfig& config) {
    if (config.trials == 0) throw std::invalid_argument("trials must be positive");
    Decoder dec = make_decoder(config.code, config.type, config.mode);
    if (config.model == ErrorModel::fixed_weight) {
        if (config.weight > dec.n)
            throw std::invalid_argument("error weight exceeds the block size");
    } else if (!(config.rate >= 0.0 && config.rate <= 1.0)) {
        throw std::invalid_argument("error rate must lie in [0, 1]");
    }

    unsigned threads = config.threads;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, config.trials));

    std::vector<Counts> parts(threads);
    const std::uint64_t chunk = (config.trials + threads - 1) / threads;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) {
            const std::uint64_t lo = i * chunk;
            const std::uint64_t hi = std::min<std::uint64_t>(config.trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, std::cref(dec), std::cref(config), lo, hi,
                              std::ref(parts[i]));
        }
    }

    Tally tally;
    tally.trials = config.trials;
    for (const Counts& part : parts) {
        tally.identity += part.identity;
        tally.stabilizer += part.stabilizer;
        tally.logical += part.logical;
    }
    attach_wilson_interval(tally);
    return tally;
}

ExhaustiveReport exhaustive_up_to(const std::string& code, ErrorType type,
                                  std::size_t max_weight, DecoderMode mode) {
    Decoder dec = make_decoder(code, type, mode);
    if (max_weight > dec.n)
        throw std::invalid_argument("max weight exceeds the block size");
    ExhaustiveReport report;
    BitVec error(dec.n);
    auto sweep = [&](auto&& self, std::size_t start, std::size_t left) -> void {
        if (left == 0) {
            ++report.cases;
            switch (classify(dec, error)) {
                case Outcome::identity: ++report.identity; break;
                case Outcome::stabilizer: ++report.stabilizer; break;
                case Outcome::logical:
                    ++report.logical;
                    if (!report.first_failure) report.first_failure = error;
                    break;
            }
            return;
        }
        for (std::size_t q = start; q + left <= dec.n; ++q) {
            error.set(q, true);
            self(self, q + 1, left - 1);
            error.set(q, false);
        }
    };
    for (std::size_t w = 1; w <= max_weight; ++w) sweep(sweep, 0, w);
    return report;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t root, std::uint64_t trial) {
    // Matches the splitmix64 output stream seeded at `root`, taken at
    // position `trial`; distinct trials get decorrelated generators.
    return splitmix64(root + trial * 0x9E3779B97F4A7C15ull);
}

}  // namespace dtc::montecarlo
