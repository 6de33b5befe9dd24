#include "analysis.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>

namespace dtc::analysis {

namespace {

unsigned effective_threads(const SearchLimits& limits) {
    unsigned t = limits.threads ? limits.threads : std::thread::hardware_concurrency();
    return t ? t : 1;
}

std::uint64_t binom_capped(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    unsigned __int128 c = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(c);
}

// Per-qubit packed syndrome columns; stabilizer row r occupies bit r, and the
// opposite-type logical, when supplied, occupies the bit after the last row.
template <std::size_t W>
struct PackedCols {
    std::size_t n = 0;
    std::size_t bits = 0;
    std::vector<std::array<std::uint64_t, W>> col;
};

template <std::size_t W>
PackedCols<W> pack_columns(const BitMatrix& stabs, const BitVec* logical, std::size_t n) {
    PackedCols<W> p;
    p.n = n;
    p.bits = stabs.nrows() + (logical ? 1 : 0);
    if (p.bits > 64 * W) throw std::logic_error("pack_columns: syndrome word too small");
    p.col.assign(n, {});
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t r = 0; r < stabs.nrows(); ++r)
            if (stabs.get(r, q)) p.col[q][r >> 6] ^= std::uint64_t{1} << (r & 63);
        if (logical && logical->get(q)) {
            std::size_t r = stabs.nrows();
            p.col[q][r >> 6] ^= std::uint64_t{1} << (r & 63);
        }
    }
    return p;
}

template <std::size_t W>
std::array<std::uint64_t, W> xor_cols(std::array<std::uint64_t, W> a,
                                      const std::array<std::uint64_t, W>& b) {
    for (std::size_t w = 0; w < W; ++w) a[w] ^= b[w];
    return a;
}

// Fixed-weight combination scan over packed columns in lexicographic support
// order, stopping at the first vector whose accumulated syndrome equals the
// target.
template <std::size_t W>
class Scanner {
public:
    Scanner(const PackedCols<W>& cols, const std::array<std::uint64_t, W>& target)
        : cols_(cols), target_(target) {}

    // Combinations whose first index is i0; empty result when no match.
    // `stop`, when set, lets concurrent shards cancel this one.
    std::optional<std::vector<std::size_t>> scan_from(std::size_t i0, std::size_t weight,
                                                      const std::atomic<bool>* stop) {
        stop_ = stop;
        cap_ = std::numeric_limits<std::uint64_t>::max();
        visited_ = 0;
        picked_.assign(1, i0);
        if (weight == 1) {
            if (cols_.col[i0] == target_) return picked_;
            return std::nullopt;
        }
        if (rec(i0 + 1, weight - 1, cols_.col[i0])) return picked_;
        return std::nullopt;
    }

    struct HuntResult {
        std::optional<std::vector<std::size_t>> combo;
        bool completed = false;  // full weight class enumerated (no early stop, no cap hit)
        std::uint64_t visited = 0;
    };

    // Sequential full-range first-hit scan at the given weight, giving up
    // once `cap` candidates have been tested.
    HuntResult hunt(std::size_t weight, std::uint64_t cap) {
        HuntResult res;
        stop_ = nullptr;
        cap_ = cap;
        visited_ = 0;
        capped_ = false;
        picked_.clear();
        if (weight == 0) {
            res.visited = 1;
            std::array<std::uint64_t, W> zero{};
            if (zero == target_) res.combo = picked_;
            res.completed = true;
            return res;
        }
        bool found = rec(0, weight, {});
        res.visited = visited_;
        if (found && !capped_) res.combo = picked_;
        res.completed = !found && !capped_;
        return res;
    }

private:
    bool rec(std::size_t start, std::size_t remaining, std::array<std::uint64_t, W> acc) {
        if (remaining == 1) {
            // innermost level: a match needs col[i] == acc ^ target
            std::array<std::uint64_t, W> want = xor_cols(acc, target_);
            for (std::size_t i = start; i < cols_.n; ++i) {
                ++visited_;
                if (cols_.col[i] == want) {
                    picked_.push_back(i);
                    return true;
                }
            }
            if (visited_ >= cap_) {
                capped_ = true;
                return true;  // unwind
            }
            return false;
        }
        for (std::size_t i = start; i + remaining <= cols_.n; ++i) {
            if (stop_ && stop_->load(std::memory_order_relaxed)) return false;
            picked_.push_back(i);
            if (rec(i + 1, remaining - 1, xor_cols(acc, cols_.col[i]))) return true;
            picked_.pop_back();
        }
        return false;
    }

    const PackedCols<W>& cols_;
    std::array<std::uint64_t, W> target_;
    const std::atomic<bool>* stop_ = nullptr;
    std::uint64_t cap_ = 0;
    std::uint64_t visited_ = 0;
    bool capped_ = false;
    std::vector<std::size_t> picked_;
};

// Full enumeration of one weight class across threads, sharded by the first
// support index.  With lex_first the lowest-first-index hit wins (shards with
// larger first index are skipped once something lighter-indexed hit); without
// it any hit aborts the remaining work.
template <std::size_t W>
std::optional<std::vector<std::size_t>> scan_weight(const PackedCols<W>& cols,
                                                    const std::array<std::uint64_t, W>& target,
                                                    std::size_t weight, unsigned nthreads,
                                                    bool lex_first) {
    if (weight == 0 || weight > cols.n) {
        if (weight == 0 && std::array<std::uint64_t, W>{} == target)
            return std::vector<std::size_t>{};
        return std::nullopt;
    }
    const std::size_t shards = cols.n - weight + 1;
    nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(shards));

    std::vector<std::optional<std::vector<std::size_t>>> results(shards);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::atomic<bool> any_hit{false};

    auto worker = [&] {
        for (;;) {
            std::size_t i0 = next.fetch_add(1, std::memory_order_relaxed);
            if (i0 >= shards) return;
            if (lex_first) {
                if (i0 > best.load(std::memory_order_relaxed)) continue;
            } else if (any_hit.load(std::memory_order_relaxed)) {
                return;
            }
            Scanner<W> scanner(cols, target);
            auto hit = scanner.scan_from(i0, weight, lex_first ? nullptr : &any_hit);
            if (hit) {
                results[i0] = std::move(hit);
                any_hit.store(true, std::memory_order_relaxed);
                std::size_t cur = best.load(std::memory_order_relaxed);
                while (i0 < cur && !best.compare_exchange_weak(cur, i0)) {
                }
            }
        }
    };

    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& r : results)
        if (r) return std::move(r);
    return std::nullopt;
}

BitVec vec_from_support(const std::vector<std::size_t>& support, std::size_t n) {
    BitVec v(n);
    for (auto i : support) v.flip(i);
    return v;
}

struct SyndromeView {
    const BitMatrix* opposing_stabs;
    const BitVec* opposite_logical;
};

SyndromeView view_for(const CssCode& code, ErrorType t) {
    if (t == ErrorType::Z) return {&code.x_stabs, &code.logical_x};
    return {&code.z_stabs, &code.logical_z};
}

template <std::size_t W>
DistanceReport distance_impl(const CssCode& code, ErrorType t, std::size_t max_weight,
                             const SearchLimits& limits) {
    SyndromeView view = view_for(code, t);
    PackedCols<W> cols = pack_columns<W>(*view.opposing_stabs, view.opposite_logical, code.n);
    std::array<std::uint64_t, W> target{};
    target[(cols.bits - 1) >> 6] = std::uint64_t{1} << ((cols.bits - 1) & 63);

    DistanceReport rep;
    rep.code = code.name;
    rep.error_type = t;

    const unsigned nthreads = effective_threads(limits);
    std::uint64_t used = 0;
    for (std::size_t w = 1; w <= max_weight; ++w) {
        std::uint64_t cnt = binom_capped(code.n, w);
        if (cnt > limits.budget - used)
            throw std::runtime_error("min_weight_logical: candidate budget exceeded at weight " +
                                     std::to_string(w));
        used += cnt;
        auto hit = scan_weight(cols, target, w, nthreads, /*lex_first=*/true);
        if (hit) {
            rep.found = true;
            rep.distance = w;
            rep.search_bound = w - 1;
            rep.witness = vec_from_support(*hit, code.n);
            return rep;
        }
    }
    rep.search_bound = max_weight;
    if (max_weight < code.n) {
        Scanner<W> scanner(cols, target);
        auto hunt = scanner.hunt(max_weight + 1, limits.budget - used);
        if (hunt.combo) {
            rep.found = true;
            rep.distance = max_weight + 1;
            rep.witness = vec_from_support(*hunt.combo, code.n);
        } else if (hunt.completed) {
            rep.search_bound = max_weight + 1;
        }
    }
    return rep;
}

template <std::size_t W>
CosetWeights coset_impl(const CssCode& code, const BitVec& syndrome, ErrorType t,
                        const SearchLimits& limits) {
    SyndromeView view = view_for(code, t);
    PackedCols<W> cols = pack_columns<W>(*view.opposing_stabs, view.opposite_logical, code.n);

    std::array<std::uint64_t, W> even_target{};
    for (std::size_t r = 0; r < syndrome.len(); ++r)
        if (syndrome.get(r)) even_target[r >> 6] ^= std::uint64_t{1} << (r & 63);
    std::array<std::uint64_t, W> odd_target = even_target;
    odd_target[(cols.bits - 1) >> 6] ^= std::uint64_t{1} << ((cols.bits - 1) & 63);

    const unsigned nthreads = effective_threads(limits);
    std::optional<std::size_t> even_min, odd_min;
    std::uint64_t used = 0;
    for (std::size_t w = 0; w <= code.n && (!even_min || !odd_min); ++w) {
        std::uint64_t cnt = binom_capped(code.n, w);
        for (int cls = 0; cls < 2; ++cls) {
            auto& found = cls ? odd_min : even_min;
            if (found) continue;
            if (cnt > limits.budget - used)
                throw std::runtime_error("coset_weights: candidate budget exceeded");
            used += cnt;
            if (scan_weight(cols, cls ? odd_target : even_target, w, nthreads,
                            /*lex_first=*/false))
                found = w;
        }
    }
    if (!even_min || !odd_min)
        throw std::runtime_error("coset_weights: no representative found (inconsistent input)");
    // the decoder picks the lighter class; the other is the logically shifted one
    return {std::min(*even_min, *odd_min), std::max(*even_min, *odd_min)};
}

template <std::size_t W>
BitVec leader_impl(const CssCode& code, const BitVec& syndrome, ErrorType t,
                   const SearchLimits& limits) {
    SyndromeView view = view_for(code, t);
    PackedCols<W> cols = pack_columns<W>(*view.opposing_stabs, nullptr, code.n);
    std::array<std::uint64_t, W> target{};
    for (std::size_t r = 0; r < syndrome.len(); ++r)
        if (syndrome.get(r)) target[r >> 6] ^= std::uint64_t{1} << (r & 63);

    const unsigned nthreads = effective_threads(limits);
    std::uint64_t used = 0;
    for (std::size_t w = 0; w <= code.n; ++w) {
        std::uint64_t cnt = binom_capped(code.n, w);
        if (cnt > limits.budget - used)
            throw std::runtime_error("coset_leader: candidate budget exceeded");
        used += cnt;
        if (auto hit = scan_weight(cols, target, w, nthreads, /*lex_first=*/true))
            return vec_from_support(*hit, code.n);
    }
    throw std::logic_error("coset_leader: reachable syndrome had no representative");
}

// Bulk table recursion: plain single-word syndrome index plus a class bit.
class TableBuilder {
public:
    TableBuilder(std::vector<std::uint32_t> cols, std::size_t bits, CosetTable& out)
        : cols_(std::move(cols)), mask_((std::uint32_t{1} << bits) - 1), bits_(bits), out_(out) {}

    void run(std::size_t max_weight) {
        record(0, 0);
        for (std::size_t w = 1; w <= std::min(max_weight, cols_.size()); ++w) {
            weight_ = static_cast<std::uint8_t>(w);
            rec(0, w, 0);
        }
    }

private:
    void record(std::uint32_t acc, std::uint8_t w) {
        std::uint32_t s = acc & mask_;
        auto& slot = (acc >> bits_) & 1 ? out_.odd_min[s] : out_.even_min[s];
        if (slot == 255) slot = w;
    }

    void rec(std::size_t start, std::size_t remaining, std::uint32_t acc) {
        if (remaining == 1) {
            for (std::size_t i = start; i < cols_.size(); ++i) record(acc ^ cols_[i], weight_);
            return;
        }
        for (std::size_t i = start; i + remaining <= cols_.size(); ++i)
            rec(i + 1, remaining - 1, acc ^ cols_[i]);
    }

    std::vector<std::uint32_t> cols_;
    std::uint32_t mask_;
    std::size_t bits_;
    CosetTable& out_;
    std::uint8_t weight_ = 0;
};

}  // namespace

char to_char(ErrorType t) { return t == ErrorType::X ? 'X' : 'Z'; }

ErrorType error_type_from(std::string_view s) {
    if (s == "X" || s == "x") return ErrorType::X;
    if (s == "Z" || s == "z") return ErrorType::Z;
    throw std::invalid_argument("error type must be X or Z");
}

DistanceReport min_weight_logical(const CssCode& code, ErrorType t, std::size_t max_weight,
                                  const SearchLimits& limits) {
    if (max_weight > code.n)
        throw std::invalid_argument("min_weight_logical: max_weight exceeds qubit count");
    SyndromeView view = view_for(code, t);
    std::size_t bits = view.opposing_stabs->nrows() + 1;
    if (bits <= 64) return distance_impl<1>(code, t, max_weight, limits);
    if (bits <= 128) return distance_impl<2>(code, t, max_weight, limits);
    throw std::invalid_argument("min_weight_logical: too many stabilizer rows");
}

CosetWeights coset_weights(const CssCode& code, const BitVec& syndrome, ErrorType t,
                           const SearchLimits& limits) {
    SyndromeView view = view_for(code, t);
    if (syndrome.len() != view.opposing_stabs->nrows())
        throw std::invalid_argument("coset_weights: syndrome length mismatch");
    // reject unreachable syndromes up front: s must lie in the column space
    BitMatrix cols_t(0, view.opposing_stabs->nrows());
    for (std::size_t q = 0; q < code.n; ++q) {
        BitVec col(view.opposing_stabs->nrows());
        for (std::size_t r = 0; r < view.opposing_stabs->nrows(); ++r)
            if (view.opposing_stabs->get(r, q)) col.flip(r);
        cols_t.append_row(std::move(col));
    }
    if (!gf2::in_span(syndrome, cols_t))
        throw std::invalid_argument("coset_weights: syndrome is not achievable");

    std::size_t bits = view.opposing_stabs->nrows() + 1;
    if (bits <= 64) return coset_impl<1>(code, syndrome, t, limits);
    if (bits <= 128) return coset_impl<2>(code, syndrome, t, limits);
    throw std::invalid_argument("coset_weights: too many stabilizer rows");
}

BitVec coset_leader(const CssCode& code, const BitVec& syndrome, ErrorType t,
                    const SearchLimits& limits) {
    SyndromeView view = view_for(code, t);
    if (syndrome.len() != view.opposing_stabs->nrows())
        throw std::invalid_argument("coset_leader: syndrome length mismatch");
    BitMatrix cols_t(0, view.opposing_stabs->nrows());
    for (std::size_t q = 0; q < code.n; ++q) {
        BitVec col(view.opposing_stabs->nrows());
        for (std::size_t r = 0; r < view.opposing_stabs->nrows(); ++r)
            if (view.opposing_stabs->get(r, q)) col.flip(r);
        cols_t.append_row(std::move(col));
    }
    if (!gf2::in_span(syndrome, cols_t))
        throw std::invalid_argument("coset_leader: syndrome is not achievable");

    std::size_t bits = view.opposing_stabs->nrows();
    if (bits <= 64) return leader_impl<1>(code, syndrome, t, limits);
    if (bits <= 128) return leader_impl<2>(code, syndrome, t, limits);
    throw std::invalid_argument("coset_leader: too many stabilizer rows");
}

CosetTable coset_weight_table(const CssCode& code, ErrorType t, std::size_t max_weight,
                              const SearchLimits& limits) {
    SyndromeView view = view_for(code, t);
    std::size_t bits = view.opposing_stabs->nrows();
    if (bits > 22) throw std::invalid_argument("coset_weight_table: syndrome space too large");

    std::uint64_t total = 1;
    for (std::size_t w = 1; w <= max_weight; ++w) {
        std::uint64_t cnt = binom_capped(code.n, w);
        if (cnt > limits.budget - total)
            throw std::runtime_error("coset_weight_table: candidate budget exceeded");
        total += cnt;
    }

    CosetTable table;
    table.syndrome_bits = bits;
    table.even_min.assign(std::size_t{1} << bits, 255);
    table.odd_min.assign(std::size_t{1} << bits, 255);

    std::vector<std::uint32_t> cols(code.n, 0);
    for (std::size_t q = 0; q < code.n; ++q) {
        for (std::size_t r = 0; r < bits; ++r)
            if (view.opposing_stabs->get(r, q)) cols[q] ^= std::uint32_t{1} << r;
        if (view.opposite_logical->get(q)) cols[q] ^= std::uint32_t{1} << bits;
    }
    TableBuilder builder(std::move(cols), bits, table);
    builder.run(max_weight);
    return table;
}

TGateCertificate t_gate_certificate(const codes::TriorthogonalCode& code, std::uint64_t budget) {
    // independent generating set for the X-stabilizer span
    std::vector<BitVec> gens;
    gf2::Span span(code.n);
    for (std::size_t r = 0; r < code.b0.nrows(); ++r)
        if (span.add(code.b0.row(r))) gens.push_back(code.b0.row(r));

    if (gens.size() >= 63 || (std::uint64_t{1} << gens.size()) > budget)
        throw std::runtime_error("t_gate_certificate: enumeration budget exceeded");

    std::vector<std::size_t> gen_weight(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) gen_weight[g] = gens[g].weight();

    auto residues = [&](const BitVec& start) {
        BitVec cur = start;
        std::size_t w = cur.weight();
        unsigned seen = 1u << (w & 7);
        const std::uint64_t end = std::uint64_t{1} << gens.size();
        for (std::uint64_t s = 1; s < end; ++s) {
            unsigned g = static_cast<unsigned>(std::countr_zero(s));
            w += gen_weight[g] - 2 * BitVec::overlap_weight(cur, gens[g]);
            cur ^= gens[g];
            seen |= 1u << (w & 7);
        }
        std::vector<int> vals;
        for (int r = 0; r < 8; ++r)
            if (seen >> r & 1) vals.push_back(r);
        return vals;
    };

    TGateCertificate cert;
    cert.code = code.name;
    cert.coset0_residues = residues(BitVec(code.n));
    cert.coset1_residues = residues(code.b1.row(0));
    cert.diagonal = cert.coset0_residues.size() == 1 && cert.coset1_residues.size() == 1;
    if (cert.diagonal)
        cert.logical_phase_exponent =
            ((cert.coset1_residues[0] - cert.coset0_residues[0]) % 8 + 8) % 8;
    return cert;
}

}  // namespace dtc::analysis
