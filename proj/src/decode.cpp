#include "decode.hpp"

#include <cstdint>
#include <stdexcept>

#include "analysis.hpp"
#include "codes.hpp"

namespace dtc::decode {

using gf2::BitMatrix;
using gf2::BitVec;

namespace {

BitVec subrange(const BitVec& v, std::size_t begin, std::size_t count) {
    BitVec out(count);
    for (std::size_t i = 0; i < count; ++i)
        if (v.get(begin + i)) out.flip(i);
    return out;
}

BitVec place(const BitVec& sub, std::size_t offset, std::size_t n) {
    BitVec out(n);
    for (std::size_t i = 0; i < sub.len(); ++i)
        if (sub.get(i)) out.flip(offset + i);
    return out;
}

std::uint32_t pack_bits(const BitVec& v) {
    std::uint32_t s = 0;
    for (std::size_t r = 0; r < v.len(); ++r)
        if (v.get(r)) s |= std::uint32_t{1} << r;
    return s;
}

BitVec unpack_bits(std::uint32_t s, std::size_t len) {
    BitVec v(len);
    for (std::size_t r = 0; r < len; ++r)
        if (s >> r & 1u) v.flip(r);
    return v;
}

BitVec vec_from_mask(std::uint32_t mask, std::size_t n) {
    BitVec v(n);
    for (std::size_t q = 0; q < n; ++q)
        if (mask >> q & 1u) v.flip(q);
    return v;
}

// Minimum-weight coset representative per syndrome and weight-parity class
// (the codes here all have all-ones logicals, so weight parity is the class).
// Ascending-weight enumeration makes the first write the minimum and the
// stored representative lexicographically first.
struct ClassTable {
    std::size_t bits = 0;
    std::vector<std::uint32_t> rep[2];
    std::vector<std::uint8_t> wt[2];
};

ClassTable build_class_table(const BitMatrix& stabs, std::size_t max_weight) {
    const std::size_t n = stabs.ncols(), bits = stabs.nrows();
    if (n > 32 || bits > 16) throw std::logic_error("class table: block too large");

    std::vector<std::uint32_t> cols(n, 0);
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < bits; ++r)
            if (stabs.get(r, q)) cols[q] |= std::uint32_t{1} << r;

    ClassTable t;
    t.bits = bits;
    for (int c = 0; c < 2; ++c) {
        t.rep[c].assign(std::size_t{1} << bits, 0);
        t.wt[c].assign(std::size_t{1} << bits, 255);
    }
    t.wt[0][0] = 0;

    std::uint8_t weight = 0;
    auto record = [&](std::uint32_t syn, std::uint32_t mask) {
        auto& slot = t.wt[weight & 1][syn];
        if (slot == 255) {
            slot = weight;
            t.rep[weight & 1][syn] = mask;
        }
    };
    auto rec = [&](auto&& self, std::size_t start, std::size_t remaining, std::uint32_t syn,
                   std::uint32_t mask) -> void {
        if (remaining == 1) {
            for (std::size_t q = start; q < n; ++q)
                record(syn ^ cols[q], mask | (std::uint32_t{1} << q));
            return;
        }
        for (std::size_t q = start; q + remaining <= n; ++q)
            self(self, q + 1, remaining - 1, syn ^ cols[q], mask | (std::uint32_t{1} << q));
    };
    for (weight = 1; weight <= max_weight; ++weight) rec(rec, 0, weight, 0, 0);
    return t;
}

TableResult lookup(const ClassTable& t, const BitVec& syndrome, std::size_t n) {
    std::uint32_t s = pack_bits(syndrome);
    std::uint8_t w0 = t.wt[0][s], w1 = t.wt[1][s];
    if (w0 == 255 || w1 == 255)
        throw std::logic_error("decode table: syndrome class not covered");
    TableResult res;
    int pick = w0 < w1 ? 0 : 1;  // parities differ, so never equal
    res.correction = vec_from_mask(t.rep[pick][s], n);
    res.wE = std::min(w0, w1);
    res.wEL = std::max(w0, w1);
    return res;
}

const ClassTable& golay_table() {
    static const ClassTable t = [] {
        auto code = std::get<codes::SelfDualCss>(codes::catalog("golay23"));
        ClassTable t = build_class_table(code.b0, 3);
        for (std::size_t s = 0; s < t.wt[0].size(); ++s)
            if (std::min(t.wt[0][s], t.wt[1][s]) > 3)
                throw std::logic_error("golay table: syndrome beyond the covering radius");
        return t;
    }();
    return t;
}

const ClassTable& color17_table() {
    static const ClassTable t = [] {
        auto code = std::get<codes::SelfDualCss>(codes::catalog("color17"));
        ClassTable t = build_class_table(code.b0, 5);
        for (std::size_t s = 0; s < t.wt[0].size(); ++s)
            if (t.wt[0][s] == 255 || t.wt[1][s] == 255)
                throw std::logic_error("color17 table: class not covered at weight 5");
        return t;
    }();
    return t;
}

const ClassTable& rm15_table() {
    static const ClassTable t = [] {
        auto code = std::get<codes::TriorthogonalCode>(codes::catalog("rm15"));
        ClassTable t = build_class_table(code.b0, 3);
        for (std::size_t s = 0; s < t.wt[0].size(); ++s)
            if (t.wt[0][s] == 255 || t.wt[1][s] == 255)
                throw std::logic_error("rm15 table: class not covered at weight 3");
        return t;
    }();
    return t;
}

const codes::CssCode& tri49_css() {
    static const codes::CssCode css = codes::as_css(codes::catalog("tri49"));
    return css;
}

const codes::CssCode& tri95_css() {
    static const codes::CssCode css = codes::as_css(codes::catalog("tri95"));
    return css;
}

// logical = odd-weight vector with zero syndrome against `stabs`
BitVec shared_logical(const BitMatrix& stabs, std::size_t expected_weight) {
    codes::CssCode view;
    view.n = stabs.ncols();
    view.x_stabs = stabs;
    view.z_stabs = stabs;
    view.logical_x = BitVec::ones(view.n);
    view.logical_z = view.logical_x;
    auto rep = analysis::min_weight_logical(view, analysis::ErrorType::Z, expected_weight);
    if (!rep.found || rep.distance != expected_weight)
        throw std::logic_error("shared logical representative has unexpected weight");
    return rep.witness;
}

}  // namespace

std::string to_string(Rule rule) {
    switch (rule) {
        case Rule::none: return "none";
        case Rule::move: return "move";
        case Rule::plus2: return "plus2";
        case Rule::plusL: return "plusL";
    }
    throw std::logic_error("to_string: bad rule");
}

GolayResult decode_golay(const BitVec& syndrome) {
    if (syndrome.len() != 11) throw std::invalid_argument("decode_golay: syndrome must be 11 bits");
    const ClassTable& t = golay_table();
    std::uint32_t s = pack_bits(syndrome);
    int pick = t.wt[0][s] < t.wt[1][s] ? 0 : 1;
    GolayResult res;
    res.correction = vec_from_mask(t.rep[pick][s], 23);
    res.weight = std::min(t.wt[0][s], t.wt[1][s]);
    return res;
}

TableResult decode_color17(const BitVec& syndrome) {
    if (syndrome.len() != 8) throw std::invalid_argument("decode_color17: syndrome must be 8 bits");
    return lookup(color17_table(), syndrome, 17);
}

TableResult decode_rm15_shared(const BitVec& syndrome) {
    if (syndrome.len() != 4)
        throw std::invalid_argument("decode_rm15_shared: syndrome must be 4 bits");
    return lookup(rm15_table(), syndrome, 15);
}

const BitMatrix& shared_stabilizers49() {
    static const BitMatrix m = std::get<codes::TriorthogonalCode>(codes::catalog("tri49")).b0;
    return m;
}

const BitMatrix& shared_stabilizers95() {
    static const BitMatrix m = std::get<codes::TriorthogonalCode>(codes::catalog("tri95")).b0;
    return m;
}

const BitVec& logical_rep_rm15() {
    static const BitVec v =
        shared_logical(std::get<codes::TriorthogonalCode>(codes::catalog("rm15")).b0, 3);
    return v;
}

const BitVec& logical_rep_tri49() {
    static const BitVec v = shared_logical(shared_stabilizers49(), 5);
    return v;
}

SharedDecode decode_shared49(const BitVec& syndrome) {
    if (syndrome.len() != 13)
        throw std::invalid_argument("decode_shared49: syndrome must be 13 bits");
    TableResult color = decode_color17(subrange(syndrome, 0, 8));
    TableResult rm = decode_rm15_shared(subrange(syndrome, 9, 4));

    SharedDecode dec;
    dec.correction = place(color.correction, 0, 49) ^ place(rm.correction, 34, 49);
    dec.components = {{"color-1", color.correction}, {"rm", rm.correction}};

    bool parity_left = syndrome.get(8) ^ (rm.correction.weight() & 1);
    if (parity_left) {
        if (color.correction.weight() >= 1) {
            dec.rule = Rule::move;
            std::size_t q = color.correction.lowest_set();
            dec.correction.flip(q);
            dec.correction.flip(17 + q);
        } else if (rm.wE + 2 <= rm.wEL) {
            dec.rule = Rule::plus2;
            dec.correction.flip(0);
            dec.correction.flip(17);
        } else {
            dec.rule = Rule::plusL;
            dec.correction ^= place(logical_rep_rm15(), 34, 49);
        }
    }
    return dec;
}

SharedDecode decode_shared95(const BitVec& syndrome) {
    if (syndrome.len() != 25)
        throw std::invalid_argument("decode_shared95: syndrome must be 25 bits");
    GolayResult golay = decode_golay(subrange(syndrome, 0, 11));
    SharedDecode inner = decode_shared49(subrange(syndrome, 12, 13));

    SharedDecode dec;
    dec.correction = place(golay.correction, 0, 95) ^ place(inner.correction, 46, 95);
    dec.components = {{"golay-1", golay.correction}, {"tri49", inner.correction}};

    bool parity_left = syndrome.get(11) ^ (inner.correction.weight() & 1);
    if (parity_left) {
        if (golay.weight >= 1) {
            dec.rule = Rule::move;
            std::size_t q = golay.correction.lowest_set();
            dec.correction.flip(q);
            dec.correction.flip(23 + q);
        } else if (inner.correction.weight() <= 1) {
            dec.rule = Rule::plus2;
            dec.correction.flip(0);
            dec.correction.flip(23);
        } else {
            dec.rule = Rule::plusL;
            dec.correction ^= place(logical_rep_tri49(), 46, 95);
        }
    }
    return dec;
}

namespace {

CorrectionPlan plan_for(const codes::CssCode& css, const SyndromePair& sp,
                        SharedDecode (*shared)(const BitVec&)) {
    const std::size_t shared_rows = css.x_stabs.nrows();
    if (sp.x_syndrome.len() != shared_rows)
        throw std::invalid_argument("decode: x_syndrome length mismatch");

    CorrectionPlan plan;
    SharedDecode zdec = shared(sp.x_syndrome);
    plan.z_correction = std::move(zdec.correction);
    plan.z_rule = zdec.rule;
    plan.z_components = std::move(zdec.components);

    if (sp.stabilizer_set == StabilizerSet::shared_only) {
        if (sp.z_syndrome.len() != shared_rows)
            throw std::invalid_argument("decode: z_syndrome length mismatch");
        SharedDecode xdec = shared(sp.z_syndrome);
        plan.x_correction = std::move(xdec.correction);
        plan.x_rule = xdec.rule;
        plan.x_components = std::move(xdec.components);
    } else {
        if (sp.z_syndrome.len() != css.z_stabs.nrows())
            throw std::invalid_argument("decode: z_syndrome length mismatch");
        plan.x_correction = analysis::coset_leader(css, sp.z_syndrome, analysis::ErrorType::X);
        plan.x_rule = Rule::none;
        plan.x_components = {{"full", plan.x_correction}};
    }
    return plan;
}

}  // namespace

CorrectionPlan decode_tri49(const SyndromePair& syndromes) {
    return plan_for(tri49_css(), syndromes, &decode_shared49);
}

CorrectionPlan decode_tri95(const SyndromePair& syndromes) {
    return plan_for(tri95_css(), syndromes, &decode_shared95);
}

std::vector<TableRow> table_tri49() {
    codes::CssCode view;
    view.n = 49;
    view.x_stabs = shared_stabilizers49();
    view.z_stabs = view.x_stabs;
    view.logical_x = BitVec::ones(49);
    view.logical_z = view.logical_x;
    analysis::CosetTable oracle = analysis::coset_weight_table(view, analysis::ErrorType::Z, 5);

    struct Bucket {
        bool seen = false;
        std::size_t wE = 0, wEL = 0;
        std::uint32_t rep_syndrome = 0;
    };
    Bucket buckets[4][2][2];

    for (std::uint32_t s = 0; s < (1u << 13); ++s) {
        std::size_t cc = decode_color17(unpack_bits(s & 0xff, 8)).wE;
        std::size_t rc = decode_rm15_shared(unpack_bits(s >> 9 & 0xf, 4)).wE;
        if (cc > 3 || rc > 1) throw std::logic_error("table_tri49: block weight out of range");
        bool par = ((s >> 8 & 1) ^ (rc & 1)) != 0;

        std::uint8_t e = oracle.even_min[s], o = oracle.odd_min[s];
        if (e == 255 || o == 255) throw std::logic_error("table_tri49: syndrome not covered");
        std::size_t wE = std::min(e, o), wEL = std::max(e, o);

        Bucket& b = buckets[cc][rc][par];
        if (!b.seen) {
            b = {true, wE, wEL, s};
        } else if (b.wE != wE || b.wEL != wEL) {
            throw std::logic_error("table_tri49: weights differ within a bucket");
        }
    }

    std::vector<TableRow> rows;
    for (std::size_t cc = 0; cc < 4; ++cc)
        for (std::size_t rc = 0; rc < 2; ++rc)
            for (int par = 0; par < 2; ++par) {
                const Bucket& b = buckets[cc][rc][par];
                if (!b.seen) throw std::logic_error("table_tri49: empty bucket");
                TableRow row;
                row.outer_weight = cc;
                row.inner_weight = rc;
                row.parity_violated = par != 0;
                row.rule = decode_shared49(unpack_bits(b.rep_syndrome, 13)).rule;
                row.wE = b.wE;
                row.wEL = b.wEL;
                rows.push_back(row);
            }
    return rows;
}

std::vector<TableRow> table_tri95() {
    // representative inner syndromes for each decoded weight 0..4
    std::uint32_t inner_rep[5];
    bool have[5] = {false, false, false, false, false};
    for (std::uint32_t s = 0; s < (1u << 13) && !(have[0] && have[1] && have[2] && have[3] && have[4]);
         ++s) {
        std::size_t w = decode_shared49(unpack_bits(s, 13)).correction.weight();
        if (w <= 4 && !have[w]) {
            have[w] = true;
            inner_rep[w] = s;
        }
    }
    for (bool h : have)
        if (!h) throw std::logic_error("table_tri95: missing inner-weight representative");

    auto make_syndrome = [](const BitVec& golay_syn, bool parity_bit, std::uint32_t inner) {
        BitVec s(25);
        for (std::size_t r = 0; r < 11; ++r)
            if (golay_syn.get(r)) s.flip(r);
        if (parity_bit) s.flip(11);
        for (std::size_t r = 0; r < 13; ++r)
            if (inner >> r & 1u) s.flip(12 + r);
        return s;
    };

    std::vector<TableRow> rows;
    BitVec golay_zero(11);
    for (std::size_t t = 0; t <= 4; ++t)
        for (int par = 0; par < 2; ++par) {
            // the check fails when the measured correlating bit disagrees with
            // the decoded inner weight's parity
            bool bit = ((t & 1) != 0) != (par != 0);
            SharedDecode dec = decode_shared95(make_syndrome(golay_zero, bit, inner_rep[t]));
            TableRow row;
            row.outer_weight = 0;
            row.inner_weight = t;
            row.parity_violated = par != 0;
            row.rule = dec.rule;
            rows.push_back(row);
        }

    // any nonzero Golay block weight behaves the same; use a single-qubit case
    BitVec golay_one(11);
    const BitMatrix g = std::get<codes::SelfDualCss>(codes::catalog("golay23")).b0;
    for (std::size_t r = 0; r < 11; ++r)
        if (g.get(r, 0)) golay_one.flip(r);
    for (int par = 0; par < 2; ++par) {
        SharedDecode dec = decode_shared95(make_syndrome(golay_one, par != 0, inner_rep[0]));
        TableRow row;
        row.outer_weight = 1;
        row.inner_weight = 0;
        row.parity_violated = par != 0;
        row.rule = dec.rule;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace dtc::decode
