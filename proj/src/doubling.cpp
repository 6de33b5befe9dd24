#include "doubling.hpp"

#include <stdexcept>

#include "analysis.hpp"

namespace dtc::doubling {

namespace {

BitVec cat3(const BitVec& a, const BitVec& b, const BitVec& c) {
    return a.concat(b).concat(c);
}

BitMatrix lowweight_basis(const SelfDualCss& sd, const TriorthogonalCode& tri) {
    const std::size_t ns = sd.n, nt = tri.n, n = 2 * ns + nt;

    // minimum-weight logical Z of the inner code, full stabilizer equivalence
    std::size_t bound = tri.d ? *tri.d : tri.n;
    auto report = analysis::min_weight_logical(codes::as_css(tri), analysis::ErrorType::Z, bound);
    if (!report.found)
        throw std::runtime_error("complement_lowweight: no inner logical-Z found within bound");

    BitMatrix m(0, n);
    for (std::size_t i = 0; i + 1 < ns; ++i) {
        BitVec pair(ns);
        pair.flip(i);
        pair.flip(i + 1);
        m.append_row(cat3(pair, pair, BitVec(nt)));
    }
    for (std::size_t r = 0; r < sd.b0.nrows(); ++r)
        m.append_row(cat3(sd.b0.row(r), BitVec(ns), BitVec(nt)));
    m.append_row(cat3(BitVec(ns), sd.b1.row(0), report.witness));
    for (std::size_t r = 0; r < tri.b0.nrows(); ++r)
        m.append_row(cat3(BitVec(ns), BitVec(ns), tri.b0.row(r)));
    for (std::size_t r = 0; r < tri.c.nrows(); ++r)
        m.append_row(cat3(BitVec(ns), BitVec(ns), tri.c.row(r)));
    return m;
}

}  // namespace

BlockParts double_blocks(const BitMatrix& sd_b1, const BitMatrix& sd_b0, const BitMatrix& tri_b1,
                         const BitMatrix& tri_b0) {
    if (sd_b1.nrows() != 1 || tri_b1.nrows() != 1)
        throw std::invalid_argument("double_blocks: logical blocks must have exactly one row");
    const std::size_t ns = sd_b1.ncols(), nt = tri_b1.ncols();
    if (sd_b0.nrows() > 0 && sd_b0.ncols() != ns)
        throw std::invalid_argument("double_blocks: sd stabilizer width mismatch");
    if (tri_b0.nrows() > 0 && tri_b0.ncols() != nt)
        throw std::invalid_argument("double_blocks: tri stabilizer width mismatch");

    const std::size_t n = 2 * ns + nt;
    BlockParts parts;
    parts.b1 = BitMatrix(0, n);
    parts.b1.append_row(cat3(sd_b1.row(0), sd_b1.row(0), tri_b1.row(0)));
    parts.b0 = BitMatrix(0, n);
    for (std::size_t r = 0; r < sd_b0.nrows(); ++r)
        parts.b0.append_row(cat3(sd_b0.row(r), sd_b0.row(r), BitVec(nt)));
    parts.b0.append_row(cat3(BitVec(ns), BitVec::ones(ns), tri_b1.row(0)));
    for (std::size_t r = 0; r < tri_b0.nrows(); ++r)
        parts.b0.append_row(cat3(BitVec(ns), BitVec(ns), tri_b0.row(r)));
    return parts;
}

DoubledCode double_code(const SelfDualCss& sd, const TriorthogonalCode& tri) {
    codes::validate(sd);
    codes::validate(tri);

    const std::size_t ns = sd.n, nt = tri.n, n = 2 * ns + nt;
    BlockParts parts = double_blocks(sd.b1, sd.b0, tri.b1, tri.b0);

    DoubledCode d;
    d.sd = sd;
    d.tri = tri;
    d.base.n = n;
    d.base.name = "doubled(" + sd.name + "," + tri.name + ")";
    d.base.b1 = std::move(parts.b1);
    d.base.b0 = std::move(parts.b0);
    if (sd.d && tri.d) d.base.d = predicted_distance(*sd.d, *tri.d);

    d.base.c = BitMatrix(0, n);
    for (std::size_t r = 0; r < sd.b0.nrows(); ++r)
        d.base.c.append_row(cat3(sd.b0.row(r), BitVec(ns), BitVec(nt)));
    for (std::size_t r = 0; r < sd.e.nrows(); ++r)
        d.base.c.append_row(cat3(sd.e.row(r), sd.e.row(r), BitVec(nt)));
    for (std::size_t r = 0; r < tri.c.nrows(); ++r)
        d.base.c.append_row(cat3(BitVec(ns), BitVec(ns), tri.c.row(r)));

    codes::validate(d.base);

    d.complement_std = gf2::vstack(d.base.b0, d.base.c);
    d.complement_lowweight = lowweight_basis(sd, tri);
    return d;
}

const BitMatrix& complement_standard(const DoubledCode& d) { return d.complement_std; }

const BitMatrix& complement_lowweight(const DoubledCode& d) { return d.complement_lowweight; }

BitMatrix z_only_block(const BitMatrix& b0, const BitMatrix& basis) {
    if (b0.ncols() != basis.ncols())
        throw std::invalid_argument("z_only_block: column count mismatch");
    gf2::Span seen(b0.ncols());
    for (std::size_t r = 0; r < b0.nrows(); ++r) seen.add(b0.row(r));
    BitMatrix out(0, basis.ncols());
    for (std::size_t r = 0; r < basis.nrows(); ++r)
        if (seen.add(basis.row(r))) out.append_row(basis.row(r));
    return out;
}

std::size_t predicted_distance(std::size_t sd_d, std::size_t tri_d) {
    if (sd_d < 1 || tri_d < 1)
        throw std::invalid_argument("predicted_distance: distances must be at least 1");
    return std::min(sd_d, tri_d + 2);
}

}  // namespace dtc::doubling
