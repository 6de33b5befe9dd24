#pragma once

#include "codes.hpp"

// Doubling constructor: two blocks of a self-dual code plus one block of a
// smaller triorthogonal code yield a larger triorthogonal code, raising the
// orthogonality level of the stacked generator matrix by one.
namespace dtc::doubling {

using codes::SelfDualCss;
using codes::TriorthogonalCode;
using gf2::BitMatrix;
using gf2::BitVec;

struct DoubledCode {
    TriorthogonalCode base;          // the constructed code
    SelfDualCss sd;                  // outer input, kept for the complement builders
    TriorthogonalCode tri;           // inner input, kept for the complement builders
    BitMatrix complement_std;        // separated layout, see complement_standard
    BitMatrix complement_lowweight;  // mixed layout, see complement_lowweight
};

// Raw generator assembly: b1 = (sd_b1 | sd_b1 | tri_b1), b0 rows
// (sd_b0 | sd_b0 | 0), (0 | 1 | tri_b1), (0 | 0 | tri_b0).  Exposed so the
// orthogonality-raising step can be iterated on inputs that are not
// self-dual codes (e.g. doubling an already-doubled code once more).
struct BlockParts {
    BitMatrix b1;
    BitMatrix b0;
};
BlockParts double_blocks(const BitMatrix& sd_b1, const BitMatrix& sd_b0, const BitMatrix& tri_b1,
                         const BitMatrix& tri_b0);

// Validates inputs, assembles the doubled code, and computes both complement
// bases.  base.c holds the separated layout's Z-only rows.
DoubledCode double_code(const SelfDualCss& sd, const TriorthogonalCode& tri);

// Complement basis separating rows with X counterparts from Z-only rows:
// the three stabilizer blocks, then (sd_b0 | 0 | 0), (sd_e | sd_e | 0),
// (0 | 0 | tri_c).
const BitMatrix& complement_standard(const DoubledCode& d);

// Lower-weight complement basis: (m | m | 0) with m the adjacent
// weight-2 generators of the even subspace, (sd_b0 | 0 | 0),
// (0 | sd_b1 | min-weight tri logical Z), (0 | 0 | tri complement).
const BitMatrix& complement_lowweight(const DoubledCode& d);

// Carves the Z-only block out of a full Z-stabilizer basis: keeps, in
// order, the basis rows that grow the span beyond b0, so stacking the
// result under b0 reproduces the basis span with independent rows.  Rows
// are kept verbatim, preserving whatever weight profile the basis has.
BitMatrix z_only_block(const BitMatrix& b0, const BitMatrix& basis);

// min(sd_d, tri_d + 2)
std::size_t predicted_distance(std::size_t sd_d, std::size_t tri_d);

}  // namespace dtc::doubling
