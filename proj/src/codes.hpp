#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gf2.hpp"

// CSS code data model: self-dual codes (one odd logical row, even stabilizer
// rows, even-weight completion), triorthogonal codes (extra Z stabilizers),
// and the flat X/Z view consumed by decoders and the simulator.
namespace dtc::codes {

using gf2::BitMatrix;
using gf2::BitVec;

struct SelfDualCss {
    std::size_t n = 0;
    BitMatrix b1;  // single odd-weight logical row
    BitMatrix b0;  // k even-weight stabilizer rows, n = 2k + 1
    BitMatrix e;   // even-weight completion of [b1; b0] to a full basis
    std::optional<std::size_t> d;
    std::string name;
};

struct TriorthogonalCode {
    std::size_t n = 0;
    BitMatrix b1;  // single odd-weight logical row
    BitMatrix b0;  // stabilizer rows with X and Z counterparts
    BitMatrix c;   // Z-only stabilizer rows; [b0; c] spans the complement of [b1; b0]
    std::optional<std::size_t> d;
    std::string name;
};

using Code = std::variant<SelfDualCss, TriorthogonalCode>;

struct CssCode {
    std::size_t n = 0;
    BitMatrix x_stabs;
    BitMatrix z_stabs;
    BitVec logical_x;
    BitVec logical_z;
    std::string name;
};

// Every set of j distinct rows, 2 <= j <= k, has even-weight entrywise AND.
// k must be 2, 3, or 4.
bool is_k_orthogonal(const BitMatrix& m, int k);

// Throw std::invalid_argument describing the first violated invariant.
void validate(const SelfDualCss& code);
void validate(const TriorthogonalCode& code);
void validate(const Code& code);

const std::vector<std::string>& catalog_names();
Code catalog(std::string_view name);

// 1-qubit placeholder: b1 = [1], no stabilizers.  Not a catalog entry; it
// exists so the doubling constructor's degenerate case is expressible.
TriorthogonalCode trivial1();

CssCode as_css(const Code& code);
CssCode as_css(const SelfDualCss& code);
CssCode as_css(const TriorthogonalCode& code);

// Stacked [b1; b0] generator view.
BitMatrix b_matrix(const Code& code);

// Text format: header `css n=<n>`, then sections B1, B0, and E (self-dual)
// or C (triorthogonal), each a run of 0/1 rows.
Code parse_code_text(std::string_view text);
std::string to_code_text(const Code& code);

std::size_t code_n(const Code& code);
const std::string& code_name(const Code& code);

// Checksum over all catalog matrices, pinned in tests.
std::uint64_t catalog_checksum();

}  // namespace dtc::codes
