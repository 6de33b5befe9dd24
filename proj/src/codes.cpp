#include "codes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "catalog_text.hpp"

namespace dtc::codes {

namespace {

void check(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

BitVec cat3(const BitVec& a, const BitVec& b, const BitVec& c) {
    return a.concat(b).concat(c);
}

// Sections of the printed generator texts: row 0 is the logical, the rest are
// stabilizer rows.
struct SplitB {
    BitMatrix b1;
    BitMatrix b0;
};

SplitB split_logical(const char* text) {
    BitMatrix all = BitMatrix::from_text(text);
    SplitB out;
    out.b1 = BitMatrix(0, all.ncols());
    out.b0 = BitMatrix(0, all.ncols());
    out.b1.append_row(all.row(0));
    for (std::size_t r = 1; r < all.nrows(); ++r) out.b0.append_row(all.row(r));
    return out;
}

SelfDualCss make_golay23() {
    auto [b1, b0] = split_logical(catalog_text::golay23_b);
    return {23, std::move(b1), std::move(b0), BitMatrix::from_text(catalog_text::golay23_e), 7,
            "golay23"};
}

SelfDualCss make_color17() {
    auto [b1, b0] = split_logical(catalog_text::color17_b);
    return {17, std::move(b1), std::move(b0), BitMatrix::from_text(catalog_text::color17_e), 5,
            "color17"};
}

TriorthogonalCode make_rm15() {
    auto [b1, b0] = split_logical(catalog_text::rm15_b);
    return {15, std::move(b1), std::move(b0), BitMatrix::from_text(catalog_text::rm15_c), 3,
            "rm15"};
}

SelfDualCss make_steane7() {
    // Hamming(7,4) parity checks as both X and Z stabilizers.
    BitMatrix b1 = BitMatrix::from_text("1111111");
    BitMatrix b0 = BitMatrix::from_text(
        "1010101\n"
        "0110011\n"
        "0001111\n");
    BitMatrix e = gf2::complete_even_basis(gf2::vstack(b1, b0));
    return {7, std::move(b1), std::move(b0), std::move(e), 3, "steane7"};
}

// Assembly of the two printed doubled codes, block column layout
// [sd-block-1 | sd-block-2 | small-code block].
void append_pair_rows(BitMatrix& out, const BitMatrix& m, std::size_t tail) {
    for (std::size_t r = 0; r < m.nrows(); ++r)
        out.append_row(cat3(m.row(r), m.row(r), BitVec(tail)));
}

void append_tail_rows(BitMatrix& out, std::size_t head, const BitMatrix& m) {
    for (std::size_t r = 0; r < m.nrows(); ++r)
        out.append_row(cat3(BitVec(head), BitVec(head), m.row(r)));
}

TriorthogonalCode make_tri49() {
    SelfDualCss sd = make_color17();
    TriorthogonalCode tri = make_rm15();
    const std::size_t ns = sd.n, nt = tri.n, n = 2 * ns + nt;

    TriorthogonalCode code;
    code.n = n;
    code.name = "tri49";
    code.d = 5;
    code.b1 = BitMatrix(0, n);
    code.b1.append_row(cat3(sd.b1.row(0), sd.b1.row(0), tri.b1.row(0)));

    code.b0 = BitMatrix(0, n);
    append_pair_rows(code.b0, sd.b0, nt);
    code.b0.append_row(cat3(BitVec(ns), BitVec::ones(ns), tri.b1.row(0)));
    append_tail_rows(code.b0, ns, tri.b0);

    code.c = BitMatrix(0, n);
    for (std::size_t r = 0; r < sd.b0.nrows(); ++r)
        code.c.append_row(cat3(sd.b0.row(r), BitVec(ns), BitVec(nt)));
    append_pair_rows(code.c, sd.e, nt);
    append_tail_rows(code.c, ns, tri.c);
    return code;
}

TriorthogonalCode make_tri95() {
    SelfDualCss sd = make_golay23();
    TriorthogonalCode tri = make_tri49();
    const std::size_t ns = sd.n, nt = tri.n, n = 2 * ns + nt;

    TriorthogonalCode code;
    code.n = n;
    code.name = "tri95";
    code.d = 7;
    code.b1 = BitMatrix(0, n);
    code.b1.append_row(cat3(sd.b1.row(0), sd.b1.row(0), tri.b1.row(0)));

    code.b0 = BitMatrix(0, n);
    append_pair_rows(code.b0, sd.b0, nt);
    code.b0.append_row(cat3(BitVec(ns), BitVec::ones(ns), tri.b1.row(0)));
    append_tail_rows(code.b0, ns, tri.b0);

    // The printed complement places the lone base-stabilizer block on the
    // second self-dual block here (row additions away from the layout the
    // doubling constructor emits; same rowspace).
    code.c = BitMatrix(0, n);
    for (std::size_t r = 0; r < sd.b0.nrows(); ++r)
        code.c.append_row(cat3(BitVec(ns), sd.b0.row(r), BitVec(nt)));
    append_pair_rows(code.c, sd.e, nt);
    append_tail_rows(code.c, ns, tri.c);
    return code;
}

std::string section_text(const char* tag, const BitMatrix& m) {
    std::string s = tag;
    s += '\n';
    s += m.to_text();
    return s;
}

}  // namespace

bool is_k_orthogonal(const BitMatrix& m, int k) {
    if (k < 2 || k > 4) throw std::invalid_argument("is_k_orthogonal: k must be 2, 3, or 4");
    const std::size_t r = m.nrows();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            if (gf2::BitVec::overlap_weight(m.row(i), m.row(j)) & 1) return false;
            if (k < 3) continue;
            BitVec ij = m.row(i).and_with(m.row(j));
            for (std::size_t l = j + 1; l < r; ++l) {
                if (gf2::BitVec::overlap_weight(ij, m.row(l)) & 1) return false;
                if (k < 4) continue;
                BitVec ijl = ij.and_with(m.row(l));
                for (std::size_t q = l + 1; q < r; ++q)
                    if (gf2::BitVec::overlap_weight(ijl, m.row(q)) & 1) return false;
            }
        }
    return true;
}

void validate(const SelfDualCss& code) {
    check(code.b1.nrows() == 1, "self-dual code: b1 must have exactly one row");
    check(code.b1.ncols() == code.n, "self-dual code: b1 width mismatch");
    check(code.b1.row(0).odd_weight(), "self-dual code: logical row must have odd weight");
    check(code.b0.nrows() == 0 || code.b0.ncols() == code.n, "self-dual code: b0 width mismatch");
    check(code.e.nrows() == 0 || code.e.ncols() == code.n, "self-dual code: e width mismatch");
    check(code.n == 2 * code.b0.nrows() + 1, "self-dual code: n must equal 2k + 1");
    for (std::size_t r = 0; r < code.b0.nrows(); ++r)
        check(!code.b0.row(r).odd_weight(), "self-dual code: stabilizer row has odd weight");
    for (std::size_t r = 0; r < code.e.nrows(); ++r)
        check(!code.e.row(r).odd_weight(), "self-dual code: completion row has odd weight");
    BitMatrix b = gf2::vstack(code.b1, code.b0);
    check(is_k_orthogonal(b, 2), "self-dual code: rows are not pairwise orthogonal");
    BitMatrix full = gf2::vstack(b, code.e);
    check(full.nrows() == code.n && gf2::rank(full) == code.n,
          "self-dual code: [b1; b0; e] must be a full basis");
}

void validate(const TriorthogonalCode& code) {
    check(code.b1.nrows() == 1, "triorthogonal code: b1 must have exactly one row");
    check(code.b1.ncols() == code.n, "triorthogonal code: b1 width mismatch");
    check(code.b1.row(0).odd_weight(), "triorthogonal code: logical row must have odd weight");
    check(code.b0.nrows() == 0 || code.b0.ncols() == code.n,
          "triorthogonal code: b0 width mismatch");
    check(code.c.nrows() == 0 || code.c.ncols() == code.n, "triorthogonal code: c width mismatch");
    BitMatrix b = gf2::vstack(code.b1, code.b0);
    check(is_k_orthogonal(b, 3), "triorthogonal code: [b1; b0] is not 3-orthogonal");
    check(gf2::rank(b) == b.nrows(), "triorthogonal code: [b1; b0] rows are dependent");
    BitMatrix comp = gf2::vstack(code.b0, code.c);
    for (std::size_t i = 0; i < comp.nrows(); ++i)
        for (std::size_t j = 0; j < b.nrows(); ++j)
            check(!gf2::BitVec::odd_overlap(comp.row(i), b.row(j)),
                  "triorthogonal code: [b0; c] is not orthogonal to [b1; b0]");
    check(gf2::rank(comp) == comp.nrows(), "triorthogonal code: [b0; c] rows are dependent");
    check(comp.nrows() == code.n - b.nrows(),
          "triorthogonal code: [b0; c] does not span the full orthogonal complement");
}

void validate(const Code& code) {
    std::visit([](const auto& c) { validate(c); }, code);
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"golay23", "color17", "rm15",
                                                   "steane7", "tri49",   "tri95"};
    return names;
}

Code catalog(std::string_view name) {
    if (name == "golay23") return make_golay23();
    if (name == "color17") return make_color17();
    if (name == "rm15") return make_rm15();
    if (name == "steane7") return make_steane7();
    if (name == "tri49") return make_tri49();
    if (name == "tri95") return make_tri95();
    std::string msg = "unknown code name '";
    msg += name;
    msg += "'; valid names:";
    for (const auto& n : catalog_names()) {
        msg += ' ';
        msg += n;
    }
    throw std::invalid_argument(msg);
}

TriorthogonalCode trivial1() {
    TriorthogonalCode code;
    code.n = 1;
    code.name = "trivial1";
    code.d = 1;
    code.b1 = BitMatrix::from_text("1");
    code.b0 = BitMatrix(0, 1);
    code.c = BitMatrix(0, 1);
    return code;
}

CssCode as_css(const SelfDualCss& code) {
    validate(code);
    return {code.n, code.b0, code.b0, code.b1.row(0), code.b1.row(0), code.name};
}

CssCode as_css(const TriorthogonalCode& code) {
    validate(code);
    return {code.n, code.b0, gf2::vstack(code.b0, code.c), code.b1.row(0), code.b1.row(0),
            code.name};
}

CssCode as_css(const Code& code) {
    return std::visit([](const auto& c) { return as_css(c); }, code);
}

BitMatrix b_matrix(const Code& code) {
    return std::visit([](const auto& c) { return gf2::vstack(c.b1, c.b0); }, code);
}

std::size_t code_n(const Code& code) {
    return std::visit([](const auto& c) { return c.n; }, code);
}

const std::string& code_name(const Code& code) {
    return std::visit([](const auto& c) -> const std::string& { return c.name; }, code);
}

Code parse_code_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t n = 0;
    bool saw_header = false;
    BitMatrix b1, b0, e, c;
    bool has_e = false, has_c = false;
    BitMatrix* section = nullptr;

    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            if (line.rfind("css n=", 0) != 0)
                throw std::invalid_argument("code text: expected header 'css n=<n>'");
            n = std::stoul(line.substr(6));
            if (n == 0) throw std::invalid_argument("code text: n must be positive");
            b1 = b0 = e = c = BitMatrix(0, n);
            saw_header = true;
            continue;
        }
        if (line == "B1") {
            section = &b1;
        } else if (line == "B0") {
            section = &b0;
        } else if (line == "E") {
            section = &e;
            has_e = true;
        } else if (line == "C") {
            section = &c;
            has_c = true;
        } else {
            if (!section) throw std::invalid_argument("code text: row before any section header");
            BitVec row = BitVec::from_text(line);
            if (row.len() != n) throw std::invalid_argument("code text: row width differs from n");
            section->append_row(std::move(row));
        }
    }
    if (!saw_header) throw std::invalid_argument("code text: missing header");
    if (has_e && has_c)
        throw std::invalid_argument("code text: sections E and C are mutually exclusive");
    if (!has_e && !has_c)
        throw std::invalid_argument("code text: one of sections E or C is required");
    if (has_e) {
        SelfDualCss code{n, std::move(b1), std::move(b0), std::move(e), std::nullopt, ""};
        validate(code);
        return code;
    }
    TriorthogonalCode code{n, std::move(b1), std::move(b0), std::move(c), std::nullopt, ""};
    validate(code);
    return code;
}

std::string to_code_text(const Code& code) {
    std::string s = "css n=" + std::to_string(code_n(code)) + "\n";
    if (const auto* sd = std::get_if<SelfDualCss>(&code)) {
        s += section_text("B1", sd->b1);
        s += section_text("B0", sd->b0);
        s += section_text("E", sd->e);
    } else {
        const auto& tri = std::get<TriorthogonalCode>(code);
        s += section_text("B1", tri.b1);
        s += section_text("B0", tri.b0);
        s += section_text("C", tri.c);
    }
    return s;
}

std::uint64_t catalog_checksum() {
    std::string all;
    for (const auto& name : catalog_names()) {
        all += name;
        all += '\n';
        all += to_code_text(catalog(name));
    }
    return gf2::fnv1a64(all);
}

}  // namespace dtc::codes
