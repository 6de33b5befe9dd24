#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Packed GF(2) vectors and matrices.  Bit index 0 is the leftmost column of a
// printed 0/1 row; within a row, bit q lives in word q/64 at position q%64.
namespace dtc::gf2 {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BitVec from_text(std::string_view row);
    static BitVec zeros(std::size_t len) { return BitVec(len); }
    static BitVec ones(std::size_t len);
    static BitVec unit(std::size_t len, std::size_t i);

    std::size_t len() const { return len_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t weight() const;
    bool odd_weight() const { return weight() & 1; }
    bool is_zero() const;
    // Lowest set bit index, or len() when zero.
    std::size_t lowest_set() const;

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    bool operator==(const BitVec&) const = default;

    // Entrywise AND, and the parity/weight of the AND (overlap tests).
    BitVec and_with(const BitVec& o) const;
    static bool odd_overlap(const BitVec& a, const BitVec& b);
    static std::size_t overlap_weight(const BitVec& a, const BitVec& b);

    BitVec concat(const BitVec& o) const;
    std::vector<std::size_t> support() const;
    std::string to_text() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

// True iff a precedes b when supports are compared as ascending index tuples.
// Only meaningful for equal weights (the search order used by witness scans).
bool support_lex_less(const BitVec& a, const BitVec& b);

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t nrows, std::size_t ncols)
        : ncols_(ncols), rows_(nrows, BitVec(ncols)) {}

    static BitMatrix from_text(std::string_view text);
    static BitMatrix from_rows(std::vector<BitVec> rows);
    static BitMatrix identity(std::size_t n);
    static BitMatrix zeros(std::size_t nrows, std::size_t ncols) { return {nrows, ncols}; }

    std::size_t nrows() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    bool empty() const { return rows_.empty(); }

    const BitVec& row(std::size_t r) const { return rows_[r]; }
    BitVec& row(std::size_t r) { return rows_[r]; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

    void append_row(BitVec v);
    void append_rows(const BitMatrix& m);
    void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }

    std::string to_text() const;
    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t ncols_ = 0;
    std::vector<BitVec> rows_;
};

BitMatrix vstack(const BitMatrix& a, const BitMatrix& b);
BitMatrix hstack(const BitMatrix& a, const BitMatrix& b);

struct RowReduceResult {
    BitMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form; pivots claimed lowest column index first, zero
// rows moved to the bottom.  Rowspace is preserved.
RowReduceResult row_reduce(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

// Basis of {v : m * v^T = 0}; row count is ncols - rank(m).
BitMatrix nullspace(const BitMatrix& m);

// Membership of v in the rowspace of m.  Throws on length mismatch.
bool in_span(const BitVec& v, const BitMatrix& m);

// Syndrome of v against the rows of m: bit r is the overlap parity with row r.
BitVec syndrome_of(const BitMatrix& m, const BitVec& v);

// Incremental rowspace: add() reduces the vector against the stored echelon
// basis and keeps it when independent.
class Span {
public:
    explicit Span(std::size_t ncols) : ncols_(ncols) {}
    // True when v was independent of the span so far (and is now included).
    bool add(BitVec v);
    bool contains(BitVec v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }

private:
    std::size_t ncols_;
    std::vector<BitVec> rows_;  // echelon rows, ascending pivot index
    BitVec reduce(BitVec v) const;
};

// Even-weight rows extending b to a full basis of GF(2)^n, chosen greedily
// from weight-2 vectors e_i ^ e_j in lexicographic (i, j) order.  Throws when
// the input rows are dependent or no completion by even rows exists.
BitMatrix complete_even_basis(const BitMatrix& b);

// FNV-1a, used to pin catalog data in tests.
std::uint64_t fnv1a64(std::string_view data);

}  // namespace dtc::gf2
