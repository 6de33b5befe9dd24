#include "gf2.hpp"

#include <bit>
#include <stdexcept>

namespace dtc::gf2 {

BitVec BitVec::from_text(std::string_view row) {
    BitVec v(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == '1')
            v.flip(i);
        else if (row[i] != '0')
            throw std::invalid_argument("BitVec::from_text: character is not 0 or 1");
    }
    return v;
}

BitVec BitVec::ones(std::size_t len) {
    BitVec v(len);
    for (std::size_t i = 0; i < len; ++i) v.flip(i);
    return v;
}

BitVec BitVec::unit(std::size_t len, std::size_t i) {
    BitVec v(len);
    v.flip(i);
    return v;
}

void BitVec::set(std::size_t i, bool v) {
    if (get(i) != v) flip(i);
}

std::size_t BitVec::weight() const {
    std::size_t w = 0;
    for (auto word : words_) w += std::popcount(word);
    return w;
}

bool BitVec::is_zero() const {
    for (auto word : words_)
        if (word) return false;
    return true;
}

std::size_t BitVec::lowest_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return len_;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitVec xor: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
}

BitVec BitVec::and_with(const BitVec& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVec and: length mismatch");
    BitVec r(len_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] & o.words_[w];
    return r;
}

bool BitVec::odd_overlap(const BitVec& a, const BitVec& b) {
    return overlap_weight(a, b) & 1;
}

std::size_t BitVec::overlap_weight(const BitVec& a, const BitVec& b) {
    if (a.len_ != b.len_) throw std::invalid_argument("BitVec overlap: length mismatch");
    std::size_t w = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
        w += std::popcount(a.words_[i] & b.words_[i]);
    return w;
}

BitVec BitVec::concat(const BitVec& o) const {
    BitVec r(len_ + o.len_);
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) r.flip(i);
    for (std::size_t i = 0; i < o.len_; ++i)
        if (o.get(i)) r.flip(len_ + i);
    return r;
}

std::vector<std::size_t> BitVec::support() const {
    std::vector<std::size_t> s;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            s.push_back(w * 64 + std::countr_zero(word));
            word &= word - 1;
        }
    }
    return s;
}

std::string BitVec::to_text() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

bool support_lex_less(const BitVec& a, const BitVec& b) {
    // At the first index where the supports differ, the vector holding a 1
    // starts an earlier index tuple (for equal weights).
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) {
        std::uint64_t diff = wa[i] ^ wb[i];
        if (diff) {
            std::uint64_t low = diff & (~diff + 1);
            return wa[i] & low;
        }
    }
    return false;
}

BitMatrix BitMatrix::from_text(std::string_view text) {
    std::vector<BitVec> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        rows.push_back(BitVec::from_text(line));
    }
    return from_rows(std::move(rows));
}

BitMatrix BitMatrix::from_rows(std::vector<BitVec> rows) {
    BitMatrix m;
    if (rows.empty()) return m;
    m.ncols_ = rows[0].len();
    for (const auto& r : rows)
        if (r.len() != m.ncols_) throw std::invalid_argument("BitMatrix: ragged rows");
    m.rows_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].flip(i);
    return m;
}

void BitMatrix::append_row(BitVec v) {
    if (rows_.empty() && ncols_ == 0) ncols_ = v.len();
    if (v.len() != ncols_) throw std::invalid_argument("BitMatrix::append_row: length mismatch");
    rows_.push_back(std::move(v));
}

void BitMatrix::append_rows(const BitMatrix& m) {
    for (std::size_t r = 0; r < m.nrows(); ++r) append_row(m.row(r));
}

std::string BitMatrix::to_text() const {
    std::string s;
    for (const auto& r : rows_) {
        s += r.to_text();
        s += '\n';
    }
    return s;
}

BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix m = a;
    m.append_rows(b);
    return m;
}

BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.nrows() != b.nrows()) throw std::invalid_argument("hstack: row count mismatch");
    std::vector<BitVec> rows;
    rows.reserve(a.nrows());
    for (std::size_t r = 0; r < a.nrows(); ++r) rows.push_back(a.row(r).concat(b.row(r)));
    return BitMatrix::from_rows(std::move(rows));
}

RowReduceResult row_reduce(const BitMatrix& m) {
    RowReduceResult res;
    res.reduced = m;
    BitMatrix& red = res.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < red.ncols() && r < red.nrows(); ++c) {
        std::size_t p = r;
        while (p < red.nrows() && !red.get(p, c)) ++p;
        if (p == red.nrows()) continue;
        red.swap_rows(r, p);
        for (std::size_t i = 0; i < red.nrows(); ++i)
            if (i != r && red.get(i, c)) red.row(i) ^= red.row(r);
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const BitMatrix& m) { return row_reduce(m).rank; }

BitMatrix nullspace(const BitMatrix& m) {
    RowReduceResult rr = row_reduce(m);
    std::vector<bool> is_pivot(m.ncols(), false);
    for (auto c : rr.pivot_cols) is_pivot[c] = true;

    BitMatrix basis(0, m.ncols());
    for (std::size_t f = 0; f < m.ncols(); ++f) {
        if (is_pivot[f]) continue;
        BitVec v(m.ncols());
        v.flip(f);
        // back-substitute: pivot column p must cancel row r's entry at f
        for (std::size_t r = 0; r < rr.rank; ++r)
            if (rr.reduced.get(r, f)) v.flip(rr.pivot_cols[r]);
        basis.append_row(std::move(v));
    }
    return basis;
}

bool in_span(const BitVec& v, const BitMatrix& m) {
    if (v.len() != m.ncols()) throw std::invalid_argument("in_span: length mismatch");
    Span span(m.ncols());
    for (std::size_t r = 0; r < m.nrows(); ++r) span.add(m.row(r));
    return span.contains(v);
}

BitVec syndrome_of(const BitMatrix& m, const BitVec& v) {
    BitVec s(m.nrows());
    for (std::size_t r = 0; r < m.nrows(); ++r)
        if (BitVec::odd_overlap(m.row(r), v)) s.flip(r);
    return s;
}

BitVec Span::reduce(BitVec v) const {
    for (const auto& row : rows_) {
        std::size_t p = row.lowest_set();
        if (p < v.len() && v.get(p)) v ^= row;
    }
    return v;
}

bool Span::add(BitVec v) {
    if (v.len() != ncols_) throw std::invalid_argument("Span::add: length mismatch");
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    std::size_t p = v.lowest_set();
    auto it = rows_.begin();
    while (it != rows_.end() && it->lowest_set() < p) ++it;
    rows_.insert(it, std::move(v));
    return true;
}

bool Span::contains(BitVec v) const {
    if (v.len() != ncols_) throw std::invalid_argument("Span::contains: length mismatch");
    return reduce(std::move(v)).is_zero();
}

BitMatrix complete_even_basis(const BitMatrix& b) {
    const std::size_t n = b.ncols();
    Span span(n);
    bool has_odd = false;
    for (std::size_t r = 0; r < b.nrows(); ++r) {
        if (!span.add(b.row(r)))
            throw std::invalid_argument("complete_even_basis: input rows are dependent");
        has_odd = has_odd || b.row(r).odd_weight();
    }
    if (!has_odd && span.rank() < n)
        throw std::invalid_argument(
            "complete_even_basis: even rows cannot complete a basis without an odd-weight row");

    BitMatrix e(0, n);
    for (std::size_t i = 0; i + 1 < n && span.rank() < n; ++i) {
        for (std::size_t j = i + 1; j < n && span.rank() < n; ++j) {
            BitVec v(n);
            v.flip(i);
            v.flip(j);
            if (span.add(v)) e.append_row(std::move(v));
        }
    }
    return e;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace dtc::gf2
