#include "tableau.hpp"

#include <stdexcept>

namespace dtc::tableau {

using gf2::BitVec;

Pauli::Pauli(BitVec x_part, BitVec z_part, unsigned ph)
    : x(std::move(x_part)), z(std::move(z_part)), phase(ph & 3u) {
    if (x.len() != z.len()) throw std::invalid_argument("Pauli: x/z length mismatch");
}

Pauli Pauli::identity(std::size_t n) { return Pauli(BitVec(n), BitVec(n)); }

Pauli Pauli::x_on(const BitVec& support) { return Pauli(support, BitVec(support.len())); }

Pauli Pauli::z_on(const BitVec& support) { return Pauli(BitVec(support.len()), support); }

Pauli Pauli::single(std::size_t n, std::size_t q, char kind) {
    if (q >= n) throw std::invalid_argument("Pauli: qubit out of range");
    Pauli p = identity(n);
    switch (kind) {
        case 'X': p.x.flip(q); break;
        case 'Z': p.z.flip(q); break;
        case 'Y':
            p.x.flip(q);
            p.z.flip(q);
            p.phase = 1;  // Y = i XZ
            break;
        default: throw std::invalid_argument("Pauli: kind must be X, Y or Z");
    }
    return p;
}

bool Pauli::is_identity() const { return phase == 0 && x.is_zero() && z.is_zero(); }

std::size_t Pauli::weight() const {
    BitVec either = x;
    either ^= z;
    return either.weight() + BitVec::overlap_weight(x, z);
}

Pauli& Pauli::operator*=(const Pauli& rhs) {
    if (n() != rhs.n()) throw std::invalid_argument("Pauli: length mismatch in product");
    // moving rhs's X factors through this->z costs a -1 per overlap
    unsigned cross = BitVec::odd_overlap(z, rhs.x) ? 2u : 0u;
    phase = (phase + rhs.phase + cross) & 3u;
    x ^= rhs.x;
    z ^= rhs.z;
    return *this;
}

bool Pauli::anticommutes_with(const Pauli& other) const {
    return BitVec::odd_overlap(x, other.z) != BitVec::odd_overlap(z, other.x);
}

bool Pauli::hermitian() const {
    return ((phase ^ BitVec::overlap_weight(x, z)) & 1u) == 0;
}

int Pauli::sign() const {
    unsigned folded = (phase + 4u - (BitVec::overlap_weight(x, z) & 3u)) & 3u;
    if (folded & 1u) throw std::logic_error("Pauli::sign: operator is not hermitian");
    return folded == 0 ? 1 : -1;
}

bool Pauli::operator==(const Pauli& other) const {
    return phase == other.phase && x == other.x && z == other.z;
}

Tableau::Tableau(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("Tableau: need at least one qubit");
    rows_.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        Pauli p = Pauli::identity(n);
        p.x.flip(i);
        rows_.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < n; ++i) {
        Pauli p = Pauli::identity(n);
        p.z.flip(i);
        rows_.push_back(std::move(p));
    }
}

void Tableau::h(std::size_t q) {
    if (q >= n_) throw std::invalid_argument("Tableau: qubit out of range");
    for (auto& r : rows_) {
        bool xq = r.x.get(q), zq = r.z.get(q);
        if (xq && zq) r.phase = (r.phase + 2u) & 3u;
        if (xq != zq) {
            r.x.set(q, zq);
            r.z.set(q, xq);
        }
    }
}

void Tableau::s(std::size_t q) {
    if (q >= n_) throw std::invalid_argument("Tableau: qubit out of range");
    for (auto& r : rows_) {
        if (r.x.get(q)) {
            r.phase = (r.phase + 1u) & 3u;
            r.z.flip(q);
        }
    }
}

void Tableau::sdg(std::size_t q) {
    if (q >= n_) throw std::invalid_argument("Tableau: qubit out of range");
    for (auto& r : rows_) {
        if (r.x.get(q)) {
            r.phase = (r.phase + 3u) & 3u;
            r.z.flip(q);
        }
    }
}

void Tableau::cx(std::size_t control, std::size_t target) {
    if (control >= n_ || target >= n_ || control == target)
        throw std::invalid_argument("Tableau: bad cnot qubits");
    for (auto& r : rows_) {
        if (r.x.get(control)) r.x.flip(target);
        if (r.z.get(target)) r.z.flip(control);
    }
}

void Tableau::x(std::size_t q) {
    if (q >= n_) throw std::invalid_argument("Tableau: qubit out of range");
    for (auto& r : rows_)
        if (r.z.get(q)) r.phase = (r.phase + 2u) & 3u;
}

void Tableau::z(std::size_t q) {
    if (q >= n_) throw std::invalid_argument("Tableau: qubit out of range");
    for (auto& r : rows_)
        if (r.x.get(q)) r.phase = (r.phase + 2u) & 3u;
}

void Tableau::y(std::size_t q) {
    if (q >= n_) throw std::invalid_argument("Tableau: qubit out of range");
    for (auto& r : rows_)
        if (r.x.get(q) != r.z.get(q)) r.phase = (r.phase + 2u) & 3u;
}

void Tableau::apply_pauli(const Pauli& p) {
    check_operand(p);
    for (auto& r : rows_)
        if (r.anticommutes_with(p)) r.phase = (r.phase + 2u) & 3u;
}

void Tableau::check_operand(const Pauli& p) const {
    if (p.n() != n_) throw std::invalid_argument("Tableau: Pauli length mismatch");
}

MeasureResult Tableau::measure(const Pauli& p, std::mt19937_64& rng) {
    check_operand(p);
    if (!p.hermitian()) throw std::invalid_argument("Tableau: measuring a non-hermitian Pauli");

    std::size_t pivot = 2 * n_;
    for (std::size_t i = n_; i < 2 * n_; ++i) {
        if (rows_[i].anticommutes_with(p)) {
            pivot = i;
            break;
        }
    }

    if (pivot == 2 * n_) {
        // deterministic: p is +-(product of stabilizer rows); the paired
        // destabilizers pick out exactly which rows enter the product
        Pauli acc = Pauli::identity(n_);
        for (std::size_t i = 0; i < n_; ++i)
            if (rows_[i].anticommutes_with(p)) acc *= rows_[n_ + i];
        if (acc.x != p.x || acc.z != p.z)
            throw std::logic_error("Tableau: stabilizer accumulator mismatch");
        MeasureResult r;
        r.outcome = static_cast<int>(((acc.phase + 4u - p.phase) & 3u) >> 1);
        return r;
    }

    for (std::size_t i = 0; i < 2 * n_; ++i) {
        if (i == pivot || !rows_[i].anticommutes_with(p)) continue;
        rows_[i] *= rows_[pivot];
    }
    rows_[pivot - n_] = rows_[pivot];

    MeasureResult r;
    r.outcome = static_cast<int>(rng() & 1u);
    r.pivot = pivot - n_;
    rows_[pivot] = p;
    if (r.outcome) rows_[pivot].phase = (rows_[pivot].phase + 2u) & 3u;
    return r;
}

std::optional<int> Tableau::expectation(const Pauli& p) const {
    check_operand(p);
    if (!p.hermitian()) throw std::invalid_argument("Tableau: expectation of a non-hermitian Pauli");
    for (std::size_t i = n_; i < 2 * n_; ++i)
        if (rows_[i].anticommutes_with(p)) return std::nullopt;
    Pauli acc = Pauli::identity(n_);
    for (std::size_t i = 0; i < n_; ++i)
        if (rows_[i].anticommutes_with(p)) acc *= rows_[n_ + i];
    if (acc.x != p.x || acc.z != p.z)
        throw std::logic_error("Tableau: stabilizer accumulator mismatch");
    return ((acc.phase + 4u - p.phase) & 3u) ? -1 : 1;
}

const Pauli& Tableau::destabilizer(std::size_t i) const {
    if (i >= n_) throw std::invalid_argument("Tableau: row index out of range");
    return rows_[i];
}

const Pauli& Tableau::stabilizer(std::size_t i) const {
    if (i >= n_) throw std::invalid_argument("Tableau: row index out of range");
    return rows_[n_ + i];
}

}  // namespace dtc::tableau
