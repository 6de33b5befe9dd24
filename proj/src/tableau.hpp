#pragma once

// Phase-tracked stabilizer simulation. A Pauli operator is stored as
// i^phase * prod_q X_q^x[q] Z_q^z[q] with the X factors written to the left
// of the Z factors on every qubit; phase is kept mod 4 so that products,
// hermiticity and signs are all exact. The tableau keeps 2n such rows, a
// destabilizer row paired with each stabilizer row, which is what lets
// measurement outcomes be extracted without Gaussian elimination and gives
// the conversion gadgets direct access to sign-fixing correctors.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gf2.hpp"

namespace dtc::tableau {

struct Pauli {
    gf2::BitVec x;
    gf2::BitVec z;
    unsigned phase = 0;  // exponent of i, mod 4

    Pauli() = default;
    Pauli(gf2::BitVec x_part, gf2::BitVec z_part, unsigned ph = 0);

    static Pauli identity(std::size_t n);
    static Pauli x_on(const gf2::BitVec& support);
    static Pauli z_on(const gf2::BitVec& support);
    static Pauli single(std::size_t n, std::size_t q, char kind);  // 'X','Y','Z'

    std::size_t n() const { return x.len(); }
    bool is_identity() const;

    // number of qubits acted on by X, Y or Z
    std::size_t weight() const;

    Pauli& operator*=(const Pauli& rhs);
    friend Pauli operator*(Pauli lhs, const Pauli& rhs) { return lhs *= rhs; }

    bool anticommutes_with(const Pauli& other) const;

    // i^phase folds to +-1 only when the operator squares to identity
    bool hermitian() const;
    int sign() const;  // +1 or -1; requires hermitian()

    bool operator==(const Pauli& other) const;
};

struct MeasureResult {
    int outcome = 0;  // 0 -> +1 eigenvalue, 1 -> -1
    // set when the outcome was random: index i such that destabilizer(i)
    // anticommutes with the freshly installed stabilizer row and nothing else
    std::optional<std::size_t> pivot;
    bool random() const { return pivot.has_value(); }
};

class Tableau {
public:
    explicit Tableau(std::size_t n);  // the all-zeros state

    std::size_t n() const { return n_; }

    void h(std::size_t q);
    void s(std::size_t q);
    void sdg(std::size_t q);
    void cx(std::size_t control, std::size_t target);
    void x(std::size_t q);
    void y(std::size_t q);
    void z(std::size_t q);

    // multiply the state by a Pauli (global phase dropped)
    void apply_pauli(const Pauli& p);

    // projective measurement of a hermitian Pauli; rng consulted only when
    // the outcome is random
    MeasureResult measure(const Pauli& p, std::mt19937_64& rng);

    // +1/-1 if the state is an eigenstate of p, nullopt otherwise; never
    // changes the state
    std::optional<int> expectation(const Pauli& p) const;

    const Pauli& destabilizer(std::size_t i) const;
    const Pauli& stabilizer(std::size_t i) const;

private:
    std::size_t n_;
    std::vector<Pauli> rows_;  // destabilizers first, then stabilizers

    void check_operand(const Pauli& p) const;
};

}  // namespace dtc::tableau
