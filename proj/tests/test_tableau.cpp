#include <stdexcept>
#include <random>

#include "doctest.h"
#include "tableau.hpp"

using dtc::gf2::BitVec;
using dtc::tableau::MeasureResult;
using dtc::tableau::Pauli;
using dtc::tableau::Tableau;

TEST_CASE("pauli products track phases exactly") {
    Pauli X = Pauli::single(1, 0, 'X');
    Pauli Z = Pauli::single(1, 0, 'Z');
    Pauli Y = Pauli::single(1, 0, 'Y');

    CHECK(Y.hermitian());
    CHECK(Y.sign() == 1);
    CHECK(Y.weight() == 1);

    Pauli xz = X * Z;
    CHECK_FALSE(xz.hermitian());  // XZ = -iY
    CHECK(xz.phase == 0);

    Pauli zx = Z * X;
    CHECK(zx.phase == 2);  // ZX = -XZ

    Pauli yy = Y * Y;
    CHECK(yy.is_identity());

    // iXZ = Y
    Pauli ixz = xz;
    ixz.phase = (ixz.phase + 1) & 3;
    CHECK(ixz == Y);

    CHECK(X.anticommutes_with(Z));
    CHECK(X.anticommutes_with(Y));
    CHECK_FALSE(X.anticommutes_with(X));

    Pauli x0 = Pauli::single(2, 0, 'X');
    Pauli z1 = Pauli::single(2, 1, 'Z');
    CHECK_FALSE(x0.anticommutes_with(z1));
}

TEST_CASE("pauli constructors and weight") {
    BitVec support(5);
    support.flip(0);
    support.flip(3);
    Pauli p = Pauli::x_on(support);
    CHECK(p.weight() == 2);
    CHECK(p.hermitian());

    Pauli q = Pauli::z_on(support);
    Pauli prod = p * q;  // overlap 2, so still hermitian
    CHECK(prod.weight() == 2);
    CHECK(prod.hermitian());

    CHECK_THROWS_AS(Pauli(BitVec(3), BitVec(4)), std::invalid_argument);
    CHECK_THROWS_AS(Pauli::single(3, 3, 'X'), std::invalid_argument);
    CHECK_THROWS_AS(Pauli::single(3, 0, 'Q'), std::invalid_argument);
}

TEST_CASE("fresh tableau stabilizes the all-zeros state") {
    Tableau tab(3);
    std::mt19937_64 rng(7);
    for (std::size_t q = 0; q < 3; ++q) {
        auto r = tab.measure(Pauli::single(3, q, 'Z'), rng);
        CHECK_FALSE(r.random());
        CHECK(r.outcome == 0);
        CHECK(tab.stabilizer(q) == Pauli::single(3, q, 'Z'));
        CHECK(tab.destabilizer(q) == Pauli::single(3, q, 'X'));
    }
}

TEST_CASE("single-qubit gate conjugation") {
    SUBCASE("H exchanges X and Z") {
        Tableau tab(1);
        tab.h(0);
        CHECK(tab.stabilizer(0) == Pauli::single(1, 0, 'X'));
        CHECK(tab.destabilizer(0) == Pauli::single(1, 0, 'Z'));
    }
    SUBCASE("S turns an X stabilizer into Y") {
        Tableau tab(1);
        tab.h(0);
        tab.s(0);
        CHECK(tab.stabilizer(0) == Pauli::single(1, 0, 'Y'));
    }
    SUBCASE("Sdg turns an X stabilizer into -Y") {
        Tableau tab(1);
        tab.h(0);
        tab.sdg(0);
        Pauli stab = tab.stabilizer(0);
        CHECK(stab.hermitian());
        CHECK(stab.sign() == -1);
        CHECK(stab.x == Pauli::single(1, 0, 'Y').x);
        CHECK(stab.z == Pauli::single(1, 0, 'Y').z);
    }
    SUBCASE("three S equal one Sdg") {
        Tableau a(1), b(1);
        a.h(0);
        b.h(0);
        a.s(0);
        a.s(0);
        a.s(0);
        b.sdg(0);
        CHECK(a.stabilizer(0) == b.stabilizer(0));
    }
    SUBCASE("H conjugates Y to -Y") {
        Tableau tab(1);
        tab.h(0);
        tab.s(0);  // stabilizer Y
        tab.h(0);
        CHECK(tab.stabilizer(0).sign() == -1);
    }
    SUBCASE("pauli gates flip anticommuting stabilizers") {
        Tableau tab(1);
        tab.x(0);
        std::mt19937_64 rng(1);
        CHECK(tab.measure(Pauli::single(1, 0, 'Z'), rng).outcome == 1);
        tab.y(0);  // Y anticommutes with Z too
        CHECK(tab.measure(Pauli::single(1, 0, 'Z'), rng).outcome == 0);
    }
}

TEST_CASE("cnot propagates stabilizers") {
    Tableau tab(2);
    tab.cx(0, 1);
    CHECK(tab.stabilizer(0).z.support() == std::vector<std::size_t>{0});
    CHECK(tab.stabilizer(1).z.support() == std::vector<std::size_t>{0, 1});
    CHECK(tab.destabilizer(0).x.support() == std::vector<std::size_t>{0, 1});
    CHECK(tab.destabilizer(1).x.support() == std::vector<std::size_t>{1});

    CHECK_THROWS_AS(tab.cx(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(tab.cx(0, 2), std::invalid_argument);
}

TEST_CASE("bell pair correlations") {
    Tableau tab(2);
    tab.h(0);
    tab.cx(0, 1);

    BitVec both = BitVec::ones(2);
    CHECK(tab.expectation(Pauli::x_on(both)) == 1);
    CHECK(tab.expectation(Pauli::z_on(both)) == 1);
    CHECK_FALSE(tab.expectation(Pauli::single(2, 0, 'Z')).has_value());

    std::mt19937_64 rng(42);
    auto first = tab.measure(Pauli::single(2, 0, 'Z'), rng);
    CHECK(first.random());
    auto second = tab.measure(Pauli::single(2, 1, 'Z'), rng);
    CHECK_FALSE(second.random());
    CHECK(second.outcome == first.outcome);
}

TEST_CASE("ghz state measurement cascade") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 8; ++trial) {
        Tableau tab(3);
        tab.h(0);
        tab.cx(0, 1);
        tab.cx(0, 2);
        CHECK(tab.expectation(Pauli::x_on(BitVec::ones(3))) == 1);

        auto m0 = tab.measure(Pauli::single(3, 0, 'Z'), rng);
        auto m1 = tab.measure(Pauli::single(3, 1, 'Z'), rng);
        auto m2 = tab.measure(Pauli::single(3, 2, 'Z'), rng);
        CHECK(m0.random());
        CHECK_FALSE(m1.random());
        CHECK_FALSE(m2.random());
        CHECK(m1.outcome == m0.outcome);
        CHECK(m2.outcome == m0.outcome);
    }
}

TEST_CASE("random measurements expose a sign-fixing corrector") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 16; ++trial) {
        Tableau tab(2);
        Pauli target = Pauli::single(2, 0, 'X');
        auto r = tab.measure(target, rng);
        REQUIRE(r.random());
        if (r.outcome == 1) {
            // the paired destabilizer anticommutes with the new stabilizer
            // row and nothing else, so applying it flips just that sign
            tab.apply_pauli(tab.destabilizer(*r.pivot));
        }
        CHECK(tab.expectation(target) == 1);
    }
}

TEST_CASE("apply_pauli flips eigenstates") {
    Tableau tab(2);
    Pauli x0 = Pauli::single(2, 0, 'X');
    tab.apply_pauli(x0);
    std::mt19937_64 rng(5);
    CHECK(tab.measure(Pauli::single(2, 0, 'Z'), rng).outcome == 1);
    CHECK(tab.measure(Pauli::single(2, 1, 'Z'), rng).outcome == 0);
}

TEST_CASE("plus state under s gates cycles through y eigenstates") {
    Tableau tab(1);
    tab.h(0);
    Pauli Y = Pauli::single(1, 0, 'Y');
    CHECK_FALSE(tab.expectation(Y).has_value());
    tab.s(0);
    CHECK(tab.expectation(Y) == 1);
    tab.s(0);
    CHECK(tab.expectation(Pauli::single(1, 0, 'X')) == -1);
    tab.s(0);
    CHECK(tab.expectation(Y) == -1);
}

TEST_CASE("measurement rejects bad operands") {
    Tableau tab(2);
    std::mt19937_64 rng(3);
    Pauli xz = Pauli::single(2, 0, 'X') * Pauli::single(2, 0, 'Z');
    CHECK_THROWS_AS(tab.measure(xz, rng), std::invalid_argument);
    CHECK_THROWS_AS(tab.measure(Pauli::single(3, 0, 'X'), rng), std::invalid_argument);
    CHECK_THROWS_AS(tab.expectation(Pauli::single(3, 0, 'X')), std::invalid_argument);
}

TEST_CASE("seeded runs reproduce outcome sequences") {
    auto run = [](std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        Tableau tab(4);
        std::vector<int> outs;
        for (std::size_t q = 0; q < 4; ++q) tab.h(q);
        for (std::size_t q = 0; q < 4; ++q)
            outs.push_back(tab.measure(Pauli::single(4, q, 'Z'), rng).outcome);
        return outs;
    };
    CHECK(run(99) == run(99));
}
