#include <stdexcept>
#include <array>
#include <random>

#include "codes.hpp"
#include "doctest.h"
#include "gadgets.hpp"
#include "tableau.hpp"

using dtc::gf2::BitVec;
using dtc::tableau::Pauli;
using dtc::tableau::Tableau;
namespace codes = dtc::codes;
namespace gadgets = dtc::gadgets;

namespace {

const codes::CssCode& golay() {
    static const codes::CssCode css = codes::as_css(codes::catalog("golay23"));
    return css;
}

const codes::CssCode& doubled() {
    static const codes::CssCode css = codes::as_css(codes::catalog("tri95"));
    return css;
}

constexpr std::array<std::pair<char, int>, 6> kEigenstates{
    {{'X', 1}, {'X', -1}, {'Y', 1}, {'Y', -1}, {'Z', 1}, {'Z', -1}}};

bool stabilizers_clean(const Tableau& tab, const codes::CssCode& css, std::size_t offset) {
    auto shifted_row = [&](const BitVec& row) {
        BitVec out(tab.n());
        for (auto q : row.support()) out.flip(offset + q);
        return out;
    };
    for (std::size_t r = 0; r < css.x_stabs.nrows(); ++r)
        if (tab.expectation(Pauli::x_on(shifted_row(css.x_stabs.row(r)))) != 1) return false;
    for (std::size_t r = 0; r < css.z_stabs.nrows(); ++r)
        if (tab.expectation(Pauli::z_on(shifted_row(css.z_stabs.row(r)))) != 1) return false;
    return true;
}

}  // namespace

TEST_CASE("logical pauli representatives") {
    Pauli y = gadgets::logical_pauli(golay(), 'Y', 0, 23);
    CHECK(y.hermitian());
    CHECK(y.sign() == -1);  // i * X^23 * Z^23 folds to -Y on every qubit

    Pauli x = gadgets::logical_pauli(golay(), 'X', 0, 23);
    Pauli z = gadgets::logical_pauli(golay(), 'Z', 0, 23);
    CHECK(x.anticommutes_with(z));
    CHECK(x.anticommutes_with(y));
    CHECK(y.anticommutes_with(z));

    Pauli y95 = gadgets::logical_pauli(doubled(), 'Y', 0, 95);
    CHECK(y95.hermitian());

    CHECK_THROWS_AS(gadgets::logical_pauli(golay(), 'Q', 0, 23), std::invalid_argument);
    CHECK_THROWS_AS(gadgets::logical_pauli(golay(), 'X', 5, 23), std::invalid_argument);
}

TEST_CASE("eigenstate encoding pins logical and stabilizers") {
    std::mt19937_64 rng(401);
    for (auto [basis, sign] : kEigenstates) {
        CAPTURE(basis);
        CAPTURE(sign);
        Tableau tab(23);
        gadgets::encode_eigenstate(tab, golay(), 0, basis, sign, rng);
        CHECK(gadgets::logical_expectation(tab, golay(), 0, basis) == sign);
        CHECK(stabilizers_clean(tab, golay(), 0));
        // the conjugate bases are undetermined
        for (char other : {'X', 'Y', 'Z'}) {
            if (other == basis) continue;
            CHECK_FALSE(gadgets::logical_expectation(tab, golay(), 0, other).has_value());
        }
    }
}

TEST_CASE("encoding a used block starts from a clean slate") {
    std::mt19937_64 rng(402);
    Tableau tab(23);
    gadgets::encode_eigenstate(tab, golay(), 0, 'Y', -1, rng);
    gadgets::encode_eigenstate(tab, golay(), 0, 'Z', 1, rng);
    CHECK(gadgets::logical_expectation(tab, golay(), 0, 'Z') == 1);
    CHECK(stabilizers_clean(tab, golay(), 0));
}

TEST_CASE("logical measurement collapses and reports faithfully") {
    std::mt19937_64 rng(403);
    Tableau tab(23);
    gadgets::encode_eigenstate(tab, golay(), 0, 'Z', 1, rng);
    auto m = gadgets::measure_logical(tab, golay(), 0, 'X', rng);
    CHECK(m.random());
    CHECK(gadgets::logical_expectation(tab, golay(), 0, 'X') == (m.outcome ? -1 : 1));
}

TEST_CASE("stabilizer-measurement conversion grows all six eigenstates") {
    std::mt19937_64 rng(404);
    for (auto [basis, sign] : kEigenstates) {
        CAPTURE(basis);
        CAPTURE(sign);
        Tableau tab(95);
        gadgets::encode_eigenstate(tab, golay(), 0, basis, sign, rng);
        gadgets::convert_up(tab, 0, rng);
        CHECK(gadgets::logical_expectation(tab, doubled(), 0, basis) == sign);
        CHECK(stabilizers_clean(tab, doubled(), 0));
    }
}

TEST_CASE("stabilizer-measurement conversion shrinks all six eigenstates") {
    std::mt19937_64 rng(405);
    for (auto [basis, sign] : kEigenstates) {
        CAPTURE(basis);
        CAPTURE(sign);
        Tableau tab(95);
        gadgets::encode_eigenstate(tab, doubled(), 0, basis, sign, rng);
        gadgets::convert_down(tab, 0, rng);
        CHECK(gadgets::logical_expectation(tab, golay(), 0, basis) == sign);
        CHECK(stabilizers_clean(tab, golay(), 0));
    }
}

TEST_CASE("conversion round trips across seeds") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        std::mt19937_64 rng(seed);
        for (auto [basis, sign] : kEigenstates) {
            CAPTURE(seed);
            CAPTURE(basis);
            CAPTURE(sign);
            Tableau tab(95);
            gadgets::encode_eigenstate(tab, golay(), 0, basis, sign, rng);
            gadgets::convert_up(tab, 0, rng);
            gadgets::convert_down(tab, 0, rng);
            CHECK(gadgets::logical_expectation(tab, golay(), 0, basis) == sign);
            CHECK(stabilizers_clean(tab, golay(), 0));
        }
    }
}

TEST_CASE("conversion decodes injected errors through the shared syndromes") {
    std::mt19937_64 rng(406);

    SUBCASE("Z errors on the input block before growing") {
        for (int trial = 0; trial < 10; ++trial) {
            Tableau tab(95);
            gadgets::encode_eigenstate(tab, golay(), 0, 'Y', -1, rng);
            BitVec err(95);
            while (err.weight() < 3) err.set(rng() % 23, true);
            tab.apply_pauli(Pauli::z_on(err));
            gadgets::convert_up(tab, 0, rng);
            CHECK(gadgets::logical_expectation(tab, doubled(), 0, 'Y') == -1);
            CHECK(stabilizers_clean(tab, doubled(), 0));
        }
    }
    SUBCASE("X errors on the input block before growing") {
        for (int trial = 0; trial < 10; ++trial) {
            Tableau tab(95);
            gadgets::encode_eigenstate(tab, golay(), 0, 'X', 1, rng);
            BitVec err(95);
            while (err.weight() < 3) err.set(rng() % 23, true);
            tab.apply_pauli(Pauli::x_on(err));
            gadgets::convert_up(tab, 0, rng);
            CHECK(gadgets::logical_expectation(tab, doubled(), 0, 'X') == 1);
            CHECK(stabilizers_clean(tab, doubled(), 0));
        }
    }
    SUBCASE("Z errors anywhere on the doubled block before shrinking") {
        for (int trial = 0; trial < 10; ++trial) {
            Tableau tab(95);
            gadgets::encode_eigenstate(tab, doubled(), 0, 'Z', -1, rng);
            BitVec err(95);
            while (err.weight() < 3) err.set(rng() % 95, true);
            tab.apply_pauli(Pauli::z_on(err));
            gadgets::convert_down(tab, 0, rng);
            CHECK(gadgets::logical_expectation(tab, golay(), 0, 'Z') == -1);
            CHECK(stabilizers_clean(tab, golay(), 0));
        }
    }
    SUBCASE("X errors anywhere on the doubled block before shrinking") {
        for (int trial = 0; trial < 10; ++trial) {
            Tableau tab(95);
            gadgets::encode_eigenstate(tab, doubled(), 0, 'X', -1, rng);
            BitVec err(95);
            while (err.weight() < 3) err.set(rng() % 95, true);
            tab.apply_pauli(Pauli::x_on(err));
            gadgets::convert_down(tab, 0, rng);
            CHECK(gadgets::logical_expectation(tab, golay(), 0, 'X') == -1);
            CHECK(stabilizers_clean(tab, golay(), 0));
        }
    }
}

TEST_CASE("teleportation gadgets convert in both directions") {
    std::mt19937_64 rng(407);
    for (auto [basis, sign] : kEigenstates) {
        CAPTURE(basis);
        CAPTURE(sign);
        Tableau tab(118);  // doubled block at 0, 23-qubit block at 95
        gadgets::encode_eigenstate(tab, golay(), 95, basis, sign, rng);
        gadgets::encode_eigenstate(tab, doubled(), 0, 'X', 1, rng);

        gadgets::cnot_convert_up(tab, 95, 0, rng);
        CHECK(gadgets::logical_expectation(tab, doubled(), 0, basis) == sign);
        // the consumed source block is handed back as logical |0>
        CHECK(gadgets::logical_expectation(tab, golay(), 95, 'Z') == 1);

        gadgets::cnot_convert_down(tab, 0, 95, rng);
        CHECK(gadgets::logical_expectation(tab, golay(), 95, basis) == sign);
        CHECK(gadgets::logical_expectation(tab, doubled(), 0, 'X') == 1);
        CHECK(stabilizers_clean(tab, golay(), 95));
    }
}

TEST_CASE("s gadget acts as logical S") {
    // S: X -> Y -> -X; Z fixed
    const std::array<std::array<std::pair<char, int>, 2>, 6> map{{
        {{{'X', 1}, {'Y', 1}}},
        {{{'X', -1}, {'Y', -1}}},
        {{{'Y', 1}, {'X', -1}}},
        {{{'Y', -1}, {'X', 1}}},
        {{{'Z', 1}, {'Z', 1}}},
        {{{'Z', -1}, {'Z', -1}}},
    }};
    for (std::uint64_t seed = 11; seed <= 13; ++seed) {
        std::mt19937_64 rng(seed);
        for (const auto& entry : map) {
            auto [in_basis, in_sign] = entry[0];
            auto [out_basis, out_sign] = entry[1];
            CAPTURE(in_basis);
            CAPTURE(in_sign);
            Tableau tab(118);  // data block at 0, workspace at 23
            gadgets::encode_eigenstate(tab, golay(), 0, in_basis, in_sign, rng);
            gadgets::s_gadget(tab, 0, 23, rng);
            CHECK(gadgets::logical_expectation(tab, golay(), 0, out_basis) == out_sign);
            CHECK(stabilizers_clean(tab, golay(), 0));
            // the workspace is handed back as logical |+>
            CHECK(gadgets::logical_expectation(tab, doubled(), 23, 'X') == 1);
        }
    }
}

TEST_CASE("two s gadgets equal logical Z") {
    std::mt19937_64 rng(408);
    Tableau tab(118);
    gadgets::encode_eigenstate(tab, golay(), 0, 'X', 1, rng);
    gadgets::s_gadget(tab, 0, 23, rng);
    gadgets::s_gadget(tab, 0, 23, rng);
    CHECK(gadgets::logical_expectation(tab, golay(), 0, 'X') == -1);
}

TEST_CASE("script runner executes a logical circuit") {
    const char* script = R"(
# logical CNOT between two 23-qubit blocks
block a golay23
block b golay23
encode a Z -
encode b Z +
cnot a b
measure b Z m0
expect a Z ea
)";
    auto res = gadgets::run_script(script, 99);
    REQUIRE(res.records.size() == 2);
    CHECK(res.records[0].first == "m0");
    CHECK(res.records[0].second == "1");
    CHECK(res.records[1].first == "ea");
    CHECK(res.records[1].second == "-1");
}

TEST_CASE("script runner handles conditioned corrections") {
    // one-bit teleportation of |-> between two blocks
    const char* script = R"(
block src golay23
block dst golay23
encode src X -
encode dst Z +
cnot src dst
measure src X m
cpauli m Z dst
expect dst X out
)";
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto res = gadgets::run_script(script, seed);
        CHECK(res.records.back().second == "-1");
    }
}

TEST_CASE("script runner records stabilizer measurements") {
    const char* script = R"(
block a tri49
encode a Z +
measure-stabs a x sx
measure-stabs a z sz
)";
    auto res = gadgets::run_script(script, 5);
    REQUIRE(res.records.size() == 2);
    CHECK(res.records[0].second == std::string(13, '0'));
    CHECK(res.records[1].second == std::string(35, '0'));
}

TEST_CASE("script runner is deterministic per seed") {
    const char* script = R"(
block a golay23
encode a Z +
measure a X m0
measure a Z m1
)";
    auto a = gadgets::run_script(script, 1234);
    auto b = gadgets::run_script(script, 1234);
    CHECK(a.records == b.records);
}

TEST_CASE("script runner rejects bad input") {
    CHECK_THROWS_WITH_AS(gadgets::run_script("block a golay23\nt a\n", 0),
                         doctest::Contains("non-Clifford"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(gadgets::run_script("block a golay23\nfrobnicate a\n", 0),
                         doctest::Contains("unknown operation"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(gadgets::run_script("block a golay23\nencode b Z +\n", 0),
                         doctest::Contains("unknown block"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(gadgets::run_script("block a golay23\nblock b tri49\ncnot a b\n", 0),
                         doctest::Contains("incompatible"), std::invalid_argument);
    CHECK_THROWS_AS(gadgets::run_script("# nothing\n", 0), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        gadgets::run_script("block a golay23\nencode a Z +\nmeasure a Z m\nmeasure a Z m\n", 0),
        doctest::Contains("duplicate"), std::invalid_argument);
}

TEST_CASE("canned scenarios run clean over every eigenstate") {
    for (const std::string name :
         {"convert_up", "convert_down", "roundtrip", "cnot_up", "cnot_down"}) {
        CAPTURE(name);
        auto report = gadgets::run_scenario(name, 12, 0x5eed5001);
        CHECK(report.trials == 12);
        CHECK(report.mismatches == 0);
    }
    auto sg = gadgets::run_scenario("s_gadget", 12, 0x5eed5002);
    CHECK(sg.mismatches == 0);
    REQUIRE(sg.notes.size() == 6);
    CHECK(sg.notes[0] == "X+ > Y+");
    CHECK(sg.notes[2] == "Y+ > X-");
    CHECK_THROWS_AS(gadgets::run_scenario("warp", 1, 0), std::invalid_argument);
}
