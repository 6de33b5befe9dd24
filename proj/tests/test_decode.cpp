#include <stdexcept>
#include <array>
#include <cstdint>
#include <map>
#include <random>

#include "codes.hpp"
#include "decode.hpp"
#include "doctest.h"

using dtc::gf2::BitMatrix;
using dtc::gf2::BitVec;
namespace codes = dtc::codes;
namespace decode = dtc::decode;
using decode::Rule;

namespace {

BitVec syndrome_bits(const BitMatrix& stabs, const BitVec& v) {
    return dtc::gf2::syndrome_of(stabs, v);
}

BitVec error_on(std::size_t n, std::initializer_list<std::size_t> qubits) {
    BitVec e(n);
    for (auto q : qubits) e.flip(q);
    return e;
}

// residual of a shared-stabilizer decode is harmless exactly when it has zero
// shared syndrome and even weight (all-ones logicals)
bool corrected(const BitMatrix& shared, const BitVec& e, const BitVec& corr) {
    BitVec r = e ^ corr;
    return syndrome_bits(shared, r).is_zero() && !r.odd_weight();
}

}  // namespace

TEST_CASE("golay lookup is a perfect covering") {
    std::array<std::size_t, 4> histogram{};
    for (std::uint32_t s = 0; s < 2048; ++s) {
        BitVec syn(11);
        for (std::size_t r = 0; r < 11; ++r)
            if (s >> r & 1u) syn.flip(r);
        auto res = decode::decode_golay(syn);
        REQUIRE(res.weight <= 3);
        REQUIRE(res.correction.weight() == res.weight);
        ++histogram[res.weight];

        const auto b0 = std::get<codes::SelfDualCss>(codes::catalog("golay23")).b0;
        CHECK(syndrome_bits(b0, res.correction) == syn);
    }
    CHECK(histogram[0] == 1);
    CHECK(histogram[1] == 23);
    CHECK(histogram[2] == 253);
    CHECK(histogram[3] == 1771);
}

TEST_CASE("golay decoding inside the guaranteed radius is exact") {
    const auto b0 = std::get<codes::SelfDualCss>(codes::catalog("golay23")).b0;
    BitVec e = error_on(23, {5});
    CHECK(decode::decode_golay(syndrome_bits(b0, e)).correction == e);

    e = error_on(23, {2, 9, 17});
    CHECK(decode::decode_golay(syndrome_bits(b0, e)).correction == e);
}

TEST_CASE("color17 table decodes weight-2 errors into the right coset") {
    const auto b0 = std::get<codes::SelfDualCss>(codes::catalog("color17")).b0;

    auto zero = decode::decode_color17(BitVec(8));
    CHECK(zero.correction.is_zero());
    CHECK(zero.wE == 0);
    CHECK(zero.wEL == 5);

    bool weight3_seen = false;
    for (std::size_t a = 0; a < 17; ++a)
        for (std::size_t b = a + 1; b < 17; ++b) {
            BitVec e = error_on(17, {a, b});
            auto res = decode::decode_color17(syndrome_bits(b0, e));
            CHECK(res.correction.weight() <= 2);
            CHECK(syndrome_bits(b0, res.correction) == syndrome_bits(b0, e));
            CHECK(res.correction.weight() % 2 == e.weight() % 2);
        }
    for (std::uint32_t s = 0; s < 256 && !weight3_seen; ++s) {
        BitVec syn(8);
        for (std::size_t r = 0; r < 8; ++r)
            if (s >> r & 1u) syn.flip(r);
        weight3_seen = decode::decode_color17(syn).wE == 3;
    }
    CHECK(weight3_seen);
}

TEST_CASE("rm15 shared table is flat outside the zero syndrome") {
    const auto b0 = std::get<codes::TriorthogonalCode>(codes::catalog("rm15")).b0;
    auto zero = decode::decode_rm15_shared(BitVec(4));
    CHECK(zero.correction.is_zero());
    CHECK(zero.wE == 0);
    CHECK(zero.wEL == 3);

    for (std::size_t q = 0; q < 15; ++q) {
        BitVec e = error_on(15, {q});
        auto res = decode::decode_rm15_shared(syndrome_bits(b0, e));
        CHECK(res.correction == e);  // columns are distinct, so weight 1 is unique
        CHECK(res.wE == 1);
        CHECK(res.wEL == 2);
    }
}

TEST_CASE("fixed plusL logicals") {
    CHECK(decode::logical_rep_rm15().support() == std::vector<std::size_t>{0, 1, 2});
    CHECK(decode::logical_rep_tri49().weight() == 5);
    CHECK(syndrome_bits(decode::shared_stabilizers49(), decode::logical_rep_tri49()).is_zero());
    CHECK(decode::logical_rep_tri49().odd_weight());
}

TEST_CASE("shared decoding of the 49-qubit code reproduces every syndrome") {
    const BitMatrix& shared = decode::shared_stabilizers49();
    for (std::uint32_t s = 0; s < (1u << 13); ++s) {
        BitVec syn(13);
        for (std::size_t r = 0; r < 13; ++r)
            if (s >> r & 1u) syn.flip(r);
        auto dec = decode::decode_shared49(syn);
        CHECK(syndrome_bits(shared, dec.correction) == syn);
    }
}

TEST_CASE("49-qubit decoder corrects every weight-2 error") {
    const BitMatrix& shared = decode::shared_stabilizers49();
    std::size_t cases = 0;
    for (std::size_t a = 0; a < 49; ++a) {
        BitVec e1 = error_on(49, {a});
        CHECK(corrected(shared, e1, decode::decode_shared49(syndrome_bits(shared, e1)).correction));
        for (std::size_t b = a + 1; b < 49; ++b) {
            BitVec e = error_on(49, {a, b});
            auto dec = decode::decode_shared49(syndrome_bits(shared, e));
            CAPTURE(a);
            CAPTURE(b);
            CHECK(corrected(shared, e, dec.correction));
            ++cases;
        }
    }
    CHECK(cases == 1176);
}

TEST_CASE("parity-repair rules on concrete errors") {
    const BitMatrix& shared = decode::shared_stabilizers49();

    SUBCASE("move relocates a color correction to the second block") {
        BitVec e = error_on(49, {20, 40});  // second color block + inner block
        auto dec = decode::decode_shared49(syndrome_bits(shared, e));
        CHECK(dec.rule == Rule::move);
        CHECK(dec.correction == e);
    }
    SUBCASE("plus2 touches the first qubit of both color blocks") {
        BitVec e = error_on(49, {0, 17});
        auto dec = decode::decode_shared49(syndrome_bits(shared, e));
        CHECK(dec.rule == Rule::plus2);
        CHECK(dec.correction == e);
    }
    SUBCASE("plusL swaps the inner correction's coset class") {
        BitVec e = error_on(49, {34, 35});
        auto dec = decode::decode_shared49(syndrome_bits(shared, e));
        CHECK(dec.rule == Rule::plusL);
        CHECK(dec.correction == e);
    }
}

TEST_CASE("decision table of the 49-qubit decoder") {
    struct Expect {
        std::size_t color, rm;
        bool parity;
        Rule rule;
        std::size_t wE, wEL;
    };
    const Expect want[16] = {
        {0, 0, false, Rule::none, 0, 5},  {0, 0, true, Rule::plus2, 2, 3},
        {0, 1, false, Rule::none, 1, 4},  {0, 1, true, Rule::plusL, 2, 3},
        {1, 0, false, Rule::none, 1, 4},  {1, 0, true, Rule::move, 1, 4},
        {1, 1, false, Rule::none, 2, 3},  {1, 1, true, Rule::move, 2, 3},
        {2, 0, false, Rule::none, 2, 3},  {2, 0, true, Rule::move, 2, 3},
        {2, 1, false, Rule::none, 3, 4},  {2, 1, true, Rule::move, 3, 4},
        {3, 0, false, Rule::none, 3, 4},  {3, 0, true, Rule::move, 3, 4},
        {3, 1, false, Rule::none, 4, 5},  {3, 1, true, Rule::move, 4, 5},
    };

    auto rows = decode::table_tri49();
    REQUIRE(rows.size() == 16);
    for (std::size_t i = 0; i < 16; ++i) {
        CAPTURE(i);
        CHECK(rows[i].outer_weight == want[i].color);
        CHECK(rows[i].inner_weight == want[i].rm);
        CHECK(rows[i].parity_violated == want[i].parity);
        CHECK(rows[i].rule == want[i].rule);
        CHECK(rows[i].wE == want[i].wE);
        CHECK(rows[i].wEL == want[i].wEL);
    }

    // the repair threshold is the one that picks the lighter class: plus2
    // costs wE+2, plusL costs wEL
    for (const auto& row : rows) {
        if (row.rule == Rule::plus2) CHECK(row.wE <= row.wEL);
        if (row.rule == Rule::plusL) CHECK(row.wEL < row.wE + 2 + 2);
    }
}

TEST_CASE("decision table of the 95-qubit decoder") {
    struct Expect {
        std::size_t golay, inner;
        bool parity;
        Rule rule;
    };
    const Expect want[12] = {
        {0, 0, false, Rule::none}, {0, 0, true, Rule::plus2}, {0, 1, false, Rule::none},
        {0, 1, true, Rule::plus2}, {0, 2, false, Rule::none}, {0, 2, true, Rule::plusL},
        {0, 3, false, Rule::none}, {0, 3, true, Rule::plusL}, {0, 4, false, Rule::none},
        {0, 4, true, Rule::plusL}, {1, 0, false, Rule::none}, {1, 0, true, Rule::move},
    };
    auto rows = decode::table_tri95();
    REQUIRE(rows.size() == 12);
    for (std::size_t i = 0; i < 12; ++i) {
        CAPTURE(i);
        CHECK(rows[i].outer_weight == want[i].golay);
        CHECK(rows[i].inner_weight == want[i].inner);
        CHECK(rows[i].parity_violated == want[i].parity);
        CHECK(rows[i].rule == want[i].rule);
    }
}

TEST_CASE("95-qubit decoder reproduces sampled syndromes") {
    const BitMatrix& shared = decode::shared_stabilizers95();
    std::mt19937_64 rng(0x5eed2001ull);
    for (int trial = 0; trial < 400; ++trial) {
        BitVec syn(25);
        for (std::size_t r = 0; r < 25; ++r)
            if (rng() & 1) syn.flip(r);
        auto dec = decode::decode_shared95(syn);
        CHECK(syndrome_bits(shared, dec.correction) == syn);
    }
}

TEST_CASE("95-qubit decoder corrects weight-1 and weight-2 errors") {
    const BitMatrix& shared = decode::shared_stabilizers95();
    for (std::size_t a = 0; a < 95; ++a) {
        BitVec e1 = error_on(95, {a});
        CHECK(corrected(shared, e1, decode::decode_shared95(syndrome_bits(shared, e1)).correction));
    }
    std::mt19937_64 rng(0x5eed2002ull);
    for (int trial = 0; trial < 600; ++trial) {
        std::size_t a = rng() % 95, b = rng() % 95;
        if (a == b) continue;
        BitVec e = error_on(95, {a, b});
        auto dec = decode::decode_shared95(syndrome_bits(shared, e));
        CHECK(corrected(shared, e, dec.correction));
    }
}

TEST_CASE("95-qubit move rule on a Golay-block error") {
    const BitMatrix& shared = decode::shared_stabilizers95();
    BitVec e = error_on(95, {23 + 7, 46 + 3});  // second Golay block + inner block
    auto dec = decode::decode_shared95(syndrome_bits(shared, e));
    CHECK(dec.rule == Rule::move);
    CHECK(dec.correction == e);
}

TEST_CASE("correction plans cover both error types") {
    decode::SyndromePair sp;
    sp.x_syndrome = BitVec(13);
    sp.z_syndrome = BitVec(13);
    auto plan = decode::decode_tri49(sp);
    CHECK(plan.x_correction.is_zero());
    CHECK(plan.z_correction.is_zero());
    CHECK(plan.x_rule == Rule::none);
    CHECK(plan.z_rule == Rule::none);
    CHECK(plan.z_components.size() == 2);

    const BitMatrix& shared = decode::shared_stabilizers49();
    BitVec ez = error_on(49, {4, 30});     // Z error, seen by X stabilizers
    BitVec ex = error_on(49, {10});        // X error, seen by Z stabilizers
    sp.x_syndrome = syndrome_bits(shared, ez);
    sp.z_syndrome = syndrome_bits(shared, ex);
    plan = decode::decode_tri49(sp);
    CHECK(syndrome_bits(shared, plan.z_correction) == sp.x_syndrome);
    CHECK(syndrome_bits(shared, plan.x_correction) == sp.z_syndrome);
}

TEST_CASE("full stabilizer set decodes X errors by direct search") {
    auto css = codes::as_css(codes::catalog("tri49"));
    decode::SyndromePair sp;
    sp.stabilizer_set = decode::StabilizerSet::full;
    BitVec ex = error_on(49, {8, 27});
    sp.x_syndrome = BitVec(13);
    sp.z_syndrome = syndrome_bits(css.z_stabs, ex);
    auto plan = decode::decode_tri49(sp);
    CHECK(plan.x_correction == ex);  // weight 2 is inside the unique-decoding radius
    CHECK(plan.x_rule == Rule::none);
    CHECK(plan.x_components.size() == 1);
    CHECK(plan.x_components[0].block == "full");
}

TEST_CASE("syndrome length mismatches are rejected") {
    CHECK_THROWS_AS(decode::decode_golay(BitVec(10)), std::invalid_argument);
    CHECK_THROWS_AS(decode::decode_color17(BitVec(9)), std::invalid_argument);
    CHECK_THROWS_AS(decode::decode_rm15_shared(BitVec(5)), std::invalid_argument);
    CHECK_THROWS_AS(decode::decode_shared49(BitVec(12)), std::invalid_argument);
    CHECK_THROWS_AS(decode::decode_shared95(BitVec(13)), std::invalid_argument);

    decode::SyndromePair sp;
    sp.x_syndrome = BitVec(13);
    sp.z_syndrome = BitVec(35);  // full-length on a shared-mode pair
    CHECK_THROWS_AS(decode::decode_tri49(sp), std::invalid_argument);
}

TEST_CASE("rule names") {
    CHECK(decode::to_string(Rule::none) == "none");
    CHECK(decode::to_string(Rule::move) == "move");
    CHECK(decode::to_string(Rule::plus2) == "plus2");
    CHECK(decode::to_string(Rule::plusL) == "plusL");
}
