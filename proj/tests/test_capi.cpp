#include <cstring>
#include <string>

#include "doctest.h"
#include "dtcodes.h"

namespace {

// Owns a report string from the C API for the duration of a check.
struct Owned {
    char* text = nullptr;
    ~Owned() { dtc_free(text); }
    std::string str() const { return text ? std::string(text) : std::string(); }
};

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // anonymous namespace

TEST_CASE("catalog report lists every built-in code and ends cleanly") {
    Owned report;
    REQUIRE(dtc_catalog(&report.text) == DTC_OK);
    const std::string text = report.str();
    CHECK(contains(text, "code: golay23 [[23,1,7]] self-dual"));
    CHECK(contains(text, "code: tri49 [[49,1,5]] triorthogonal"));
    CHECK(contains(text, "code: tri95 [[95,1,7]] triorthogonal"));
    CHECK(contains(text, "status: ok\n"));
}

TEST_CASE("open, describe, verify, export round trip") {
    dtc_code* code = nullptr;
    REQUIRE(dtc_code_open("tri49", &code) == DTC_OK);
    Owned describe;
    REQUIRE(dtc_code_describe(code, &describe.text) == DTC_OK);
    CHECK(contains(describe.str(), "n: 49"));
    CHECK(contains(describe.str(), "kind: triorthogonal"));
    CHECK(contains(describe.str(), "b0_rows: 13"));

    Owned verify;
    REQUIRE(dtc_code_verify(code, &verify.text) == DTC_OK);
    CHECK(contains(verify.str(), "valid: yes"));
    CHECK(contains(verify.str(), "b_matrix.k3: pass"));

    Owned text;
    REQUIRE(dtc_code_export(code, &text.text) == DTC_OK);
    CHECK(text.str().find("status:") == std::string::npos);
    dtc_code_close(code);
}

TEST_CASE("unknown names set a readable error") {
    dtc_code* code = nullptr;
    CHECK(dtc_code_open("nonesuch", &code) == DTC_ERR_INVALID);
    CHECK(contains(dtc_last_error(), "nonesuch"));
}

TEST_CASE("doubling through the C surface checks variants") {
    dtc_code* outer = nullptr;
    dtc_code* inner = nullptr;
    REQUIRE(dtc_code_open("golay23", &outer) == DTC_OK);
    REQUIRE(dtc_code_open("tri49", &inner) == DTC_OK);
    dtc_code* doubled = nullptr;
    REQUIRE(dtc_double(outer, inner, 0, &doubled) == DTC_OK);
    Owned describe;
    REQUIRE(dtc_code_describe(doubled, &describe.text) == DTC_OK);
    CHECK(contains(describe.str(), "n: 95"));
    CHECK(contains(describe.str(), "b0_rows: 25"));
    CHECK(contains(describe.str(), "c_rows: 44"));

    dtc_code* lowweight = nullptr;
    REQUIRE(dtc_double(outer, inner, 1, &lowweight) == DTC_OK);
    Owned lw_describe;
    REQUIRE(dtc_code_describe(lowweight, &lw_describe.text) == DTC_OK);
    CHECK(contains(lw_describe.str(), "n: 95"));
    CHECK(contains(lw_describe.str(), "c_rows: 44"));
    Owned lw_verify;
    REQUIRE(dtc_code_verify(lowweight, &lw_verify.text) == DTC_OK);
    CHECK(contains(lw_verify.str(), "valid: yes"));
    dtc_code_close(lowweight);

    dtc_code* bad = nullptr;
    CHECK(dtc_double(inner, inner, 0, &bad) == DTC_ERR_INVALID);
    CHECK(dtc_double(outer, inner, 7, &bad) == DTC_ERR_INVALID);
    dtc_code_close(doubled);
    dtc_code_close(inner);
    dtc_code_close(outer);
}

TEST_CASE("distance report states the certified value") {
    dtc_code* code = nullptr;
    REQUIRE(dtc_code_open("steane7", &code) == DTC_OK);
    Owned report;
    REQUIRE(dtc_distance(code, 'Z', 3, 0, 1, &report.text) == DTC_OK);
    CHECK(contains(report.str(), "result: distance = 3"));
    CHECK(contains(report.str(), "witness:"));
    Owned bad;
    CHECK(dtc_distance(code, 'Q', 3, 0, 1, &bad.text) == DTC_ERR_INVALID);
    dtc_code_close(code);
}

TEST_CASE("transversal-T certificate is rejected on self-dual inputs") {
    dtc_code* rm = nullptr;
    REQUIRE(dtc_code_open("rm15", &rm) == DTC_OK);
    Owned report;
    REQUIRE(dtc_tcert(rm, 0, &report.text) == DTC_OK);
    CHECK(contains(report.str(), "diagonal: yes"));
    dtc_code_close(rm);

    dtc_code* golay = nullptr;
    REQUIRE(dtc_code_open("golay23", &golay) == DTC_OK);
    Owned bad;
    CHECK(dtc_tcert(golay, 0, &bad.text) == DTC_ERR_INVALID);
    dtc_code_close(golay);
}

TEST_CASE("decoding over the C surface mirrors the library") {
    Owned report;
    REQUIRE(dtc_decode("tri49", 'Z', "0000000000000", 0, &report.text) == DTC_OK);
    CHECK(contains(report.str(), "rule: none"));
    CHECK(contains(report.str(), "correction: -"));

    Owned golay;
    REQUIRE(dtc_decode("golay23", 'Z', "00000000000", 0, &golay.text) == DTC_OK);
    CHECK(contains(golay.str(), "correction_weight: 0"));

    Owned bad;
    CHECK(dtc_decode("golay23", 'Z', "0101", 0, &bad.text) == DTC_ERR_INVALID);
    CHECK(dtc_decode("golay23", 'Z', "00000000000", 1, &bad.text) == DTC_ERR_INVALID);
    CHECK(dtc_decode("steane7", 'Z', "000", 0, &bad.text) == DTC_ERR_INVALID);
    CHECK(dtc_decode("tri49", 'Z', "junk", 0, &bad.text) == DTC_ERR_INVALID);
}

TEST_CASE("decision tables arrive with one row per line") {
    Owned report;
    REQUIRE(dtc_tables("tri49", &report.text) == DTC_OK);
    CHECK(contains(report.str(), "row: outer=0 inner=0 parity=no rule=none wE=0 wEL=5"));
    CHECK(contains(report.str(), "rows: 16"));
    Owned big;
    REQUIRE(dtc_tables("tri95", &big.text) == DTC_OK);
    CHECK(contains(big.str(), "rows: 12"));
    Owned bad;
    CHECK(dtc_tables("golay23", &bad.text) == DTC_ERR_INVALID);
}

TEST_CASE("scenario and script simulation reports") {
    Owned scenario;
    REQUIRE(dtc_simulate_scenario("roundtrip", 6, 7, &scenario.text) == DTC_OK);
    CHECK(contains(scenario.str(), "mismatches: 0"));
    Owned bad;
    CHECK(dtc_simulate_scenario("warp", 1, 0, &bad.text) == DTC_ERR_INVALID);

    Owned script;
    const char* text = "block a golay23\nencode a X -\nexpect a X e\n";
    REQUIRE(dtc_simulate_script(text, 0, &script.text) == DTC_OK);
    CHECK(contains(script.str(), "record: e = -1"));
    CHECK(contains(script.str(), "records: 1"));
}

TEST_CASE("montecarlo reports are reproducible byte for byte") {
    Owned first;
    REQUIRE(dtc_montecarlo("tri49", 'Z', "shared", "fixed_weight", 3, 0.0, 400, 41, 0,
                           &first.text) == DTC_OK);
    Owned second;
    REQUIRE(dtc_montecarlo("tri49", 'Z', "shared", "fixed_weight", 3, 0.0, 400, 41, 2,
                           &second.text) == DTC_OK);
    // Different thread counts, identical tallies and formatting except the
    // echoed thread option.
    CHECK(contains(first.str(), "failure_rate:"));
    std::string a = first.str(), b = second.str();
    a.erase(a.find("threads:"), a.find('\n', a.find("threads:")) - a.find("threads:"));
    b.erase(b.find("threads:"), b.find('\n', b.find("threads:")) - b.find("threads:"));
    CHECK(a == b);

    Owned bad;
    CHECK(dtc_montecarlo("tri49", 'Z', "sideways", "fixed_weight", 1, 0.0, 10, 0, 1,
                         &bad.text) == DTC_ERR_INVALID);
    CHECK(dtc_montecarlo("tri49", 'Z', "shared", "gaussian", 1, 0.0, 10, 0, 1, &bad.text) ==
          DTC_ERR_INVALID);
}

TEST_CASE("exhaustive sweeps report the weight-radius guarantee") {
    Owned report;
    REQUIRE(dtc_montecarlo_exhaustive("tri49", 'Z', 2, "shared", &report.text) == DTC_OK);
    CHECK(contains(report.str(), "logical: 0"));
    CHECK(contains(report.str(), "first_failure: none"));
    CHECK(contains(report.str(), "cases: 1225"));
}

TEST_CASE("cost report carries values, traces, and reference checks") {
    Owned report;
    REQUIRE(dtc_costs(nullptr, &report.text) == DTC_OK);
    const std::string text = report.str();
    CHECK(contains(text, "qubits.distillation_basic: 207 (23 * 9)"));
    CHECK(contains(text, "qubits.distillation_steane_style: 1863 (9 * 23 * (1 + 4 + 4)) [matches 1863]"));
    CHECK(contains(text, "cnot.per_round: 1403 (61 * 23) [matches 1403]"));
    CHECK(contains(text, "cnot.doubled_total: 6721 (5676 + 1045)"));
    CHECK(contains(text, "concatenated: golay23 . tri95 = [[2185,1,49]] corrects 24"));
    CHECK(contains(text, "concatenated: steane7 . rm15 = [[105,1,9]] corrects 4"));

    Owned tweaked;
    REQUIRE(dtc_costs("golay_noisy_ancilla_per_verified = 5", &tweaked.text) == DTC_OK);
    CHECK(contains(tweaked.str(), "[differs from 1863]"));
    Owned bad;
    CHECK(dtc_costs("mystery = 1", &bad.text) == DTC_ERR_INVALID);
}

TEST_CASE("null arguments are rejected without crashing") {
    CHECK(dtc_catalog(nullptr) == DTC_ERR_INVALID);
    dtc_code* code = nullptr;
    CHECK(dtc_code_open(nullptr, &code) == DTC_ERR_INVALID);
    Owned out;
    CHECK(dtc_code_describe(nullptr, &out.text) == DTC_ERR_INVALID);
    CHECK(dtc_decode("tri49", 'Z', nullptr, 0, &out.text) == DTC_ERR_INVALID);
    CHECK(dtc_simulate_script(nullptr, 0, &out.text) == DTC_ERR_INVALID);
    CHECK(std::strlen(dtc_version()) > 0);
}
