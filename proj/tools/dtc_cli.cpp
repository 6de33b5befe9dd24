#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dtcodes.h"

// Thin shell over the C API: every subcommand makes one or two library
// calls, prints the returned report to stdout, and exits 0.  Invalid input
// exits 2, runtime failures exit 1, both with a one-line diagnostic on
// stderr.

namespace {

struct ToolError {
    int code;
};

[[noreturn]] void bail(int rc) {
    std::cerr << "error: " << dtc_last_error() << '\n';
    throw ToolError{rc == DTC_ERR_INVALID ? 2 : 1};
}

[[noreturn]] void bail_usage(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    throw ToolError{2};
}

struct Report {
    char* text = nullptr;
    Report() = default;
    Report(const Report&) = delete;
    Report& operator=(const Report&) = delete;
    ~Report() { dtc_free(text); }
};

struct CodeHandle {
    dtc_code* ptr = nullptr;
    explicit CodeHandle(const std::string& name) {
        if (int rc = dtc_code_open(name.c_str(), &ptr); rc != DTC_OK) bail(rc);
    }
    CodeHandle() = default;
    CodeHandle(const CodeHandle&) = delete;
    CodeHandle& operator=(const CodeHandle&) = delete;
    ~CodeHandle() { dtc_code_close(ptr); }
};

void emit(const char* report, const std::string& out_path) {
    std::fputs(report, stdout);
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) bail_usage("cannot write '" + out_path + "'");
        file << report;
    }
}

char type_char(const std::string& type) { return type.empty() ? '?' : type[0]; }

std::string slurp(const std::string& path) {
    std::ifstream file(path);
    if (!file) bail_usage("cannot read '" + path + "'");
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"doubled triorthogonal code toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", dtc_version());

    // catalog
    std::string catalog_out;
    auto* cmd_catalog = app.add_subcommand("catalog", "list the built-in codes");
    cmd_catalog->add_option("--out", catalog_out, "also write the report to this file");
    cmd_catalog->callback([&] {
        Report report;
        if (int rc = dtc_catalog(&report.text); rc != DTC_OK) bail(rc);
        emit(report.text, catalog_out);
    });

    // verify
    std::string verify_code, verify_out;
    auto* cmd_verify = app.add_subcommand("verify", "check the defining properties of a code");
    cmd_verify->add_option("code", verify_code, "catalog name or code file")->required();
    cmd_verify->add_option("--out", verify_out, "also write the report to this file");
    cmd_verify->callback([&] {
        CodeHandle code(verify_code);
        Report report;
        if (int rc = dtc_code_verify(code.ptr, &report.text); rc != DTC_OK) bail(rc);
        emit(report.text, verify_out);
    });

    // double
    std::string dbl_outer, dbl_inner, dbl_out;
    bool dbl_low = false;
    auto* cmd_double =
        app.add_subcommand("double", "double a self-dual code around a triorthogonal core");
    cmd_double->add_option("self_dual", dbl_outer, "outer self-dual code")->required();
    cmd_double->add_option("inner", dbl_inner, "inner triorthogonal code")->required();
    cmd_double->add_flag("--low-weight", dbl_low, "use the low-weight stabilizer completion");
    cmd_double->add_option("--out", dbl_out, "write the constructed code as code text");
    cmd_double->callback([&] {
        CodeHandle outer(dbl_outer);
        CodeHandle inner(dbl_inner);
        CodeHandle result;
        if (int rc = dtc_double(outer.ptr, inner.ptr, dbl_low ? 1 : 0, &result.ptr);
            rc != DTC_OK)
            bail(rc);
        Report describe;
        if (int rc = dtc_code_describe(result.ptr, &describe.text); rc != DTC_OK) bail(rc);
        emit(describe.text, "");
        if (!dbl_out.empty()) {
            Report text;
            if (int rc = dtc_code_export(result.ptr, &text.text); rc != DTC_OK) bail(rc);
            std::ofstream file(dbl_out);
            if (!file) bail_usage("cannot write '" + dbl_out + "'");
            file << text.text;
        }
    });

    // distance
    std::string dist_code, dist_type = "Z", dist_out;
    unsigned dist_max = 4;
    unsigned long long dist_budget = 0;
    unsigned dist_threads = 0;
    auto* cmd_distance =
        app.add_subcommand("distance", "exhaustive minimum-weight logical search");
    cmd_distance->add_option("code", dist_code, "catalog name or code file")->required();
    cmd_distance->add_option("--type", dist_type, "error type, X or Z (default Z)");
    cmd_distance->add_option("--max-weight", dist_max, "largest weight to enumerate fully");
    cmd_distance->add_option("--budget", dist_budget, "candidate ceiling (0 = default)");
    cmd_distance->add_option("--threads", dist_threads, "worker threads (0 = auto)");
    cmd_distance->add_option("--out", dist_out, "also write the report to this file");
    cmd_distance->callback([&] {
        CodeHandle code(dist_code);
        Report report;
        if (int rc = dtc_distance(code.ptr, type_char(dist_type), dist_max, dist_budget,
                                  dist_threads, &report.text);
            rc != DTC_OK)
            bail(rc);
        emit(report.text, dist_out);
    });

    // tcert
    std::string tcert_code, tcert_out;
    unsigned long long tcert_budget = 0;
    auto* cmd_tcert =
        app.add_subcommand("tcert", "weight-mod-8 certificate for the transversal T gate");
    cmd_tcert->add_option("code", tcert_code, "catalog name or code file")->required();
    cmd_tcert->add_option("--budget", tcert_budget, "enumeration ceiling (0 = default)");
    cmd_tcert->add_option("--out", tcert_out, "also write the report to this file");
    cmd_tcert->callback([&] {
        CodeHandle code(tcert_code);
        Report report;
        if (int rc = dtc_tcert(code.ptr, tcert_budget, &report.text); rc != DTC_OK) bail(rc);
        emit(report.text, tcert_out);
    });

    // decode
    std::string dec_code, dec_type = "Z", dec_syndrome, dec_out;
    bool dec_full = false;
    auto* cmd_decode = app.add_subcommand("decode", "decode one measured syndrome");
    cmd_decode->add_option("code", dec_code, "catalog code with a registered decoder")
        ->required();
    cmd_decode->add_option("--type", dec_type, "error type, X or Z (default Z)");
    cmd_decode->add_option("--syndrome", dec_syndrome, "syndrome bits, e.g. 0100...")
        ->required();
    cmd_decode->add_flag("--full", dec_full,
                         "decode X errors against the full stabilizer set (doubled codes)");
    cmd_decode->add_option("--out", dec_out, "also write the report to this file");
    cmd_decode->callback([&] {
        Report report;
        if (int rc = dtc_decode(dec_code.c_str(), type_char(dec_type), dec_syndrome.c_str(),
                                dec_full ? 1 : 0, &report.text);
            rc != DTC_OK)
            bail(rc);
        emit(report.text, dec_out);
    });

    // tables
    std::string tbl_code, tbl_out;
    auto* cmd_tables =
        app.add_subcommand("tables", "decision table of a doubled code's decoder");
    cmd_tables->add_option("code", tbl_code, "tri49 or tri95")->required();
    cmd_tables->add_option("--out", tbl_out, "also write the report to this file");
    cmd_tables->callback([&] {
        Report report;
        if (int rc = dtc_tables(tbl_code.c_str(), &report.text); rc != DTC_OK) bail(rc);
        emit(report.text, tbl_out);
    });

    // simulate
    std::string sim_scenario, sim_script, sim_out;
    unsigned long long sim_trials = 100, sim_seed = 0;
    auto* cmd_simulate =
        app.add_subcommand("simulate", "stabilizer simulation of the conversion gadgets");
    auto* opt_scenario = cmd_simulate->add_option(
        "--scenario", sim_scenario,
        "canned check: convert_up, convert_down, roundtrip, cnot_up, cnot_down, s_gadget");
    auto* opt_script =
        cmd_simulate->add_option("--script", sim_script, "gadget script file to run");
    opt_scenario->excludes(opt_script);
    cmd_simulate->add_option("--trials", sim_trials, "scenario trials (default 100)");
    cmd_simulate->add_option("--seed", sim_seed, "random seed (default 0)");
    cmd_simulate->add_option("--out", sim_out, "also write the report to this file");
    cmd_simulate->callback([&] {
        Report report;
        if (!sim_scenario.empty()) {
            if (int rc = dtc_simulate_scenario(sim_scenario.c_str(), sim_trials, sim_seed,
                                               &report.text);
                rc != DTC_OK)
                bail(rc);
        } else if (!sim_script.empty()) {
            const std::string text = slurp(sim_script);
            if (int rc = dtc_simulate_script(text.c_str(), sim_seed, &report.text);
                rc != DTC_OK)
                bail(rc);
        } else {
            bail_usage("simulate needs --scenario or --script");
        }
        emit(report.text, sim_out);
    });

    // montecarlo
    std::string mc_code, mc_type = "Z", mc_mode = "shared", mc_model = "fixed_weight", mc_out;
    unsigned mc_weight = 1, mc_threads = 0, mc_max = 3;
    double mc_rate = 0.0;
    unsigned long long mc_trials = 1000, mc_seed = 0;
    bool mc_exhaustive = false;
    auto* cmd_mc = app.add_subcommand("montecarlo", "sample or sweep decoder performance");
    cmd_mc->add_option("code", mc_code, "catalog code")->required();
    cmd_mc->add_option("--type", mc_type, "error type, X or Z (default Z)");
    cmd_mc->add_option("--mode", mc_mode, "decoder mode: shared or full (default shared)");
    cmd_mc->add_option("--model", mc_model, "error model: fixed_weight or iid");
    cmd_mc->add_option("--weight", mc_weight, "error weight for fixed_weight (default 1)");
    cmd_mc->add_option("--rate", mc_rate, "per-qubit flip probability for iid");
    cmd_mc->add_option("--trials", mc_trials, "sample count (default 1000)");
    cmd_mc->add_option("--seed", mc_seed, "root seed (default 0)");
    cmd_mc->add_option("--threads", mc_threads, "worker threads (0 = auto)");
    cmd_mc->add_flag("--exhaustive", mc_exhaustive,
                     "decode every error up to --max-weight instead of sampling");
    cmd_mc->add_option("--max-weight", mc_max, "exhaustive sweep bound (default 3)");
    cmd_mc->add_option("--out", mc_out, "also write the report to this file");
    cmd_mc->callback([&] {
        Report report;
        if (mc_exhaustive) {
            if (int rc = dtc_montecarlo_exhaustive(mc_code.c_str(), type_char(mc_type), mc_max,
                                                   mc_mode.c_str(), &report.text);
                rc != DTC_OK)
                bail(rc);
        } else {
            if (int rc = dtc_montecarlo(mc_code.c_str(), type_char(mc_type), mc_mode.c_str(),
                                        mc_model.c_str(), mc_weight, mc_rate, mc_trials, mc_seed,
                                        mc_threads, &report.text);
                rc != DTC_OK)
                bail(rc);
        }
        emit(report.text, mc_out);
    });

    // costs
    std::string costs_config, costs_out;
    auto* cmd_costs =
        app.add_subcommand("costs", "qubit and CNOT cost arithmetic with traces");
    cmd_costs->add_option("--config", costs_config, "key = value overrides file");
    cmd_costs->add_option("--out", costs_out, "also write the report to this file");
    cmd_costs->callback([&] {
        Report report;
        std::string overrides;
        if (!costs_config.empty()) overrides = slurp(costs_config);
        if (int rc = dtc_costs(costs_config.empty() ? nullptr : overrides.c_str(), &report.text);
            rc != DTC_OK)
            bail(rc);
        emit(report.text, costs_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ToolError& e) {
        return e.code;
    }
    return 0;
}
