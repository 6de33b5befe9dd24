#include "dtcodes.h"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include "analysis.hpp"
#include "codes.hpp"
#include "decode.hpp"
#include "doubling.hpp"
#include "gadgets.hpp"
#include "gf2.hpp"
#include "montecarlo.hpp"
#include "resources.hpp"

struct dtc_code {
    dtc::codes::Code code;
};

namespace {

namespace codes = dtc::codes;
namespace analysis = dtc::analysis;
using dtc::gf2::BitVec;

thread_local std::string g_last_error;

int fail(int code, std::string message) {
    g_last_error = std::move(message);
    return code;
}

int wrap(char** out, const std::function<std::string()>& make_report) {
    if (out == nullptr) return fail(DTC_ERR_INVALID, "output pointer is null");
    try {
        const std::string report = make_report();
        char* buffer = static_cast<char*>(std::malloc(report.size() + 1));
        if (buffer == nullptr) return fail(DTC_ERR_RUNTIME, "out of memory");
        std::memcpy(buffer, report.c_str(), report.size() + 1);
        *out = buffer;
        return DTC_OK;
    } catch (const std::invalid_argument& e) {
        return fail(DTC_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(DTC_ERR_RUNTIME, e.what());
    }
}

const dtc_code* require(const dtc_code* code) {
    if (code == nullptr) throw std::invalid_argument("code handle is null");
    return code;
}

const char* kind_of(const codes::Code& code) {
    return std::holds_alternative<codes::SelfDualCss>(code) ? "self-dual" : "triorthogonal";
}

std::string support_text(const BitVec& v) {
    if (v.is_zero()) return "-";
    std::string out;
    for (auto q : v.support()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(q);
    }
    return out;
}

std::string fixed6(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

char normalized_type(char error_type) {
    const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(error_type)));
    if (t != 'X' && t != 'Z')
        throw std::invalid_argument(std::string("error type must be X or Z, got '") + error_type +
                                    "'");
    return t;
}

BitVec bits_from_string(const char* text, const char* what) {
    if (text == nullptr) throw std::invalid_argument(std::string(what) + " is null");
    const std::string s(text);
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument(std::string(what) + " must be a string of 0s and 1s");
    }
    return v;
}

std::string params_text(const codes::Code& code) {
    std::string d = "?";
    std::visit(
        [&](const auto& c) {
            if (c.d.has_value()) d = std::to_string(*c.d);
        },
        code);
    return "[[" + std::to_string(codes::code_n(code)) + ",1," + d + "]]";
}

std::string describe_text(const codes::Code& code) {
    std::ostringstream out;
    out << "name: " << codes::code_name(code) << '\n';
    out << "kind: " << kind_of(code) << '\n';
    out << "n: " << codes::code_n(code) << '\n';
    out << "k: 1\n";
    std::visit(
        [&](const auto& c) {
            if (c.d.has_value())
                out << "d: " << *c.d << '\n';
            else
                out << "d: unknown\n";
            out << "b1_rows: " << c.b1.nrows() << '\n';
            out << "b0_rows: " << c.b0.nrows() << '\n';
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, codes::SelfDualCss>)
                out << "e_rows: " << c.e.nrows() << '\n';
            else
                out << "c_rows: " << c.c.nrows() << '\n';
        },
        code);
    out << "status: ok\n";
    return out.str();
}

}  // namespace

extern "C" {

const char* dtc_version(void) { return "1.0.0"; }

const char* dtc_last_error(void) { return g_last_error.c_str(); }

void dtc_free(char* report) { std::free(report); }

int dtc_catalog(char** out) {
    return wrap(out, [] {
        std::ostringstream text;
        std::size_t count = 0;
        for (const std::string& name : codes::catalog_names()) {
            codes::Code code = codes::catalog(name);
            text << "code: " << name << ' ' << params_text(code) << ' ' << kind_of(code) << '\n';
            ++count;
        }
        text << "count: " << count << '\n';
        text << "status: ok\n";
        return text.str();
    });
}

int dtc_code_open(const char* name_or_path, dtc_code** out) {
    if (out == nullptr) return fail(DTC_ERR_INVALID, "output pointer is null");
    try {
        if (name_or_path == nullptr) throw std::invalid_argument("code name is null");
        const std::string name(name_or_path);
        codes::Code code = [&]() -> codes::Code {
            if (name == "trivial1") return codes::trivial1();
            try {
                return codes::catalog(name);
            } catch (const std::invalid_argument&) {
                std::ifstream file(name);
                if (!file)
                    throw std::invalid_argument("'" + name +
                                                "' is neither a catalog code nor a readable file");
                std::ostringstream text;
                text << file.rdbuf();
                return codes::parse_code_text(text.str());
            }
        }();
        *out = new dtc_code{std::move(code)};
        return DTC_OK;
    } catch (const std::invalid_argument& e) {
        return fail(DTC_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(DTC_ERR_RUNTIME, e.what());
    }
}

void dtc_code_close(dtc_code* code) { delete code; }

int dtc_code_describe(const dtc_code* code, char** out) {
    return wrap(out, [&] { return describe_text(require(code)->code); });
}

int dtc_code_export(const dtc_code* code, char** out) {
    return wrap(out, [&] { return codes::to_code_text(require(code)->code); });
}

int dtc_code_verify(const dtc_code* code, char** out) {
    return wrap(out, [&] {
        const codes::Code& c = require(code)->code;
        codes::validate(c);
        std::ostringstream text;
        text << "name: " << codes::code_name(c) << '\n';
        text << "kind: " << kind_of(c) << '\n';
        text << "n: " << codes::code_n(c) << '\n';
        text << "valid: yes\n";
        const dtc::gf2::BitMatrix b = codes::b_matrix(c);
        for (int k = 2; k <= 4; ++k)
            text << "b_matrix.k" << k << ": " << (codes::is_k_orthogonal(b, k) ? "pass" : "fail")
                 << '\n';
        text << "status: ok\n";
        return text.str();
    });
}

int dtc_double(const dtc_code* self_dual, const dtc_code* inner, int complement, dtc_code** out) {
    if (out == nullptr) return fail(DTC_ERR_INVALID, "output pointer is null");
    try {
        const codes::Code& outer_code = require(self_dual)->code;
        const codes::Code& inner_code = require(inner)->code;
        if (!std::holds_alternative<codes::SelfDualCss>(outer_code))
            throw std::invalid_argument("doubling needs a self-dual outer code");
        if (!std::holds_alternative<codes::TriorthogonalCode>(inner_code))
            throw std::invalid_argument("doubling needs a triorthogonal inner code");
        if (complement != 0 && complement != 1)
            throw std::invalid_argument("complement selector must be 0 (separated) or 1 (low-weight)");
        dtc::doubling::DoubledCode doubled = dtc::doubling::double_code(
            std::get<codes::SelfDualCss>(outer_code), std::get<codes::TriorthogonalCode>(inner_code));
        codes::TriorthogonalCode result = doubled.base;
        if (complement == 1) {
            result.c = dtc::doubling::z_only_block(result.b0,
                                                   dtc::doubling::complement_lowweight(doubled));
            codes::validate(codes::Code{result});
        }
        *out = new dtc_code{codes::Code{std::move(result)}};
        return DTC_OK;
    } catch (const std::invalid_argument& e) {
        return fail(DTC_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(DTC_ERR_RUNTIME, e.what());
    }
}

int dtc_distance(const dtc_code* code, char error_type, unsigned max_weight,
                 unsigned long long budget, unsigned threads, char** out) {
    return wrap(out, [&] {
        const codes::Code& c = require(code)->code;
        const char t = normalized_type(error_type);
        analysis::SearchLimits limits;
        if (budget != 0) limits.budget = budget;
        limits.threads = threads;
        analysis::DistanceReport report = analysis::min_weight_logical(
            codes::as_css(c), t == 'X' ? analysis::ErrorType::X : analysis::ErrorType::Z,
            max_weight, limits);
        std::ostringstream text;
        text << "name: " << codes::code_name(c) << '\n';
        text << "error_type: " << t << '\n';
        text << "max_weight: " << max_weight << '\n';
        if (report.found) {
            text << "result: distance = " << report.distance << '\n';
            text << "witness: " << support_text(report.witness) << '\n';
        } else {
            text << "result: distance > " << report.search_bound << '\n';
        }
        text << "enumerated_through: " << report.search_bound << '\n';
        text << "status: ok\n";
        return text.str();
    });
}

int dtc_tcert(const dtc_code* code, unsigned long long budget, char** out) {
    return wrap(out, [&] {
        const codes::Code& c = require(code)->code;
        if (!std::holds_alternative<codes::TriorthogonalCode>(c))
            throw std::invalid_argument("the transversal-T certificate needs a triorthogonal code");
        analysis::TGateCertificate cert = analysis::t_gate_certificate(
            std::get<codes::TriorthogonalCode>(c),
            budget != 0 ? budget : (std::uint64_t{1} << 26));
        std::ostringstream text;
        text << "name: " << codes::code_name(c) << '\n';
        auto list = [&](const char* key, const std::vector<int>& values) {
            text << key << ':';
            for (int v : values) text << ' ' << v;
            text << '\n';
        };
        list("coset0_residues", cert.coset0_residues);
        list("coset1_residues", cert.coset1_residues);
        text << "diagonal: " << (cert.diagonal ? "yes" : "no") << '\n';
        if (cert.diagonal)
            text << "logical_phase_exponent: " << cert.logical_phase_exponent << '\n';
        text << "status: ok\n";
        return text.str();
    });
}

int dtc_decode(const char* code_name, char error_type, const char* syndrome, int full_set,
               char** out) {
    return wrap(out, [&] {
        if (code_name == nullptr) throw std::invalid_argument("code name is null");
        const std::string name(code_name);
        const char t = normalized_type(error_type);
        const BitVec bits = bits_from_string(syndrome, "syndrome");
        const bool doubled = (name == "tri49" || name == "tri95");
        if (full_set != 0 && !doubled)
            throw std::invalid_argument("full-set decoding applies to the doubled codes only");

        std::ostringstream text;
        text << "code: " << name << '\n';
        text << "error_type: " << t << '\n';
        if (doubled) {
            const std::size_t shared_bits = (name == "tri95") ? 25 : 13;
            const std::size_t full_bits = (name == "tri95") ? 69 : 35;
            const bool full = full_set != 0;
            text << "stabilizer_set: " << (full ? "full" : "shared") << '\n';
            const std::size_t want = (t == 'X' && full) ? full_bits : shared_bits;
            if (bits.len() != want)
                throw std::invalid_argument("expected " + std::to_string(want) +
                                            " syndrome bits, got " + std::to_string(bits.len()));
            dtc::decode::SyndromePair pair{
                BitVec(shared_bits),
                BitVec(full ? full_bits : shared_bits),
                full ? dtc::decode::StabilizerSet::full : dtc::decode::StabilizerSet::shared_only};
            if (t == 'Z')
                pair.x_syndrome = bits;
            else
                pair.z_syndrome = bits;
            dtc::decode::CorrectionPlan plan = (name == "tri95")
                                                   ? dtc::decode::decode_tri95(pair)
                                                   : dtc::decode::decode_tri49(pair);
            const BitVec& corr = (t == 'Z') ? plan.z_correction : plan.x_correction;
            const dtc::decode::Rule rule = (t == 'Z') ? plan.z_rule : plan.x_rule;
            const auto& components = (t == 'Z') ? plan.z_components : plan.x_components;
            text << "syndrome: " << bits.to_text() << '\n';
            text << "rule: " << dtc::decode::to_string(rule) << '\n';
            text << "correction: " << support_text(corr) << '\n';
            text << "correction_weight: " << corr.weight() << '\n';
            for (const auto& part : components)
                text << "component." << part.block << ": " << support_text(part.bits) << '\n';
        } else if (name == "golay23") {
            if (bits.len() != 11)
                throw std::invalid_argument("expected 11 syndrome bits, got " +
                                            std::to_string(bits.len()));
            dtc::decode::GolayResult res = dtc::decode::decode_golay(bits);
            text << "syndrome: " << bits.to_text() << '\n';
            text << "correction: " << support_text(res.correction) << '\n';
            text << "correction_weight: " << res.weight << '\n';
        } else if (name == "color17" || name == "rm15") {
            const std::size_t want = (name == "color17") ? 8 : 4;
            if (bits.len() != want)
                throw std::invalid_argument("expected " + std::to_string(want) +
                                            " syndrome bits, got " + std::to_string(bits.len()));
            dtc::decode::TableResult res = (name == "color17")
                                               ? dtc::decode::decode_color17(bits)
                                               : dtc::decode::decode_rm15_shared(bits);
            text << "syndrome: " << bits.to_text() << '\n';
            text << "correction: " << support_text(res.correction) << '\n';
            text << "correction_weight: " << res.correction.weight() << '\n';
            text << "wE: " << res.wE << '\n';
            text << "wEL: " << res.wEL << '\n';
        } else {
            throw std::invalid_argument("no decoder registered for '" + name + "'");
        }
        text << "status: ok\n";
        return text.str();
    });
}

int dtc_tables(const char* code_name, char** out) {
    return wrap(out, [&] {
        if (code_name == nullptr) throw std::invalid_argument("code name is null");
        const std::string name(code_name);
        if (name != "tri49" && name != "tri95")
            throw std::invalid_argument("decision tables exist for tri49 and tri95 only");
        const bool big = (name == "tri95");
        std::vector<dtc::decode::TableRow> rows =
            big ? dtc::decode::table_tri95() : dtc::decode::table_tri49();
        std::ostringstream text;
        text << "code: " << name << '\n';
        for (const auto& row : rows) {
            text << "row: outer=" << row.outer_weight << " inner=" << row.inner_weight
                 << " parity=" << (row.parity_violated ? "yes" : "no")
                 << " rule=" << dtc::decode::to_string(row.rule);
            if (!big) text << " wE=" << row.wE << " wEL=" << row.wEL;
            text << '\n';
        }
        text << "rows: " << rows.size() << '\n';
        text << "status: ok\n";
        return text.str();
    });
}

int dtc_simulate_scenario(const char* scenario, unsigned long long trials,
                          unsigned long long seed, char** out) {
    return wrap(out, [&] {
        if (scenario == nullptr) throw std::invalid_argument("scenario name is null");
        dtc::gadgets::ScenarioReport report =
            dtc::gadgets::run_scenario(scenario, trials, seed);
        std::ostringstream text;
        text << "scenario: " << report.scenario << '\n';
        text << "trials: " << report.trials << '\n';
        text << "seed: " << seed << '\n';
        text << "mismatches: " << report.mismatches << '\n';
        for (const std::string& note : report.notes) text << "note: " << note << '\n';
        text << "status: ok\n";
        return text.str();
    });
}

int dtc_simulate_script(const char* script, unsigned long long seed, char** out) {
    return wrap(out, [&] {
        if (script == nullptr) throw std::invalid_argument("script text is null");
        dtc::gadgets::ScriptResult result = dtc::gadgets::run_script(script, seed);
        std::ostringstream text;
        text << "seed: " << seed << '\n';
        for (const auto& [label, value] : result.records)
            text << "record: " << label << " = " << value << '\n';
        text << "records: " << result.records.size() << '\n';
        text << "status: ok\n";
        return text.str();
    });
}

int dtc_montecarlo(const char* code_name, char error_type, const char* mode, const char* model,
                   unsigned weight, double rate, unsigned long long trials,
                   unsigned long long seed, unsigned threads, char** out) {
    return wrap(out, [&] {
        if (code_name == nullptr) throw std::invalid_argument("code name is null");
        if (mode == nullptr || model == nullptr)
            throw std::invalid_argument("mode and model must be given");
        dtc::montecarlo::RunConfig config;
        config.code = code_name;
        config.type = normalized_type(error_type) == 'X' ? analysis::ErrorType::X
                                                         : analysis::ErrorType::Z;
        const std::string mode_name(mode);
        if (mode_name == "shared")
            config.mode = dtc::montecarlo::DecoderMode::shared;
        else if (mode_name == "full")
            config.mode = dtc::montecarlo::DecoderMode::full;
        else
            throw std::invalid_argument("mode must be 'shared' or 'full', got '" + mode_name + "'");
        const std::string model_name(model);
        if (model_name == "fixed_weight")
            config.model = dtc::montecarlo::ErrorModel::fixed_weight;
        else if (model_name == "iid")
            config.model = dtc::montecarlo::ErrorModel::iid;
        else
            throw std::invalid_argument("model must be 'fixed_weight' or 'iid', got '" +
                                        model_name + "'");
        config.weight = weight;
        config.rate = rate;
        config.trials = trials;
        config.seed = seed;
        config.threads = threads;
        dtc::montecarlo::Tally tally = dtc::montecarlo::monte_carlo(config);
        std::ostringstream text;
        text << "code: " << config.code << '\n';
        text << "error_type: " << analysis::to_char(config.type) << '\n';
        text << "mode: " << mode_name << '\n';
        text << "model: " << model_name << '\n';
        if (config.model == dtc::montecarlo::ErrorModel::fixed_weight)
            text << "weight: " << weight << '\n';
        else
            text << "rate: " << fixed6(rate) << '\n';
        text << "trials: " << tally.trials << '\n';
        text << "seed: " << seed << '\n';
        text << "threads: " << threads << '\n';
        text << "identity: " << tally.identity << '\n';
        text << "stabilizer: " << tally.stabilizer << '\n';
        text << "logical: " << tally.logical << '\n';
        text << "failure_rate: " << fixed6(tally.failure_rate) << '\n';
        text << "ci95_low: " << fixed6(tally.ci_low) << '\n';
        text << "ci95_high: " << fixed6(tally.ci_high) << '\n';
        text << "status: ok\n";
        return text.str();
    });
}

int dtc_montecarlo_exhaustive(const char* code_name, char error_type, unsigned max_weight,
                              const char* mode, char** out) {
    return wrap(out, [&] {
        if (code_name == nullptr) throw std::invalid_argument("code name is null");
        if (mode == nullptr) throw std::invalid_argument("mode must be given");
        const std::string mode_name(mode);
        dtc::montecarlo::DecoderMode decoder_mode;
        if (mode_name == "shared")
            decoder_mode = dtc::montecarlo::DecoderMode::shared;
        else if (mode_name == "full")
            decoder_mode = dtc::montecarlo::DecoderMode::full;
        else
            throw std::invalid_argument("mode must be 'shared' or 'full', got '" + mode_name + "'");
        const analysis::ErrorType type = normalized_type(error_type) == 'X'
                                             ? analysis::ErrorType::X
                                             : analysis::ErrorType::Z;
        dtc::montecarlo::ExhaustiveReport report =
            dtc::montecarlo::exhaustive_up_to(code_name, type, max_weight, decoder_mode);
        std::ostringstream text;
        text << "code: " << code_name << '\n';
        text << "error_type: " << analysis::to_char(type) << '\n';
        text << "mode: " << mode_name << '\n';
        text << "max_weight: " << max_weight << '\n';
        text << "cases: " << report.cases << '\n';
        text << "identity: " << report.identity << '\n';
        text << "stabilizer: " << report.stabilizer << '\n';
        text << "logical: " << report.logical << '\n';
        text << "first_failure: "
             << (report.first_failure ? support_text(*report.first_failure) : std::string("none"))
             << '\n';
        text << "status: ok\n";
        return text.str();
    });
}

int dtc_costs(const char* overrides, char** out) {
    return wrap(out, [&] {
        dtc::resources::CostModel model =
            (overrides == nullptr) ? dtc::resources::CostModel{}
                                   : dtc::resources::parse_cost_model(overrides);
        std::ostringstream text;
        for (const dtc::resources::CostEntry& entry : dtc::resources::cost_entries(model)) {
            text << entry.name << ": " << entry.value << " (" << entry.trace << ")";
            if (entry.reference.has_value()) {
                if (entry.matches_reference())
                    text << " [matches " << *entry.reference << "]";
                else
                    text << " [differs from " << *entry.reference << "]";
            }
            text << '\n';
        }
        auto concat_line = [&](const char* outer, const char* inner) {
            dtc::resources::CodeParams stacked = dtc::resources::concatenated(
                dtc::resources::params_of(outer), dtc::resources::params_of(inner));
            text << "concatenated: " << outer << " . " << inner << " = "
                 << dtc::resources::format_params(stacked)
                 << " corrects " << dtc::resources::corrected_weight(stacked) << '\n';
        };
        concat_line("golay23", "tri95");
        concat_line("steane7", "rm15");
        text << "status: ok\n";
        return text.str();
    });
}

}  // extern "C"
