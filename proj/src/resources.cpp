#include "resources.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "codes.hpp"

namespace dtc::resources {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    std::size_t last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::uint64_t parse_count(const std::string& token, const std::string& key) {
    std::uint64_t value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw std::invalid_argument("cost key '" + key + "' needs a nonnegative integer, got '" +
                                    token + "'");
    return value;
}

std::uint64_t* field_for(CostModel& model, const std::string& key) {
    if (key == "golay_n") return &model.golay_n;
    if (key == "doubled_n") return &model.doubled_n;
    if (key == "noisy_magic_states_per_output") return &model.noisy_magic_states_per_output;
    if (key == "distillation_logical_cnot_per_round")
        return &model.distillation_logical_cnot_per_round;
    if (key == "distillation_cnot_per_round") return &model.distillation_cnot_per_round;
    if (key == "distillation_round1_batches") return &model.distillation_round1_batches;
    if (key == "golay_noisy_ancilla_per_verified") return &model.golay_noisy_ancilla_per_verified;
    if (key == "doubled_noisy_ancilla_assumed") return &model.doubled_noisy_ancilla_assumed;
    if (key == "doubled_logical_cnot_rounds") return &model.doubled_logical_cnot_rounds;
    if (key == "latin_rect_zero_cost") return &model.latin_rect_zero_cost;
    if (key == "latin_rect_plus_cost") return &model.latin_rect_plus_cost;
    if (key == "optimized_zero") return &model.optimized_zero;
    if (key == "optimized_plus") return &model.optimized_plus;
    return nullptr;
}

std::string num(std::uint64_t v) { return std::to_string(v); }

}  // namespace

CostModel parse_cost_model(const std::string& text) {
    CostModel model;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trimmed(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("cost line is not 'key = value': '" + line + "'");
        std::string key = trimmed(line.substr(0, eq));
        std::string value = trimmed(line.substr(eq + 1));
        std::uint64_t* field = field_for(model, key);
        if (field == nullptr) throw std::invalid_argument("unknown cost key '" + key + "'");
        *field = parse_count(value, key);
    }
    return model;
}

std::vector<CostEntry> cost_entries(const CostModel& m) {
    std::vector<CostEntry> entries;
    auto add = [&](std::string name, std::uint64_t value, std::string trace,
                   std::optional<std::uint64_t> reference = std::nullopt) {
        entries.push_back({std::move(name), value, std::move(trace), reference});
    };

    // qubit counts for producing one verified magic state
    add("qubits.distillation_basic", m.golay_n * m.noisy_magic_states_per_output,
        num(m.golay_n) + " * " + num(m.noisy_magic_states_per_output));
    add("qubits.doubled_basic", m.doubled_n, num(m.doubled_n));
    add("qubits.doubled_steane_style", m.doubled_n * m.doubled_noisy_ancilla_assumed,
        num(m.doubled_n) + " * " + num(m.doubled_noisy_ancilla_assumed));
    // one data block plus an X-check and a Z-check batch per verified input
    const std::uint64_t blocks_per_input = 1 + 2 * m.golay_noisy_ancilla_per_verified;
    add("qubits.distillation_steane_style",
        m.noisy_magic_states_per_output * m.golay_n * blocks_per_input,
        num(m.noisy_magic_states_per_output) + " * " + num(m.golay_n) + " * (1 + " +
            num(m.golay_noisy_ancilla_per_verified) + " + " +
            num(m.golay_noisy_ancilla_per_verified) + ")",
        1863);

    // CNOT counts
    add("cnot.per_round", m.distillation_logical_cnot_per_round * m.golay_n,
        num(m.distillation_logical_cnot_per_round) + " * " + num(m.golay_n),
        m.distillation_cnot_per_round);
    add("cnot.distillation", m.distillation_cnot_per_round * (m.distillation_round1_batches + 1),
        num(m.distillation_cnot_per_round) + " * (" + num(m.distillation_round1_batches) +
            " + 1)");
    add("cnot.encode_zero", m.latin_rect_zero_cost, num(m.latin_rect_zero_cost));
    add("cnot.encode_plus", m.latin_rect_plus_cost, num(m.latin_rect_plus_cost));
    add("cnot.encode_zero_optimized", m.optimized_zero, num(m.optimized_zero));
    add("cnot.encode_plus_optimized", m.optimized_plus, num(m.optimized_plus));
    const std::uint64_t prep = m.doubled_noisy_ancilla_assumed * m.latin_rect_plus_cost;
    const std::uint64_t logical = m.doubled_n * m.doubled_logical_cnot_rounds;
    add("cnot.doubled_prep", prep,
        num(m.doubled_noisy_ancilla_assumed) + " * " + num(m.latin_rect_plus_cost));
    add("cnot.doubled_logical", logical,
        num(m.doubled_n) + " * " + num(m.doubled_logical_cnot_rounds));
    add("cnot.doubled_total", prep + logical, num(prep) + " + " + num(logical));
    return entries;
}

CodeParams concatenated(const CodeParams& outer, const CodeParams& inner) {
    if (outer.k != 1 || inner.k != 1)
        throw std::invalid_argument("concatenation is defined here for single-logical blocks");
    return {outer.n * inner.n, 1, outer.d * inner.d};
}

std::uint64_t corrected_weight(const CodeParams& params) {
    return params.d == 0 ? 0 : (params.d - 1) / 2;
}

std::string format_params(const CodeParams& params) {
    return "[[" + num(params.n) + "," + num(params.k) + "," + num(params.d) + "]]";
}

CodeParams params_of(const std::string& catalog_name) {
    codes::Code code = codes::catalog(catalog_name);
    CodeParams params;
    std::visit(
        [&](const auto& c) {
            params.n = c.n;
            if (!c.d.has_value())
                throw std::invalid_argument("code '" + catalog_name +
                                            "' has no certified distance");
            params.d = *c.d;
        },
        code);
    params.k = 1;
    return params;
}

}  // namespace dtc::resources
