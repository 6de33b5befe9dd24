#include "gadgets.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "decode.hpp"

namespace dtc::gadgets {

using codes::CssCode;
using gf2::BitVec;
using tableau::MeasureResult;
using tableau::Pauli;
using tableau::Tableau;

namespace {

const CssCode& golay_css() {
    static const CssCode css = codes::as_css(codes::catalog("golay23"));
    return css;
}

const CssCode& tri49_css() {
    static const CssCode css = codes::as_css(codes::catalog("tri49"));
    return css;
}

const CssCode& tri95_css() {
    static const CssCode css = codes::as_css(codes::catalog("tri95"));
    return css;
}

BitVec shifted(const BitVec& v, std::size_t offset, std::size_t n_total) {
    BitVec out(n_total);
    for (auto q : v.support()) out.flip(offset + q);
    return out;
}

BitVec range_ones(std::size_t n_total, std::size_t from, std::size_t count) {
    BitVec out(n_total);
    for (std::size_t i = 0; i < count; ++i) out.flip(from + i);
    return out;
}

// Repair a -1 outcome on a freshly measured stabilizer row.  The paired
// destabilizer anticommutes with that row and nothing else in the tableau,
// so applying it flips exactly the offending sign.  When a logical frame is
// being protected, the corrector is multiplied by logical representatives
// until it commutes with both, which leaves its action on the encoded qubit
// trivial while still flipping the target row.
void fix_random(Tableau& tab, const MeasureResult& m, const Pauli* protect_x,
                const Pauli* protect_z) {
    if (!m.random() || m.outcome == 0) return;
    Pauli c = tab.destabilizer(*m.pivot);
    if (protect_x && protect_z) {
        if (c.anticommutes_with(*protect_z)) c *= *protect_x;
        if (c.anticommutes_with(*protect_x)) c *= *protect_z;
    }
    tab.apply_pauli(c);
}

int deterministic_bit(Tableau& tab, const Pauli& p, std::mt19937_64& rng, const char* what) {
    auto m = tab.measure(p, rng);
    if (m.random()) throw std::runtime_error(std::string(what) + ": expected a deterministic outcome");
    return m.outcome;
}

}  // namespace

Pauli logical_pauli(const CssCode& css, char basis, std::size_t offset, std::size_t n_total) {
    if (offset + css.n > n_total) throw std::invalid_argument("logical_pauli: block out of range");
    switch (basis) {
        case 'X': return Pauli::x_on(shifted(css.logical_x, offset, n_total));
        case 'Z': return Pauli::z_on(shifted(css.logical_z, offset, n_total));
        case 'Y': {
            Pauli p = Pauli::x_on(shifted(css.logical_x, offset, n_total)) *
                      Pauli::z_on(shifted(css.logical_z, offset, n_total));
            p.phase = (p.phase + 1u) & 3u;
            return p;
        }
        default: throw std::invalid_argument("logical_pauli: basis must be X, Y or Z");
    }
}

void encode_eigenstate(Tableau& tab, const CssCode& css, std::size_t offset, char basis, int sign,
                       std::mt19937_64& rng) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("encode_eigenstate: sign must be +1 or -1");
    if (offset + css.n > tab.n()) throw std::invalid_argument("encode_eigenstate: block out of range");

    // reset the window to all zeros so re-encoding a used block is safe
    for (std::size_t q = 0; q < css.n; ++q) {
        auto m = tab.measure(Pauli::single(tab.n(), offset + q, 'Z'), rng);
        if (m.outcome) tab.x(offset + q);
    }

    for (std::size_t r = 0; r < css.x_stabs.nrows(); ++r) {
        auto m = tab.measure(Pauli::x_on(shifted(css.x_stabs.row(r), offset, tab.n())), rng);
        if (m.random())
            fix_random(tab, m, nullptr, nullptr);
        else if (m.outcome)
            throw std::logic_error("encode_eigenstate: deterministic -1 on a reset block");
    }
    for (std::size_t r = 0; r < css.z_stabs.nrows(); ++r) {
        auto m = tab.measure(Pauli::z_on(shifted(css.z_stabs.row(r), offset, tab.n())), rng);
        if (m.random())
            fix_random(tab, m, nullptr, nullptr);
        else if (m.outcome)
            throw std::logic_error("encode_eigenstate: deterministic -1 on a reset block");
    }

    Pauli logical = logical_pauli(css, basis, offset, tab.n());
    auto m = tab.measure(logical, rng);
    int want = sign == 1 ? 0 : 1;
    if (m.outcome != want) {
        if (m.random()) {
            tab.apply_pauli(tab.destabilizer(*m.pivot));
        } else {
            // the logical is already pinned (Z basis after a reset); flip it
            // with the anticommuting partner, which commutes with all stabs
            char partner = basis == 'Z' ? 'X' : 'Z';
            tab.apply_pauli(logical_pauli(css, partner, offset, tab.n()));
        }
    }
}

std::optional<int> logical_expectation(const Tableau& tab, const CssCode& css, std::size_t offset,
                                       char basis) {
    return tab.expectation(logical_pauli(css, basis, offset, tab.n()));
}

MeasureResult measure_logical(Tableau& tab, const CssCode& css, std::size_t offset, char basis,
                              std::mt19937_64& rng) {
    return tab.measure(logical_pauli(css, basis, offset, tab.n()), rng);
}

void convert_up(Tableau& tab, std::size_t offset, std::mt19937_64& rng) {
    const CssCode& d95 = tri95_css();
    if (offset + 95 > tab.n()) throw std::invalid_argument("convert_up: window out of range");

    // entangle the two ancilla blocks into a logical Bell pair
    encode_eigenstate(tab, golay_css(), offset + 23, 'X', 1, rng);
    encode_eigenstate(tab, tri49_css(), offset + 46, 'X', 1, rng);
    auto pair = tab.measure(Pauli::z_on(range_ones(tab.n(), offset + 23, 72)), rng);
    if (!pair.random()) throw std::runtime_error("convert_up: ancilla blocks are entangled already");
    if (pair.outcome) tab.apply_pauli(Pauli::x_on(range_ones(tab.n(), offset + 46, 49)));

    // every row of the doubled stabilizer generator is a product of block
    // stabilizers and pair stabilizers, so both the X and the Z copy have
    // deterministic outcomes; the bits are the shared syndromes
    const std::size_t shared = d95.x_stabs.nrows();
    BitVec x_syn(shared), z_syn(shared);
    for (std::size_t r = 0; r < shared; ++r) {
        Pauli p = Pauli::x_on(shifted(d95.x_stabs.row(r), offset, tab.n()));
        if (deterministic_bit(tab, p, rng, "convert_up")) x_syn.flip(r);
    }
    for (std::size_t r = 0; r < shared; ++r) {
        Pauli p = Pauli::z_on(shifted(d95.x_stabs.row(r), offset, tab.n()));
        if (deterministic_bit(tab, p, rng, "convert_up")) z_syn.flip(r);
    }
    if (!x_syn.is_zero() || !z_syn.is_zero()) {
        decode::SyndromePair sp;
        sp.x_syndrome = x_syn;
        sp.z_syndrome = z_syn;
        auto plan = decode::decode_tri95(sp);
        if (!plan.z_correction.is_zero())
            tab.apply_pauli(Pauli::z_on(shifted(plan.z_correction, offset, tab.n())));
        if (!plan.x_correction.is_zero())
            tab.apply_pauli(Pauli::x_on(shifted(plan.x_correction, offset, tab.n())));
    }

    // the complement rows complete the Z stabilizer group; outcomes that are
    // random get sign-fixed without touching the logical frame, deterministic
    // ones must already sit at +1
    Pauli px = logical_pauli(d95, 'X', offset, tab.n());
    Pauli pz = logical_pauli(d95, 'Z', offset, tab.n());
    for (std::size_t r = shared; r < d95.z_stabs.nrows(); ++r) {
        auto m = tab.measure(Pauli::z_on(shifted(d95.z_stabs.row(r), offset, tab.n())), rng);
        if (m.random())
            fix_random(tab, m, &px, &pz);
        else if (m.outcome)
            throw std::runtime_error("convert_up: residual error outside the shared syndromes");
    }
}

void convert_down(Tableau& tab, std::size_t offset, std::mt19937_64& rng) {
    const CssCode& d95 = tri95_css();
    const CssCode& g = golay_css();
    if (offset + 95 > tab.n()) throw std::invalid_argument("convert_down: window out of range");

    // shared X syndrome of the doubled block, decoded while the full group
    // is still intact (this is what catches Z errors)
    const std::size_t shared = d95.x_stabs.nrows();
    BitVec x_syn(shared);
    for (std::size_t r = 0; r < shared; ++r) {
        Pauli p = Pauli::x_on(shifted(d95.x_stabs.row(r), offset, tab.n()));
        if (deterministic_bit(tab, p, rng, "convert_down")) x_syn.flip(r);
    }
    if (!x_syn.is_zero()) {
        decode::SyndromePair sp;
        sp.x_syndrome = x_syn;
        sp.z_syndrome = BitVec(shared);
        auto plan = decode::decode_tri95(sp);
        if (!plan.z_correction.is_zero())
            tab.apply_pauli(Pauli::z_on(shifted(plan.z_correction, offset, tab.n())));
    }

    // X errors on the surviving block are caught by its own Z stabilizers,
    // which are doubled-code stabilizers too, so their outcomes stay
    // deterministic
    BitVec golay_syn(g.z_stabs.nrows());
    for (std::size_t r = 0; r < g.z_stabs.nrows(); ++r) {
        Pauli p = Pauli::z_on(shifted(g.z_stabs.row(r), offset, tab.n()));
        if (deterministic_bit(tab, p, rng, "convert_down")) golay_syn.flip(r);
    }
    if (!golay_syn.is_zero()) {
        auto res = decode::decode_golay(golay_syn);
        tab.apply_pauli(Pauli::x_on(shifted(res.correction, offset, tab.n())));
    }

    // the X stabilizers of the surviving block are not doubled-code
    // stabilizers; measuring them re-pins the block, and the sign fixes must
    // not act on the encoded qubit
    Pauli px = logical_pauli(g, 'X', offset, tab.n());
    Pauli pz = logical_pauli(g, 'Z', offset, tab.n());
    for (std::size_t r = 0; r < g.x_stabs.nrows(); ++r) {
        auto m = tab.measure(Pauli::x_on(shifted(g.x_stabs.row(r), offset, tab.n())), rng);
        if (m.random())
            fix_random(tab, m, &px, &pz);
        else if (m.outcome)
            throw std::runtime_error("convert_down: residual error outside the shared syndromes");
    }

    // measure the ancilla blocks out transversally; their outcomes carry no
    // logical information
    for (std::size_t q = 23; q < 95; ++q)
        tab.measure(Pauli::single(tab.n(), offset + q, 'Z'), rng);
}

void cnot_convert_down(Tableau& tab, std::size_t doubled_offset, std::size_t golay_offset,
                       std::mt19937_64& rng) {
    const CssCode& d95 = tri95_css();
    const CssCode& g = golay_css();
    if (doubled_offset + 95 > tab.n() || golay_offset + 23 > tab.n())
        throw std::invalid_argument("cnot_convert_down: block out of range");

    // block-transversal CNOT from the first third of the doubled block into
    // the ancilla; this is a logical CNOT with the doubled qubit as control
    for (std::size_t i = 0; i < 23; ++i) tab.cx(doubled_offset + i, golay_offset + i);

    auto m = measure_logical(tab, d95, doubled_offset, 'X', rng);
    if (m.outcome) {
        tab.apply_pauli(logical_pauli(g, 'Z', golay_offset, tab.n()));
        tab.apply_pauli(logical_pauli(d95, 'Z', doubled_offset, tab.n()));
    }
}

void cnot_convert_up(Tableau& tab, std::size_t golay_offset, std::size_t doubled_offset,
                     std::mt19937_64& rng) {
    const CssCode& d95 = tri95_css();
    const CssCode& g = golay_css();
    if (doubled_offset + 95 > tab.n() || golay_offset + 23 > tab.n())
        throw std::invalid_argument("cnot_convert_up: block out of range");

    for (std::size_t i = 0; i < 23; ++i) tab.cx(doubled_offset + i, golay_offset + i);

    auto m = measure_logical(tab, g, golay_offset, 'Z', rng);
    if (m.outcome) {
        tab.apply_pauli(logical_pauli(d95, 'X', doubled_offset, tab.n()));
        tab.apply_pauli(logical_pauli(g, 'X', golay_offset, tab.n()));
    }
}

void s_gadget(Tableau& tab, std::size_t golay_offset, std::size_t workspace_offset,
              std::mt19937_64& rng) {
    if (workspace_offset + 95 > tab.n())
        throw std::invalid_argument("s_gadget: workspace out of range");

    encode_eigenstate(tab, tri95_css(), workspace_offset, 'X', 1, rng);
    cnot_convert_up(tab, golay_offset, workspace_offset, rng);

    // transversal S-dagger is the logical S of the doubled code: the X
    // stabilizer rows have doubly even weight, so they map onto themselves
    // times Z stabilizers with no sign, while the odd-weight logical X picks
    // up exactly the phase that turns it into logical Y
    for (std::size_t q = 0; q < 95; ++q) tab.sdg(workspace_offset + q);

    cnot_convert_down(tab, workspace_offset, golay_offset, rng);
}

namespace {

struct ScriptBlock {
    CssCode css;
    std::size_t offset = 0;
};

struct ScriptState {
    std::map<std::string, ScriptBlock, std::less<>> blocks;
    std::map<std::string, std::string, std::less<>> values;
    ScriptResult result;
};

[[noreturn]] void script_fail(std::size_t lineno, const std::string& msg) {
    throw std::invalid_argument("script line " + std::to_string(lineno) + ": " + msg);
}

char parse_basis(std::size_t lineno, const std::string& tok) {
    if (tok == "X" || tok == "Y" || tok == "Z") return tok[0];
    script_fail(lineno, "basis must be X, Y or Z, got '" + tok + "'");
}

ScriptBlock& named_block(ScriptState& st, std::size_t lineno, const std::string& name) {
    auto it = st.blocks.find(name);
    if (it == st.blocks.end()) script_fail(lineno, "unknown block '" + name + "'");
    return it->second;
}

void record(ScriptState& st, std::size_t lineno, const std::string& label, std::string value) {
    if (label.empty() || st.values.count(label)) script_fail(lineno, "duplicate or empty label '" + label + "'");
    st.values[label] = value;
    st.result.records.emplace_back(label, std::move(value));
}

int condition_bit(ScriptState& st, std::size_t lineno, const std::string& label) {
    auto it = st.values.find(label);
    if (it == st.values.end()) script_fail(lineno, "unknown label '" + label + "'");
    if (it->second == "0") return 0;
    if (it->second == "1") return 1;
    script_fail(lineno, "label '" + label + "' does not hold a measurement bit");
}

std::vector<std::vector<std::string>> tokenize(std::string_view text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        lines.push_back(std::move(toks));
    }
    return lines;
}

}  // namespace

ScriptResult run_script(std::string_view text, std::uint64_t seed) {
    auto lines = tokenize(text);

    // first pass: block declarations fix the register layout
    ScriptState st;
    std::size_t total = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& t = lines[i];
        if (t.empty() || t[0] != "block") continue;
        if (t.size() != 3) script_fail(i + 1, "usage: block <name> <code>");
        if (st.blocks.count(t[1])) script_fail(i + 1, "duplicate block '" + t[1] + "'");
        CssCode css;
        if (t[2] == "trivial1") {
            css = codes::as_css(codes::trivial1());
        } else {
            try {
                css = codes::as_css(codes::catalog(t[2]));
            } catch (const std::exception& e) {
                script_fail(i + 1, e.what());
            }
        }
        std::size_t n = css.n;
        st.blocks.emplace(t[1], ScriptBlock{std::move(css), total});
        total += n;
    }
    if (total == 0) throw std::invalid_argument("script declares no blocks");

    Tableau tab(total);
    std::mt19937_64 rng(seed);

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& t = lines[i];
        if (t.empty()) continue;
        const std::string& op = t[0];
        std::size_t lineno = i + 1;

        if (op == "block") continue;

        if (op == "t" || op == "tdg") {
            script_fail(lineno, "non-Clifford operation '" + op + "' cannot run on a tableau");
        }

        if (op == "encode") {
            if (t.size() != 4 || (t[3] != "+" && t[3] != "-"))
                script_fail(lineno, "usage: encode <block> <X|Y|Z> <+|->");
            auto& b = named_block(st, lineno, t[1]);
            encode_eigenstate(tab, b.css, b.offset, parse_basis(lineno, t[2]),
                              t[3] == "+" ? 1 : -1, rng);
        } else if (op == "cnot") {
            if (t.size() != 3) script_fail(lineno, "usage: cnot <src> <dst>");
            auto& src = named_block(st, lineno, t[1]);
            auto& dst = named_block(st, lineno, t[2]);
            std::size_t n = 0;
            if (src.css.n == dst.css.n) {
                n = src.css.n;
            } else if ((src.css.n == 95 && dst.css.n == 23) ||
                       (src.css.n == 23 && dst.css.n == 95)) {
                n = 23;  // the doubled code pairs through its first block
            } else {
                script_fail(lineno, "blocks with incompatible sizes");
            }
            for (std::size_t q = 0; q < n; ++q) tab.cx(src.offset + q, dst.offset + q);
        } else if (op == "h" || op == "s" || op == "sdg") {
            if (t.size() != 2) script_fail(lineno, "usage: " + op + " <block>");
            auto& b = named_block(st, lineno, t[1]);
            for (std::size_t q = 0; q < b.css.n; ++q) {
                if (op == "h")
                    tab.h(b.offset + q);
                else if (op == "s")
                    tab.s(b.offset + q);
                else
                    tab.sdg(b.offset + q);
            }
        } else if (op == "measure") {
            if (t.size() != 4) script_fail(lineno, "usage: measure <block> <X|Y|Z> <label>");
            auto& b = named_block(st, lineno, t[1]);
            auto m = measure_logical(tab, b.css, b.offset, parse_basis(lineno, t[2]), rng);
            record(st, lineno, t[3], m.outcome ? "1" : "0");
        } else if (op == "measure-stabs") {
            if (t.size() != 4 || (t[2] != "x" && t[2] != "z"))
                script_fail(lineno, "usage: measure-stabs <block> <x|z> <label>");
            auto& b = named_block(st, lineno, t[1]);
            const gf2::BitMatrix& stabs = t[2] == "x" ? b.css.x_stabs : b.css.z_stabs;
            std::string bits;
            for (std::size_t r = 0; r < stabs.nrows(); ++r) {
                Pauli p = t[2] == "x" ? Pauli::x_on(shifted(stabs.row(r), b.offset, total))
                                      : Pauli::z_on(shifted(stabs.row(r), b.offset, total));
                bits += tab.measure(p, rng).outcome ? '1' : '0';
            }
            record(st, lineno, t[3], bits);
        } else if (op == "expect") {
            if (t.size() != 4) script_fail(lineno, "usage: expect <block> <X|Y|Z> <label>");
            auto& b = named_block(st, lineno, t[1]);
            auto e = logical_expectation(tab, b.css, b.offset, parse_basis(lineno, t[2]));
            record(st, lineno, t[3], e ? (*e > 0 ? "+1" : "-1") : "?");
        } else if (op == "cpauli") {
            if (t.size() != 4) script_fail(lineno, "usage: cpauli <label> <X|Y|Z> <block>");
            auto& b = named_block(st, lineno, t[3]);
            if (condition_bit(st, lineno, t[1]))
                tab.apply_pauli(logical_pauli(b.css, parse_basis(lineno, t[2]), b.offset, total));
        } else if (op == "cclifford") {
            if (t.size() != 4 || (t[2] != "s" && t[2] != "sdg"))
                script_fail(lineno, "usage: cclifford <label> <s|sdg> <block>");
            auto& b = named_block(st, lineno, t[3]);
            if (condition_bit(st, lineno, t[1])) {
                for (std::size_t q = 0; q < b.css.n; ++q) {
                    if (t[2] == "s")
                        tab.s(b.offset + q);
                    else
                        tab.sdg(b.offset + q);
                }
            }
        } else if (op == "discard") {
            if (t.size() != 2) script_fail(lineno, "usage: discard <block>");
            auto& b = named_block(st, lineno, t[1]);
            for (std::size_t q = 0; q < b.css.n; ++q)
                tab.measure(Pauli::single(total, b.offset + q, 'Z'), rng);
        } else {
            script_fail(lineno, "unknown operation '" + op + "'");
        }
    }
    return st.result;
}

namespace {

bool stabilizers_hold(const Tableau& tab, const CssCode& css, std::size_t offset) {
    const std::size_t total = tab.n();
    for (std::size_t r = 0; r < css.x_stabs.nrows(); ++r) {
        auto e = tab.expectation(Pauli::x_on(shifted(css.x_stabs.row(r), offset, total)));
        if (!e || *e != 1) return false;
    }
    for (std::size_t r = 0; r < css.z_stabs.nrows(); ++r) {
        auto e = tab.expectation(Pauli::z_on(shifted(css.z_stabs.row(r), offset, total)));
        if (!e || *e != 1) return false;
    }
    return true;
}

bool logical_is(const Tableau& tab, const CssCode& css, std::size_t offset, char basis, int sign) {
    auto e = logical_expectation(tab, css, offset, basis);
    return e.has_value() && *e == sign;
}

// Image of an eigenstate under the logical S gate.
std::pair<char, int> s_image(char basis, int sign) {
    if (basis == 'X') return {'Y', sign};
    if (basis == 'Y') return {'X', -sign};
    return {'Z', sign};
}

}  // namespace

ScenarioReport run_scenario(const std::string& scenario, std::uint64_t trials,
                            std::uint64_t seed) {
    static constexpr std::pair<char, int> kStates[6] = {
        {'X', +1}, {'X', -1}, {'Y', +1}, {'Y', -1}, {'Z', +1}, {'Z', -1}};
    const CssCode& golay = golay_css();
    const CssCode& doubled = tri95_css();

    static const char* kNames[] = {"convert_up", "convert_down", "roundtrip",
                                   "cnot_up",    "cnot_down",    "s_gadget"};
    if (std::find(std::begin(kNames), std::end(kNames), scenario) == std::end(kNames))
        throw std::invalid_argument("unknown scenario '" + scenario + "'");

    ScenarioReport report;
    report.scenario = scenario;
    report.trials = trials;
    std::mt19937_64 rng(seed);

    if (scenario == "s_gadget") {
        for (auto [basis, sign] : kStates) {
            auto [ib, is] = s_image(basis, sign);
            std::string note{basis};
            note += (sign > 0 ? "+" : "-");
            note += " > ";
            note += ib;
            note += (is > 0 ? "+" : "-");
            report.notes.push_back(note);
        }
    }

    for (std::uint64_t t = 0; t < trials; ++t) {
        auto [basis, sign] = kStates[t % 6];
        bool ok = true;
        if (scenario == "convert_up") {
            Tableau tab(95);
            encode_eigenstate(tab, golay, 0, basis, sign, rng);
            convert_up(tab, 0, rng);
            ok = logical_is(tab, doubled, 0, basis, sign) && stabilizers_hold(tab, doubled, 0);
        } else if (scenario == "convert_down") {
            Tableau tab(95);
            encode_eigenstate(tab, doubled, 0, basis, sign, rng);
            convert_down(tab, 0, rng);
            ok = logical_is(tab, golay, 0, basis, sign) && stabilizers_hold(tab, golay, 0);
        } else if (scenario == "roundtrip") {
            Tableau tab(95);
            encode_eigenstate(tab, golay, 0, basis, sign, rng);
            convert_up(tab, 0, rng);
            convert_down(tab, 0, rng);
            ok = logical_is(tab, golay, 0, basis, sign) && stabilizers_hold(tab, golay, 0);
        } else if (scenario == "cnot_up") {
            Tableau tab(118);
            encode_eigenstate(tab, golay, 95, basis, sign, rng);
            encode_eigenstate(tab, doubled, 0, 'X', +1, rng);
            cnot_convert_up(tab, 95, 0, rng);
            ok = logical_is(tab, doubled, 0, basis, sign) && stabilizers_hold(tab, doubled, 0) &&
                 logical_is(tab, golay, 95, 'Z', +1) && stabilizers_hold(tab, golay, 95);
        } else if (scenario == "cnot_down") {
            Tableau tab(118);
            encode_eigenstate(tab, doubled, 0, basis, sign, rng);
            encode_eigenstate(tab, golay, 95, 'Z', +1, rng);
            cnot_convert_down(tab, 0, 95, rng);
            ok = logical_is(tab, golay, 95, basis, sign) && stabilizers_hold(tab, golay, 95) &&
                 logical_is(tab, doubled, 0, 'X', +1) && stabilizers_hold(tab, doubled, 0);
        } else if (scenario == "s_gadget") {
            Tableau tab(118);
            encode_eigenstate(tab, golay, 0, basis, sign, rng);
            s_gadget(tab, 0, 23, rng);
            auto [ib, is] = s_image(basis, sign);
            ok = logical_is(tab, golay, 0, ib, is) && stabilizers_hold(tab, golay, 0) &&
                 logical_is(tab, doubled, 23, 'X', +1) && stabilizers_hold(tab, doubled, 23);
        } else {
            throw std::invalid_argument("unknown scenario '" + scenario + "'");
        }
        if (!ok) ++report.mismatches;
    }
    return report;
}

}  // namespace dtc::gadgets
