#pragma once

// Fault-tolerant conversion between the 23-qubit self-dual code and the
// 95-qubit doubled code, plus the teleportation gadgets built on top of it.
// Everything here drives a phase-tracked tableau, so random measurement
// outcomes are repaired with destabilizer correctors on the spot and every
// claimed invariant is checked, not assumed.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codes.hpp"
#include "tableau.hpp"

namespace dtc::gadgets {

// Canonical logical representative of a one-qubit-code block placed at
// `offset` inside an n_total-qubit register; Y is i * X * Z.
tableau::Pauli logical_pauli(const codes::CssCode& css, char basis, std::size_t offset,
                             std::size_t n_total);

// Prepare the block as a logical eigenstate: reset the window to all zeros,
// project every stabilizer to +1, then pin the logical sign.
void encode_eigenstate(tableau::Tableau& tab, const codes::CssCode& css, std::size_t offset,
                       char basis, int sign, std::mt19937_64& rng);

// +1/-1 when the block is a logical eigenstate of `basis`, nullopt otherwise.
std::optional<int> logical_expectation(const tableau::Tableau& tab, const codes::CssCode& css,
                                       std::size_t offset, char basis);

tableau::MeasureResult measure_logical(tableau::Tableau& tab, const codes::CssCode& css,
                                       std::size_t offset, char basis, std::mt19937_64& rng);

// Stabilizer-measurement conversion, growing the encoded qubit in the first
// 23 qubits of the window [offset, offset+95) into the doubled code.  The
// other 72 qubits are consumed as ancillas and must start disentangled.
// Deterministic stabilizer outcomes form syndromes that are decoded and
// corrected; random ones are sign-fixed without touching the logical frame.
void convert_up(tableau::Tableau& tab, std::size_t offset, std::mt19937_64& rng);

// Inverse direction: collapse the doubled block back onto its first 23
// qubits and measure the rest out transversally.
void convert_down(tableau::Tableau& tab, std::size_t offset, std::mt19937_64& rng);

// Teleportation conversions through a partial-block transversal CNOT.  The
// upward gadget consumes a doubled logical |+> at doubled_offset and leaves
// the source block in logical |0>; the downward gadget consumes a 23-qubit
// logical |0> at golay_offset and leaves the doubled block in logical |+>.
void cnot_convert_up(tableau::Tableau& tab, std::size_t golay_offset, std::size_t doubled_offset,
                     std::mt19937_64& rng);
void cnot_convert_down(tableau::Tableau& tab, std::size_t doubled_offset, std::size_t golay_offset,
                       std::mt19937_64& rng);

// Logical S on a 23-qubit block: convert up by teleportation, apply the
// transversal S-dagger (logical S on the doubled code), convert back down
// into the same block.  workspace_offset names 95 fresh qubits.
void s_gadget(tableau::Tableau& tab, std::size_t golay_offset, std::size_t workspace_offset,
              std::mt19937_64& rng);

// Line-oriented gadget scripts.  One operation per line, # starts a comment:
//   block <name> <code>            allocate a catalog-code block
//   encode <block> <X|Y|Z> <+|->   prepare a logical eigenstate
//   cnot <src> <dst>               transversal CNOT (pairs the first 23
//                                  qubits when a doubled block meets a
//                                  23-qubit block)
//   h|s|sdg <block>                transversal single-qubit gate
//   measure <block> <X|Y|Z> <label>
//   measure-stabs <block> <x|z> <label>
//   expect <block> <X|Y|Z> <label>
//   cpauli <label> <X|Y|Z> <block>   apply the logical Pauli when the
//                                    recorded bit is 1
//   cclifford <label> <s|sdg> <block>
//   discard <block>                transversal Z measurement
// Non-Clifford operations are rejected by name.
struct ScriptResult {
    std::vector<std::pair<std::string, std::string>> records;
};
ScriptResult run_script(std::string_view text, std::uint64_t seed);

// Canned end-to-end checks over all six logical Pauli eigenstates.  Trial t
// prepares eigenstate t mod 6 under an independent per-trial generator, runs
// the named gadget, and verifies the logical state and every stabilizer
// afterwards.  Scenarios: convert_up, convert_down, roundtrip, cnot_up,
// cnot_down, s_gadget.
struct ScenarioReport {
    std::string scenario;
    std::uint64_t trials = 0;
    std::uint64_t mismatches = 0;
    std::vector<std::string> notes;  // scenario-specific, e.g. the S-gate map
};
ScenarioReport run_scenario(const std::string& scenario, std::uint64_t trials,
                            std::uint64_t seed);

}  // namespace dtc::gadgets
