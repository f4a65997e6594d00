#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cleancomm/state.hpp"

namespace cleancomm {

/// One party applies a gate to registers it currently owns.
struct LocalStep {
    Party party = Party::Alice;
    Gate gate;
};

/// One party hands whole registers to the other.
struct SendStep {
    Party from = Party::Alice;
    Party to = Party::Bob;
    std::vector<std::string> regs;
};

using Step = std::variant<LocalStep, SendStep>;

enum class AnswerMode { Register, Phase, None };

std::string to_string(AnswerMode m);
AnswerMode answer_mode_from_string(const std::string& s);

/// Per-direction communication totals of a script. |a| counts everything
/// received by Alice, |b| everything received by Bob; a round is one send.
struct CostReport {
    int qubits_to_bob = 0;
    int qubits_to_alice = 0;
    int bits_to_bob = 0;
    int bits_to_alice = 0;
    int rounds = 0;

    int to_alice() const { return qubits_to_alice + bits_to_alice; }
    int to_bob() const { return qubits_to_bob + bits_to_bob; }
    int total_qubits() const { return qubits_to_bob + qubits_to_alice; }
    int total_bits() const { return bits_to_bob + bits_to_alice; }
    int total() const { return total_qubits() + total_bits(); }

    friend bool operator==(const CostReport& x, const CostReport& y) {
        return x.qubits_to_bob == y.qubits_to_bob && x.qubits_to_alice == y.qubits_to_alice &&
               x.bits_to_bob == y.bits_to_bob && x.bits_to_alice == y.bits_to_alice &&
               x.rounds == y.rounds;
    }
};

/// Executable form of a two-party protocol: a register layout plus an
/// ordered list of local-gate and send steps.
///
/// Convention: a party's function input occupies the first n bits of the
/// registers it initially owns, in declaration order; the register named
/// "ans" is the answer register and everything else is ancilla space.
struct ProtocolScript {
    std::string name;
    int n = 0;
    AnswerMode answer_mode = AnswerMode::None;
    RegisterLayout layout;
    std::vector<Step> steps;

    /// Ordered slots that hold x (Alice) and y (Bob); x_1 comes first.
    std::vector<int> alice_input_slots() const;
    std::vector<int> bob_input_slots() const;
    std::vector<Coord> alice_input_coords() const;
    std::vector<Coord> bob_input_coords() const;

    bool is_classical() const;
};

/// Checks layout invariants, per-step locality and send ownership; throws
/// std::invalid_argument describing the first violation.
void validate(const ProtocolScript& script);

/// Owner of every register after all sends have been applied.
std::map<std::string, Party> final_owners(const ProtocolScript& script);

/// Static per-direction communication totals; independent of inputs.
CostReport cost(const ProtocolScript& script);

/// Steps reversed with each gate inverted and each send turned around.
std::vector<Step> inverted_steps(const std::vector<Step>& steps);

}  // namespace cleancomm
