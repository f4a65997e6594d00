#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cleancomm/script.hpp"
#include "cleancomm/truth_table.hpp"

namespace cleancomm {

/// One executed transfer. `values` is filled by the classical backend only
/// and lists the moved bits register by register, most significant first.
struct TranscriptEntry {
    int step_index = 0;
    Party from = Party::Alice;
    Party to = Party::Bob;
    std::vector<std::string> regs;
    int width = 0;
    std::vector<std::uint8_t> values;
};

struct Transcript {
    std::vector<TranscriptEntry> sends;
};

/// Hard cap on dense state size; override with CLEANCOMM_MAX_AMPLITUDES.
std::size_t max_amplitudes();

/// Pre-resolved quantum execution of one script: ownership is checked once,
/// gate coordinates are baked to bit positions, and the same plan can then
/// run any number of inputs.
class QuantumPlan {
  public:
    explicit QuantumPlan(const ProtocolScript& script);

    const ProtocolScript& script() const { return script_; }
    std::shared_ptr<const RegisterLayout> layout() const { return layout_; }
    std::size_t dimension() const { return layout_->dimension(); }

    /// Runs all steps in place. `on_send` is invoked with the send's index
    /// (0-based over sends) and the state just before the transfer.
    void run(std::vector<cplx>& amps,
             const std::function<void(int, const std::vector<cplx>&)>& on_send = {}) const;

    const std::vector<TranscriptEntry>& send_schedule() const { return sends_; }
    /// Registers owned by `party` immediately before send `send_index`.
    std::vector<std::string> owned_before_send(int send_index, Party party) const;

  private:
    struct Op {
        GateKind kind;
        int pos[3];
        double theta;
        int send = -1;  // >= 0 marks a send marker instead of a gate
    };
    ProtocolScript script_;
    std::shared_ptr<const RegisterLayout> layout_;
    std::vector<Op> ops_;
    std::vector<TranscriptEntry> sends_;
    std::vector<std::map<std::string, Party>> owners_before_send_;
};

struct QuantumRun {
    PureState state;
    CostReport cost;
    Transcript transcript;
    std::map<std::string, Party> owners;
};

QuantumRun run_quantum(const ProtocolScript& script, const PureState& initial);
QuantumRun run_quantum_basis(const ProtocolScript& script, std::uint64_t x, std::uint64_t y,
                             std::uint8_t z = 0);

/// Classical counterpart; only X / CNOT / TOFFOLI on bit registers.
class ClassicalPlan {
  public:
    explicit ClassicalPlan(const ProtocolScript& script);

    const ProtocolScript& script() const { return script_; }
    int width() const { return script_.layout.total_width(); }

    /// Runs in place over one assignment (one byte per slot, MSB first).
    /// When `transcript` is given, transferred values are appended to it.
    void run(std::vector<std::uint8_t>& bits, Transcript* transcript = nullptr) const;

  private:
    struct Op {
        GateKind kind;
        int slot[3];
        int send = -1;
    };
    ProtocolScript script_;
    std::vector<Op> ops_;
    std::vector<TranscriptEntry> sends_;
    std::vector<std::vector<int>> send_slots_;
};

struct ClassicalRun {
    std::vector<std::uint8_t> bits;
    CostReport cost;
    Transcript transcript;
    std::map<std::string, Party> owners;
};

ClassicalRun run_classical(const ProtocolScript& script, const std::vector<std::uint8_t>& bits);
ClassicalRun run_classical_basis(const ProtocolScript& script, std::uint64_t x, std::uint64_t y,
                                 std::uint8_t z = 0);

struct VerifyOptions {
    int superposition_samples = 32;
    double tolerance = 1e-10;
    unsigned seed = 0;
    /// When set, an ancilla that ends up with the other party fails the
    /// check instead of merely being reported.
    bool strict_ancilla_ownership = false;
};

/// Outcome of checking a script against the clean-protocol contract: for
/// every basis input the final state must equal the initial one except for
/// the answer (answer-register mode) or a (-1)^f(x,y) amplitude (phase
/// mode), and non-ancilla registers must return to their original owner.
struct CleanlinessReport {
    bool pass = false;
    std::string mode = "unclean";
    double worst_deviation = 0.0;
    std::string worst_input;
    bool answers_correct = true;
    double superposition_max_deviation = 0.0;
    std::map<std::string, Party> ancilla_final_owners;
    std::vector<std::string> ownership_violations;
    std::string error;
    std::uint64_t checked_inputs = 0;
};

CleanlinessReport verify_clean(const ProtocolScript& script, const TruthTable& f,
                               const VerifyOptions& options = {});

}  // namespace cleancomm
