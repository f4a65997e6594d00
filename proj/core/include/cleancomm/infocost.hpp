#pragma once

#include <string>
#include <vector>

#include "cleancomm/engine.hpp"
#include "cleancomm/script.hpp"

namespace cleancomm {

/// Purified input family for information-cost runs.
///
/// c-c: both inputs classical, purified by a 2n-qubit reference R holding
///      copies of x and y.
/// c-s: Alice classical, Bob in coherent superposition entangled with a
///      local copy B'; R holds x only.
///
/// The answer register (when the protocol has one) starts in |->, so a
/// clean protocol only kicks a (-1)^f phase onto it.
struct InputFamily {
    enum class Kind { CC, CS };
    Kind kind = Kind::CC;
    std::vector<double> mu_a;  // distribution over Alice's 2^n inputs
    std::vector<double> mu_b;

    static InputFamily uniform(Kind kind, int n);
    std::string label() const { return kind == Kind::CC ? "cc" : "cs"; }
};

struct RoundLeak {
    std::string dir;  // "A->B" or "B->A"
    int width = 0;    // qubits in the message
    double cmi = 0.0; // I(C : R | receiver's systems)
};

/// Per-round conditional mutual informations and their directional sums.
/// QIC = (QLA + QLB) / 2; flow_residual checks
/// I(B_out : R) = I(B_in : R) - QLB + QLA.
struct InfoCostReport {
    std::vector<RoundLeak> rounds;
    double qla = 0.0;
    double qlb = 0.0;
    double qic = 0.0;
    double i_bin_r = 0.0;
    double i_bout_r = 0.0;
    double flow_residual = 0.0;
    std::string family;
};

InfoCostReport qic_report(const ProtocolScript& script, const InputFamily& family);

double info_flow_residual(const ProtocolScript& script, const InputFamily& family);

/// QLA of the same protocol on the c-c and c-s families built from the
/// given marginals; first component is c-c.
std::pair<double, double> leak_comparison(const ProtocolScript& script,
                                          const std::vector<double>& mu_a,
                                          const std::vector<double>& mu_b);

/// Shannon-information side of the classical bounds: transcript variables
/// A and B are the bit strings received by each party over a deterministic
/// run, enumerated exhaustively over the support of the input distribution.
struct ClassicalInfoReport {
    double i_xy = 0.0;
    double i_x_yb = 0.0;
    double i_y_xa = 0.0;
    int a_bits = 0;  // |a|
    int b_bits = 0;  // |b|
    double residual_a = 0.0;  // |a| - (I(X:YB) - I(X:Y) - 1)
    double residual_b = 0.0;  // |b| - (I(Y:XA) - I(X:Y))
};

ClassicalInfoReport classical_info_bounds(const ProtocolScript& script,
                                          const std::vector<double>& joint_xy);

/// Uniform product distribution over all (x, y) pairs.
std::vector<double> uniform_joint(int n);

/// Exhaustive transcript table of a deterministic classical script; entry
/// (x,y) lists the values received by Alice and Bob, per send.
struct TranscriptTable {
    int n = 0;
    std::vector<std::string> to_alice;            // flattened, index x*2^n+y
    std::vector<std::string> to_bob;
    std::vector<std::vector<std::string>> bob_rounds;  // per-send values to Bob
};
TranscriptTable enumerate_transcripts(const ProtocolScript& script);

/// Shannon entropy (bits) of a discrete distribution given as outcome
/// probabilities grouped by key.
double shannon_entropy(const std::vector<double>& probs);

}  // namespace cleancomm
