#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cleancomm/engine.hpp"
#include "cleancomm/script.hpp"

namespace cleancomm {

/// Clean inner-product protocol families built by this module, together
/// with their declared communication-cost formulas.
///
///   phase-ip        n+1 qubits, one travelling ancilla qubit
///   phase-ip-noanc  n+2 qubits (even n) / n+1 (odd n), no ancilla
///   clean-ip        n+2 qubits (even n) / n+3 (odd n), answer register
///   mixed-ip        2 qubits + (n+1) bits
///   classical-ip    kl+3k+l+1 bits for even l+1, kl+2k+l+2 for odd l+1
///   trivial-ip      n bits one way, unclean
///   naive-wrap      2n bits (doubled trivial-ip)
struct ProtocolFamily {
    std::string id;
    std::string description;
    bool classical = false;
    bool takes_block_size = false;
};

const std::vector<ProtocolFamily>& protocol_families();
bool is_protocol_id(const std::string& id);

/// Builds a family member; `k` applies to classical-ip only (default
/// floor(sqrt(n))).
ProtocolScript build_protocol(const std::string& id, int n, std::optional<int> k = std::nullopt);

/// Declared cost of a family member, as a CostReport. Matches cost(build)
/// exactly for every family.
CostReport declared_cost(const std::string& id, int n, std::optional<int> k = std::nullopt);

ProtocolScript build_phase_ip(int n, bool use_ancilla);
ProtocolScript build_clean_quantum_ip(int n);
ProtocolScript build_mixed_ip(int n);
ProtocolScript build_classical_ip(int n, std::optional<int> k = std::nullopt);
ProtocolScript build_trivial_unclean_ip(int n);

/// Clean wrapper around an arbitrary protocol: run it, copy the answer
/// locally at Bob, run it backwards. Exactly doubles the communication.
/// `answer` names the bit to copy; it defaults to ans.1 for answer-register
/// scripts and to no copy at all otherwise (the wrapper is oblivious).
ProtocolScript wrap_naive_clean(const ProtocolScript& unclean,
                                std::optional<Coord> answer = std::nullopt);

/// Runs a phase protocol on a uniform superposition over one party's input
/// with the other party's input fixed, applies the superdense-decoding
/// Hadamards, and reports the fidelity with |y>|y> (resp. |x>|x>).
struct SuperdenseResult {
    double fidelity = 0.0;
    bool pass = false;
};
SuperdenseResult superdense_extraction(int n, std::uint64_t fixed_input, bool alice_superposed,
                                       bool use_ancilla = true, double tolerance = 1e-10);

/// Block sizes of the classical protocol: k, l, r with n = k*l + r.
struct BlockShape {
    int k = 0;
    int l = 0;
    int r = 0;
    bool even_rounds = false;  // true when l+1 is even
};
BlockShape classical_block_shape(int n, std::optional<int> k = std::nullopt);

}  // namespace cleancomm
