#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "cleancomm/registers.hpp"

namespace cleancomm {

using cplx = std::complex<double>;

enum class GateKind { X, Z, H, CNOT, CZ, TOFFOLI, PHASE };

std::string to_string(GateKind k);
GateKind gate_from_string(const std::string& s);
int gate_arity(GateKind k);

/// A primitive gate on explicit register-bit coordinates. For CNOT and
/// TOFFOLI the controls come first and the target is the last coordinate;
/// CZ is symmetric in its two coordinates.
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<Coord> targets;
    double theta = 0.0;  // PHASE only

    static Gate X(Coord t) { return {GateKind::X, {std::move(t)}, 0.0}; }
    static Gate Z(Coord t) { return {GateKind::Z, {std::move(t)}, 0.0}; }
    static Gate H(Coord t) { return {GateKind::H, {std::move(t)}, 0.0}; }
    static Gate CNOT(Coord control, Coord target) {
        return {GateKind::CNOT, {std::move(control), std::move(target)}, 0.0};
    }
    static Gate CZ(Coord a, Coord b) { return {GateKind::CZ, {std::move(a), std::move(b)}, 0.0}; }
    static Gate TOFFOLI(Coord c1, Coord c2, Coord target) {
        return {GateKind::TOFFOLI, {std::move(c1), std::move(c2), std::move(target)}, 0.0};
    }
    static Gate PHASE(double theta, Coord t) { return {GateKind::PHASE, {std::move(t)}, theta}; }

    /// Inverse gate; all kinds are self-inverse except PHASE.
    Gate inverse() const;
};

/// Exact pure state over a register layout: a dense complex amplitude
/// vector of length 2^m indexed per the layout's slot order.
class PureState {
  public:
    PureState(std::shared_ptr<const RegisterLayout> layout, std::vector<cplx> amps);

    const RegisterLayout& layout() const { return *layout_; }
    std::shared_ptr<const RegisterLayout> layout_ptr() const { return layout_; }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    std::vector<cplx>& amplitudes() { return amps_; }
    std::size_t dimension() const { return amps_.size(); }

    double norm() const;
    cplx amplitude(std::uint64_t basis_index) const { return amps_.at(basis_index); }

  private:
    std::shared_ptr<const RegisterLayout> layout_;
    std::vector<cplx> amps_;
};

/// Basis state with per-register values given MSB-first within each
/// register; registers not mentioned start at zero.
PureState make_basis_state(std::shared_ptr<const RegisterLayout> layout,
                           const std::map<std::string, std::uint64_t>& values);

/// Index of the same basis state, for direct amplitude lookups.
std::uint64_t basis_index(const RegisterLayout& layout,
                          const std::map<std::string, std::uint64_t>& values);

PureState apply_gate(const PureState& state, const Gate& gate);

/// In-place kernel used by the protocol engine; `bitpos` values count from
/// the least significant bit of the amplitude index.
void apply_gate_inplace(std::vector<cplx>& amps, GateKind kind, const int* bitpos, int arity,
                        double theta = 0.0);

cplx inner_product(const PureState& a, const PureState& b);

/// |<a|b>|^2; requires identical layouts.
double fidelity(const PureState& a, const PureState& b);

}  // namespace cleancomm
