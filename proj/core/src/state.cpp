#include "cleancomm/state.hpp"

#include <cmath>

namespace cleancomm {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;
}

std::string to_string(GateKind k) {
    switch (k) {
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
        case GateKind::TOFFOLI: return "TOFFOLI";
        case GateKind::PHASE: return "PHASE";
    }
    return "?";
}

GateKind gate_from_string(const std::string& s) {
    if (s == "X") return GateKind::X;
    if (s == "Z") return GateKind::Z;
    if (s == "H") return GateKind::H;
    if (s == "CNOT") return GateKind::CNOT;
    if (s == "CZ") return GateKind::CZ;
    if (s == "TOFFOLI") return GateKind::TOFFOLI;
    if (s == "PHASE") return GateKind::PHASE;
    throw std::invalid_argument("unknown gate: " + s);
}

int gate_arity(GateKind k) {
    switch (k) {
        case GateKind::X:
        case GateKind::Z:
        case GateKind::H:
        case GateKind::PHASE: return 1;
        case GateKind::CNOT:
        case GateKind::CZ: return 2;
        case GateKind::TOFFOLI: return 3;
    }
    return 0;
}

Gate Gate::inverse() const {
    Gate g = *this;
    if (g.kind == GateKind::PHASE) g.theta = -g.theta;
    return g;
}

PureState::PureState(std::shared_ptr<const RegisterLayout> layout, std::vector<cplx> amps)
    : layout_(std::move(layout)), amps_(std::move(amps)) {
    if (!layout_) throw std::invalid_argument("PureState requires a layout");
    if (amps_.size() != layout_->dimension())
        throw std::invalid_argument("amplitude vector length " + std::to_string(amps_.size()) +
                                    " does not match layout dimension " +
                                    std::to_string(layout_->dimension()));
}

double PureState::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

std::uint64_t basis_index(const RegisterLayout& layout,
                          const std::map<std::string, std::uint64_t>& values) {
    std::uint64_t idx = 0;
    for (const auto& [name, value] : values) {
        const auto& r = layout.reg(name);
        if (r.width < 64 && (value >> r.width) != 0)
            throw std::invalid_argument("value for register " + name + " exceeds its width");
        int off = layout.slot_offset(name);
        // Bit 1 of the register (MSB) lands at slot `off`.
        idx |= value << (layout.total_width() - off - r.width);
    }
    return idx;
}

PureState make_basis_state(std::shared_ptr<const RegisterLayout> layout,
                           const std::map<std::string, std::uint64_t>& values) {
    std::vector<cplx> amps(layout->dimension(), cplx{0.0, 0.0});
    amps[basis_index(*layout, values)] = cplx{1.0, 0.0};
    return PureState(std::move(layout), std::move(amps));
}

void apply_gate_inplace(std::vector<cplx>& amps, GateKind kind, const int* bitpos, int arity,
                        double theta) {
    const std::uint64_t dim = amps.size();
    switch (kind) {
        case GateKind::X: {
            const std::uint64_t t = std::uint64_t{1} << bitpos[0];
            for (std::uint64_t i = 0; i < dim; ++i)
                if (!(i & t)) std::swap(amps[i], amps[i | t]);
            return;
        }
        case GateKind::Z: {
            const std::uint64_t t = std::uint64_t{1} << bitpos[0];
            for (std::uint64_t i = 0; i < dim; ++i)
                if (i & t) amps[i] = -amps[i];
            return;
        }
        case GateKind::H: {
            const std::uint64_t t = std::uint64_t{1} << bitpos[0];
            for (std::uint64_t i = 0; i < dim; ++i) {
                if (i & t) continue;
                const cplx a = amps[i];
                const cplx b = amps[i | t];
                amps[i] = (a + b) * kInvSqrt2;
                amps[i | t] = (a - b) * kInvSqrt2;
            }
            return;
        }
        case GateKind::PHASE: {
            const std::uint64_t t = std::uint64_t{1} << bitpos[0];
            const cplx e = std::polar(1.0, theta);
            for (std::uint64_t i = 0; i < dim; ++i)
                if (i & t) amps[i] *= e;
            return;
        }
        case GateKind::CNOT: {
            const std::uint64_t c = std::uint64_t{1} << bitpos[0];
            const std::uint64_t t = std::uint64_t{1} << bitpos[1];
            for (std::uint64_t i = 0; i < dim; ++i)
                if ((i & c) && !(i & t)) std::swap(amps[i], amps[i | t]);
            return;
        }
        case GateKind::CZ: {
            const std::uint64_t m =
                (std::uint64_t{1} << bitpos[0]) | (std::uint64_t{1} << bitpos[1]);
            for (std::uint64_t i = 0; i < dim; ++i)
                if ((i & m) == m) amps[i] = -amps[i];
            return;
        }
        case GateKind::TOFFOLI: {
            const std::uint64_t c =
                (std::uint64_t{1} << bitpos[0]) | (std::uint64_t{1} << bitpos[1]);
            const std::uint64_t t = std::uint64_t{1} << bitpos[2];
            for (std::uint64_t i = 0; i < dim; ++i)
                if (((i & c) == c) && !(i & t)) std::swap(amps[i], amps[i | t]);
            return;
        }
    }
    (void)arity;
    throw std::invalid_argument("unhandled gate kind");
}

PureState apply_gate(const PureState& state, const Gate& gate) {
    const int arity = gate_arity(gate.kind);
    if (static_cast<int>(gate.targets.size()) != arity)
        throw std::invalid_argument("gate " + to_string(gate.kind) + " expects " +
                                    std::to_string(arity) + " targets");
    int pos[3] = {0, 0, 0};
    for (int i = 0; i < arity; ++i)
        pos[i] = state.layout().bitpos(gate.targets[static_cast<std::size_t>(i)]);
    for (int i = 0; i < arity; ++i)
        for (int j = i + 1; j < arity; ++j)
            if (pos[i] == pos[j])
                throw std::invalid_argument("gate targets must be distinct qubits");
    std::vector<cplx> amps = state.amplitudes();
    apply_gate_inplace(amps, gate.kind, pos, arity, gate.theta);
    return PureState(state.layout_ptr(), std::move(amps));
}

cplx inner_product(const PureState& a, const PureState& b) {
    if (!(a.layout() == b.layout()))
        throw std::invalid_argument("inner product requires identical layouts");
    cplx s{0.0, 0.0};
    const auto& x = a.amplitudes();
    const auto& y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

double fidelity(const PureState& a, const PureState& b) {
    return std::norm(inner_product(a, b));
}

}  // namespace cleancomm
