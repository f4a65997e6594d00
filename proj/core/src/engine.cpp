#include "cleancomm/engine.hpp"

#include <cmath>
#include <cstdlib>
#include <set>

namespace cleancomm {

std::size_t max_amplitudes() {
    if (const char* env = std::getenv("CLEANCOMM_MAX_AMPLITUDES")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 24;
}

namespace {

void check_dimension(std::size_t dim) {
    if (dim > max_amplitudes())
        throw std::runtime_error("state of " + std::to_string(dim) +
                                 " amplitudes exceeds the memory budget (set "
                                 "CLEANCOMM_MAX_AMPLITUDES to raise it)");
}

std::map<std::string, Party> initial_owners(const ProtocolScript& script) {
    std::map<std::string, Party> owner;
    for (const auto& r : script.layout.registers()) owner[r.name] = r.owner;
    return owner;
}

}  // namespace

QuantumPlan::QuantumPlan(const ProtocolScript& script)
    : script_(script), layout_(std::make_shared<RegisterLayout>(script.layout)) {
    validate(script_);
    check_dimension(layout_->dimension());
    std::map<std::string, Party> owner = initial_owners(script_);
    int step_no = -1;
    for (const auto& step : script_.steps) {
        ++step_no;
        if (const auto* local = std::get_if<LocalStep>(&step)) {
            Op op{};
            op.kind = local->gate.kind;
            op.theta = local->gate.theta;
            const int arity = gate_arity(op.kind);
            for (int i = 0; i < arity; ++i)
                op.pos[i] = layout_->bitpos(local->gate.targets[static_cast<std::size_t>(i)]);
            ops_.push_back(op);
        } else {
            const auto& send = std::get<SendStep>(step);
            Op op{};
            op.send = static_cast<int>(sends_.size());
            ops_.push_back(op);
            owners_before_send_.push_back(owner);
            TranscriptEntry entry;
            entry.step_index = step_no;
            entry.from = send.from;
            entry.to = send.to;
            entry.regs = send.regs;
            for (const auto& name : send.regs) {
                entry.width += layout_->reg(name).width;
                owner[name] = send.to;
            }
            sends_.push_back(std::move(entry));
        }
    }
}

void QuantumPlan::run(std::vector<cplx>& amps,
                      const std::function<void(int, const std::vector<cplx>&)>& on_send) const {
    if (amps.size() != layout_->dimension())
        throw std::invalid_argument("state width does not match the script layout");
    for (const auto& op : ops_) {
        if (op.send >= 0) {
            if (on_send) on_send(op.send, amps);
            continue;
        }
        apply_gate_inplace(amps, op.kind, op.pos, gate_arity(op.kind), op.theta);
    }
}

std::vector<std::string> QuantumPlan::owned_before_send(int send_index, Party party) const {
    const auto& owner = owners_before_send_.at(static_cast<std::size_t>(send_index));
    std::vector<std::string> out;
    for (const auto& r : script_.layout.registers())
        if (owner.at(r.name) == party) out.push_back(r.name);
    return out;
}

QuantumRun run_quantum(const ProtocolScript& script, const PureState& initial) {
    if (!(initial.layout() == script.layout))
        throw std::invalid_argument("initial state layout does not match the script");
    QuantumPlan plan(script);
    std::vector<cplx> amps = initial.amplitudes();
    plan.run(amps);
    QuantumRun result{PureState(plan.layout(), std::move(amps)), cost(script), Transcript{},
                      final_owners(script)};
    result.transcript.sends = plan.send_schedule();
    return result;
}

QuantumRun run_quantum_basis(const ProtocolScript& script, std::uint64_t x, std::uint64_t y,
                             std::uint8_t z) {
    auto layout = std::make_shared<RegisterLayout>(script.layout);
    std::vector<cplx> amps(layout->dimension(), cplx{0.0, 0.0});
    std::uint64_t idx = 0;
    const auto ax = script.alice_input_slots();
    const auto by = script.bob_input_slots();
    for (int i = 0; i < script.n; ++i) {
        if ((x >> (script.n - 1 - i)) & 1u)
            idx |= std::uint64_t{1} << layout->bitpos_of_slot(ax[static_cast<std::size_t>(i)]);
        if ((y >> (script.n - 1 - i)) & 1u)
            idx |= std::uint64_t{1} << layout->bitpos_of_slot(by[static_cast<std::size_t>(i)]);
    }
    if (script.layout.has_register("ans") && z)
        idx |= script.layout.mask(Coord{"ans", 1});
    amps[idx] = cplx{1.0, 0.0};
    return run_quantum(script, PureState(layout, std::move(amps)));
}

ClassicalPlan::ClassicalPlan(const ProtocolScript& script) : script_(script) {
    validate(script_);
    for (const auto& r : script_.layout.registers())
        if (r.kind != RegKind::Bit)
            throw std::invalid_argument("classical backend requires bit registers, found qubit "
                                        "register " +
                                        r.name);
    int step_no = -1;
    for (const auto& step : script_.steps) {
        ++step_no;
        if (const auto* local = std::get_if<LocalStep>(&step)) {
            const GateKind k = local->gate.kind;
            if (k != GateKind::X && k != GateKind::CNOT && k != GateKind::TOFFOLI)
                throw std::invalid_argument("quantum gate " + to_string(k) +
                                            " is not allowed on the classical backend");
            Op op{};
            op.kind = k;
            for (int i = 0; i < gate_arity(k); ++i)
                op.slot[i] = script_.layout.slot(local->gate.targets[static_cast<std::size_t>(i)]);
            ops_.push_back(op);
        } else {
            const auto& send = std::get<SendStep>(step);
            Op op{};
            op.send = static_cast<int>(sends_.size());
            ops_.push_back(op);
            TranscriptEntry entry;
            entry.step_index = step_no;
            entry.from = send.from;
            entry.to = send.to;
            entry.regs = send.regs;
            std::vector<int> slots;
            for (const auto& name : send.regs) {
                entry.width += script_.layout.reg(name).width;
                for (int s : script_.layout.slots(name)) slots.push_back(s);
            }
            sends_.push_back(std::move(entry));
            send_slots_.push_back(std::move(slots));
        }
    }
}

void ClassicalPlan::run(std::vector<std::uint8_t>& bits, Transcript* transcript) const {
    if (bits.size() != static_cast<std::size_t>(width()))
        throw std::invalid_argument("assignment width does not match the script layout");
    for (const auto& op : ops_) {
        if (op.send >= 0) {
            if (transcript) {
                TranscriptEntry entry = sends_[static_cast<std::size_t>(op.send)];
                for (int s : send_slots_[static_cast<std::size_t>(op.send)])
                    entry.values.push_back(bits[static_cast<std::size_t>(s)]);
                transcript->sends.push_back(std::move(entry));
            }
            continue;
        }
        switch (op.kind) {
            case GateKind::X:
                bits[static_cast<std::size_t>(op.slot[0])] ^= 1u;
                break;
            case GateKind::CNOT:
                bits[static_cast<std::size_t>(op.slot[1])] ^=
                    bits[static_cast<std::size_t>(op.slot[0])];
                break;
            case GateKind::TOFFOLI:
                bits[static_cast<std::size_t>(op.slot[2])] ^=
                    static_cast<std::uint8_t>(bits[static_cast<std::size_t>(op.slot[0])] &
                                              bits[static_cast<std::size_t>(op.slot[1])]);
                break;
            default:
                break;
        }
    }
}

ClassicalRun run_classical(const ProtocolScript& script, const std::vector<std::uint8_t>& bits) {
    ClassicalPlan plan(script);
    ClassicalRun result{bits, cost(script), Transcript{}, final_owners(script)};
    plan.run(result.bits, &result.transcript);
    return result;
}

ClassicalRun run_classical_basis(const ProtocolScript& script, std::uint64_t x, std::uint64_t y,
                                 std::uint8_t z) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(script.layout.total_width()), 0);
    const auto ax = script.alice_input_slots();
    const auto by = script.bob_input_slots();
    for (int i = 0; i < script.n; ++i) {
        bits[static_cast<std::size_t>(ax[static_cast<std::size_t>(i)])] =
            static_cast<std::uint8_t>((x >> (script.n - 1 - i)) & 1u);
        bits[static_cast<std::size_t>(by[static_cast<std::size_t>(i)])] =
            static_cast<std::uint8_t>((y >> (script.n - 1 - i)) & 1u);
    }
    if (script.layout.has_register("ans"))
        bits[static_cast<std::size_t>(script.layout.slot(Coord{"ans", 1}))] = z;
    return run_classical(script, bits);
}

namespace {

struct InputIndexer {
    std::vector<std::uint64_t> a_mask, b_mask;
    std::uint64_t ans_mask = 0;
    int n = 0;

    explicit InputIndexer(const ProtocolScript& script) : n(script.n) {
        const auto& layout = script.layout;
        for (int s : script.alice_input_slots())
            a_mask.push_back(std::uint64_t{1} << layout.bitpos_of_slot(s));
        for (int s : script.bob_input_slots())
            b_mask.push_back(std::uint64_t{1} << layout.bitpos_of_slot(s));
        if (layout.has_register("ans")) ans_mask = layout.mask(Coord{"ans", 1});
    }

    std::uint64_t index(std::uint64_t x, std::uint64_t y, std::uint8_t z) const {
        std::uint64_t idx = 0;
        for (int i = 0; i < n; ++i) {
            if ((x >> (n - 1 - i)) & 1u) idx |= a_mask[static_cast<std::size_t>(i)];
            if ((y >> (n - 1 - i)) & 1u) idx |= b_mask[static_cast<std::size_t>(i)];
        }
        if (z) idx |= ans_mask;
        return idx;
    }
};

std::string describe_input(int n, std::uint64_t x, std::uint64_t y, int z) {
    std::string s = "x=" + bits_to_string(x, n) + " y=" + bits_to_string(y, n);
    if (z >= 0) s += " z=" + std::to_string(z);
    return s;
}

/// Ownership part of the cleanliness contract: inputs and the answer
/// register must come home; ancilla moves are reported.
void check_ownership(const ProtocolScript& script, const VerifyOptions& options,
                     CleanlinessReport& report) {
    std::set<std::string> protected_regs;
    for (const auto& c : script.alice_input_coords()) protected_regs.insert(c.reg);
    for (const auto& c : script.bob_input_coords()) protected_regs.insert(c.reg);
    if (script.layout.has_register("ans")) protected_regs.insert("ans");

    const auto owners = final_owners(script);
    for (const auto& r : script.layout.registers()) {
        const Party final_owner = owners.at(r.name);
        if (final_owner == r.owner) continue;
        if (protected_regs.count(r.name)) {
            report.ownership_violations.push_back(r.name);
        } else {
            report.ancilla_final_owners[r.name] = final_owner;
            if (options.strict_ancilla_ownership) report.ownership_violations.push_back(r.name);
        }
    }
}

/// Uniform double in [0,1) from raw engine draws, so results depend only on
/// the seed and not on library distribution internals.
double uniform01(std::mt19937& rng) {
    const std::uint64_t hi = rng() >> 5;   // 27 bits
    const std::uint64_t lo = rng() >> 6;   // 26 bits
    return (static_cast<double>(hi) * 67108864.0 + static_cast<double>(lo)) / 9007199254740992.0;
}

CleanlinessReport verify_clean_quantum(const ProtocolScript& script, const TruthTable& f,
                                       const VerifyOptions& options) {
    CleanlinessReport report;
    report.mode = "clean";
    QuantumPlan plan(script);
    const InputIndexer ix(script);
    const std::uint64_t side = std::uint64_t{1} << script.n;
    const bool register_mode = script.answer_mode == AnswerMode::Register;
    const int zmax = register_mode ? 2 : 1;

    check_ownership(script, options, report);

    std::vector<cplx> amps(plan.dimension());
    auto run_basis_pair = [&](std::uint64_t x, std::uint64_t y, std::uint8_t z,
                              std::uint64_t& idx_out, double& sign_out) {
        std::fill(amps.begin(), amps.end(), cplx{0.0, 0.0});
        amps[ix.index(x, y, z)] = cplx{1.0, 0.0};
        plan.run(amps);
        if (register_mode) {
            idx_out = ix.index(x, y, static_cast<std::uint8_t>(z ^ f(x, y)));
            sign_out = 1.0;
        } else {
            idx_out = ix.index(x, y, 0);
            sign_out = f(x, y) ? -1.0 : 1.0;
        }
    };

    for (std::uint64_t x = 0; x < side; ++x) {
        for (std::uint64_t y = 0; y < side; ++y) {
            for (int z = 0; z < zmax; ++z) {
                std::uint64_t idx = 0;
                double sign = 1.0;
                run_basis_pair(x, y, static_cast<std::uint8_t>(z), idx, sign);
                const double dev = 1.0 - sign * amps[idx].real();
                ++report.checked_inputs;
                if (dev > report.worst_deviation) {
                    report.worst_deviation = dev;
                    report.worst_input = describe_input(script.n, x, y, register_mode ? z : -1);
                }
                if (std::norm(amps[idx]) < 1.0 - options.tolerance) report.answers_correct = false;
            }
        }
    }

    // Random two-term superpositions; linearity of the engine makes these a
    // coherence spot-check rather than an exhaustive sweep.
    std::mt19937 rng(options.seed);
    for (int s = 0; s < options.superposition_samples; ++s) {
        const std::uint64_t x1 = rng() & (side - 1), y1 = rng() & (side - 1);
        const std::uint64_t x2 = rng() & (side - 1), y2 = rng() & (side - 1);
        const std::uint8_t z1 = register_mode ? static_cast<std::uint8_t>(rng() & 1u) : 0;
        const std::uint8_t z2 = register_mode ? static_cast<std::uint8_t>(rng() & 1u) : 0;
        const std::uint64_t i1 = ix.index(x1, y1, z1);
        const std::uint64_t i2 = ix.index(x2, y2, z2);
        if (i1 == i2) continue;
        const double phi = 1.5707963267948966 * uniform01(rng);
        const cplx alpha = std::polar(std::cos(phi), 6.283185307179586 * uniform01(rng));
        const cplx beta = std::polar(std::sin(phi), 6.283185307179586 * uniform01(rng));

        std::fill(amps.begin(), amps.end(), cplx{0.0, 0.0});
        amps[i1] = alpha;
        amps[i2] = beta;
        plan.run(amps);

        cplx overlap{0.0, 0.0};
        if (register_mode) {
            overlap += std::conj(alpha) * amps[ix.index(x1, y1, static_cast<std::uint8_t>(z1 ^ f(x1, y1)))];
            overlap += std::conj(beta) * amps[ix.index(x2, y2, static_cast<std::uint8_t>(z2 ^ f(x2, y2)))];
        } else {
            overlap += std::conj(alpha) * (f(x1, y1) ? -amps[i1] : amps[i1]);
            overlap += std::conj(beta) * (f(x2, y2) ? -amps[i2] : amps[i2]);
        }
        const double dev = 1.0 - overlap.real();
        report.superposition_max_deviation = std::max(report.superposition_max_deviation, dev);
    }

    report.pass = report.ownership_violations.empty() && report.answers_correct &&
                  report.worst_deviation <= options.tolerance &&
                  report.superposition_max_deviation <= options.tolerance;
    if (!report.pass) report.mode = "unclean";
    return report;
}

CleanlinessReport verify_clean_classical(const ProtocolScript& script, const TruthTable& f,
                                         const VerifyOptions& options) {
    CleanlinessReport report;
    report.mode = "clean";
    ClassicalPlan plan(script);
    const std::uint64_t side = std::uint64_t{1} << script.n;
    const auto ax = script.alice_input_slots();
    const auto by = script.bob_input_slots();
    const int ans_slot =
        script.layout.has_register("ans") ? script.layout.slot(Coord{"ans", 1}) : -1;

    check_ownership(script, options, report);

    std::vector<std::uint8_t> bits(static_cast<std::size_t>(plan.width()));
    std::vector<std::uint8_t> expected(static_cast<std::size_t>(plan.width()));
    for (std::uint64_t x = 0; x < side; ++x) {
        for (std::uint64_t y = 0; y < side; ++y) {
            for (int z = 0; z < (ans_slot >= 0 ? 2 : 1); ++z) {
                std::fill(bits.begin(), bits.end(), 0);
                for (int i = 0; i < script.n; ++i) {
                    bits[static_cast<std::size_t>(ax[static_cast<std::size_t>(i)])] =
                        static_cast<std::uint8_t>((x >> (script.n - 1 - i)) & 1u);
                    bits[static_cast<std::size_t>(by[static_cast<std::size_t>(i)])] =
                        static_cast<std::uint8_t>((y >> (script.n - 1 - i)) & 1u);
                }
                if (ans_slot >= 0) bits[static_cast<std::size_t>(ans_slot)] = static_cast<std::uint8_t>(z);
                expected = bits;
                if (ans_slot >= 0)
                    expected[static_cast<std::size_t>(ans_slot)] =
                        static_cast<std::uint8_t>(z ^ f(x, y));
                plan.run(bits);
                ++report.checked_inputs;
                if (bits != expected) {
                    report.answers_correct = false;
                    if (report.worst_deviation < 1.0) {
                        report.worst_deviation = 1.0;
                        report.worst_input = describe_input(script.n, x, y, ans_slot >= 0 ? z : -1);
                    }
                }
            }
        }
    }

    report.pass = report.ownership_violations.empty() && report.answers_correct &&
                  report.worst_deviation <= options.tolerance;
    if (!report.pass) report.mode = "unclean";
    return report;
}

}  // namespace

CleanlinessReport verify_clean(const ProtocolScript& script, const TruthTable& f,
                               const VerifyOptions& options) {
    if (f.n() != script.n)
        throw std::invalid_argument("truth table arity does not match the script");
    try {
        return script.is_classical() ? verify_clean_classical(script, f, options)
                                     : verify_clean_quantum(script, f, options);
    } catch (const std::exception& e) {
        CleanlinessReport report;
        report.pass = false;
        report.mode = "unclean";
        report.error = e.what();
        return report;
    }
}

}  // namespace cleancomm
