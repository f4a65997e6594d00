#include "cleancomm/infocost.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "cleancomm/density.hpp"

namespace cleancomm {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;

int side_of(const std::vector<double>& mu) {
    const auto size = mu.size();
    if (size == 0 || (size & (size - 1)) != 0)
        throw std::invalid_argument("distribution length must be a power of two");
    int n = 0;
    while ((std::size_t{1} << n) < size) ++n;
    return n;
}

void check_distribution(const std::vector<double>& mu) {
    double total = 0.0;
    for (double p : mu) {
        if (p < 0.0) throw std::invalid_argument("distribution has a negative weight");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("distribution does not sum to 1");
}

/// The script extended with the purification register R (and Bob's copy B'
/// for c-s inputs); steps are untouched, so R is never acted upon.
ProtocolScript extend_for_family(const ProtocolScript& script, const InputFamily& family) {
    ProtocolScript ext = script;
    std::vector<RegisterSpec> regs = script.layout.registers();
    if (family.kind == InputFamily::Kind::CS)
        regs.push_back({"Bprime", script.n, RegKind::Qubit, Party::Bob});
    regs.push_back({"R", family.kind == InputFamily::Kind::CC ? 2 * script.n : script.n,
                    RegKind::Qubit, Party::None});
    ext.layout = RegisterLayout(std::move(regs));
    return ext;
}

PureState purified_initial_state(const ProtocolScript& ext, const InputFamily& family) {
    const int n = ext.n;
    if (side_of(family.mu_a) != n || side_of(family.mu_b) != n)
        throw std::invalid_argument("input family distributions do not match the script's n");
    check_distribution(family.mu_a);
    check_distribution(family.mu_b);

    auto layout = std::make_shared<RegisterLayout>(ext.layout);
    if (layout->dimension() > max_amplitudes())
        throw std::runtime_error("purified state exceeds the memory budget");

    const auto ax = ext.alice_input_slots();
    const auto by = ext.bob_input_slots();
    const bool has_ans = layout->has_register("ans");
    const std::uint64_t ans_mask = has_ans ? layout->mask(Coord{"ans", 1}) : 0;

    // Per-slot masks for scattering x and y (and their copies) quickly.
    auto masks_for = [&](const std::vector<int>& slots) {
        std::vector<std::uint64_t> m;
        for (int s : slots) m.push_back(std::uint64_t{1} << layout->bitpos_of_slot(s));
        return m;
    };
    const auto ax_m = masks_for(ax);
    const auto by_m = masks_for(by);
    std::vector<std::uint64_t> bp_m, rx_m, ry_m;
    if (family.kind == InputFamily::Kind::CS) bp_m = masks_for(layout->slots("Bprime"));
    {
        const auto r_slots = layout->slots("R");
        for (int i = 0; i < n; ++i)
            rx_m.push_back(std::uint64_t{1}
                           << layout->bitpos_of_slot(r_slots[static_cast<std::size_t>(i)]));
        if (family.kind == InputFamily::Kind::CC)
            for (int i = 0; i < n; ++i)
                ry_m.push_back(std::uint64_t{1}
                               << layout->bitpos_of_slot(r_slots[static_cast<std::size_t>(n + i)]));
    }
    auto scatter = [n](std::uint64_t v, const std::vector<std::uint64_t>& masks) {
        std::uint64_t idx = 0;
        for (int i = 0; i < n; ++i)
            if ((v >> (n - 1 - i)) & 1u) idx |= masks[static_cast<std::size_t>(i)];
        return idx;
    };

    std::vector<cplx> amps(layout->dimension(), cplx{0.0, 0.0});
    const std::uint64_t side = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < side; ++x) {
        if (family.mu_a[x] == 0.0) continue;
        for (std::uint64_t y = 0; y < side; ++y) {
            if (family.mu_b[y] == 0.0) continue;
            const double w = std::sqrt(family.mu_a[x] * family.mu_b[y]);
            std::uint64_t idx = scatter(x, ax_m) | scatter(y, by_m) | scatter(x, rx_m);
            if (family.kind == InputFamily::Kind::CC) idx |= scatter(y, ry_m);
            if (family.kind == InputFamily::Kind::CS) idx |= scatter(y, bp_m);
            if (has_ans) {
                amps[idx] = cplx{w * kInvSqrt2, 0.0};
                amps[idx | ans_mask] = cplx{-w * kInvSqrt2, 0.0};
            } else {
                amps[idx] = cplx{w, 0.0};
            }
        }
    }
    return PureState(std::move(layout), std::move(amps));
}

}  // namespace

InputFamily InputFamily::uniform(Kind kind, int n) {
    InputFamily f;
    f.kind = kind;
    f.mu_a.assign(std::size_t{1} << n, 1.0 / double(std::uint64_t{1} << n));
    f.mu_b = f.mu_a;
    return f;
}

InfoCostReport qic_report(const ProtocolScript& script, const InputFamily& family) {
    const ProtocolScript ext = extend_for_family(script, family);
    QuantumPlan plan(ext);
    PureState state = purified_initial_state(ext, family);

    InfoCostReport report;
    report.family = family.label();
    const auto r_slots = ext.layout.slots("R");

    auto party_slots = [&](int send_index, Party p) {
        return ext.layout.slots(plan.owned_before_send(send_index, p));
    };

    // I(B_in : R) on the initial state.
    {
        std::vector<std::string> bob_regs;
        for (const auto& r : ext.layout.registers())
            if (r.owner == Party::Bob) bob_regs.push_back(r.name);
        report.i_bin_r = cmi_slots(state, ext.layout.slots(bob_regs), r_slots, {});
    }

    std::vector<cplx> amps = state.amplitudes();
    const auto& schedule = plan.send_schedule();
    plan.run(amps, [&](int send_index, const std::vector<cplx>& current) {
        const auto& entry = schedule[static_cast<std::size_t>(send_index)];
        PureState snapshot(state.layout_ptr(), current);
        std::vector<int> message_slots = ext.layout.slots(entry.regs);
        std::vector<int> receiver_slots = party_slots(send_index, entry.to);
        const double cmi = cmi_slots(snapshot, message_slots, r_slots, receiver_slots);
        RoundLeak leak;
        leak.dir = entry.to == Party::Bob ? "A->B" : "B->A";
        leak.width = entry.width;
        leak.cmi = cmi;
        report.rounds.push_back(leak);
        (entry.to == Party::Bob ? report.qla : report.qlb) += cmi;
    });

    // I(B_out : R) on the final state.
    {
        const auto owners = final_owners(ext);
        std::vector<std::string> bob_regs;
        for (const auto& r : ext.layout.registers())
            if (owners.at(r.name) == Party::Bob) bob_regs.push_back(r.name);
        PureState final_state(state.layout_ptr(), std::move(amps));
        report.i_bout_r = cmi_slots(final_state, ext.layout.slots(bob_regs), r_slots, {});
    }

    report.qic = 0.5 * (report.qla + report.qlb);
    report.flow_residual =
        std::abs(report.i_bout_r - report.i_bin_r + report.qlb - report.qla);
    return report;
}

double info_flow_residual(const ProtocolScript& script, const InputFamily& family) {
    return qic_report(script, family).flow_residual;
}

std::pair<double, double> leak_comparison(const ProtocolScript& script,
                                          const std::vector<double>& mu_a,
                                          const std::vector<double>& mu_b) {
    InputFamily cc{InputFamily::Kind::CC, mu_a, mu_b};
    InputFamily cs{InputFamily::Kind::CS, mu_a, mu_b};
    return {qic_report(script, cc).qla, qic_report(script, cs).qla};
}

std::vector<double> uniform_joint(int n) {
    const std::size_t pairs = std::size_t{1} << (2 * n);
    return std::vector<double>(pairs, 1.0 / double(pairs));
}

double shannon_entropy(const std::vector<double>& probs) {
    double h = 0.0;
    for (double p : probs) {
        if (p < 0.0) throw std::invalid_argument("negative probability");
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

TranscriptTable enumerate_transcripts(const ProtocolScript& script) {
    if (!script.is_classical())
        throw std::invalid_argument("transcript enumeration needs a classical script");
    ClassicalPlan plan(script);
    const std::uint64_t side = std::uint64_t{1} << script.n;
    const auto ax = script.alice_input_slots();
    const auto by = script.bob_input_slots();

    TranscriptTable table;
    table.n = script.n;
    table.to_alice.resize(side * side);
    table.to_bob.resize(side * side);
    table.bob_rounds.resize(side * side);

    std::vector<std::uint8_t> bits(static_cast<std::size_t>(plan.width()));
    for (std::uint64_t x = 0; x < side; ++x) {
        for (std::uint64_t y = 0; y < side; ++y) {
            std::fill(bits.begin(), bits.end(), 0);
            for (int i = 0; i < script.n; ++i) {
                bits[static_cast<std::size_t>(ax[static_cast<std::size_t>(i)])] =
                    static_cast<std::uint8_t>((x >> (script.n - 1 - i)) & 1u);
                bits[static_cast<std::size_t>(by[static_cast<std::size_t>(i)])] =
                    static_cast<std::uint8_t>((y >> (script.n - 1 - i)) & 1u);
            }
            Transcript transcript;
            plan.run(bits, &transcript);
            std::string a_str, b_str;
            auto& rounds = table.bob_rounds[(x << script.n) | y];
            for (const auto& send : transcript.sends) {
                std::string vals;
                for (auto v : send.values) vals.push_back(v ? '1' : '0');
                if (send.to == Party::Alice) {
                    a_str += vals;
                } else {
                    b_str += vals;
                    rounds.push_back(vals);
                }
            }
            table.to_alice[(x << script.n) | y] = std::move(a_str);
            table.to_bob[(x << script.n) | y] = std::move(b_str);
        }
    }
    return table;
}

ClassicalInfoReport classical_info_bounds(const ProtocolScript& script,
                                          const std::vector<double>& joint_xy) {
    const int n = script.n;
    if (joint_xy.size() != (std::size_t{1} << (2 * n)))
        throw std::invalid_argument("joint distribution length must be 2^(2n)");
    check_distribution(joint_xy);

    const TranscriptTable table = enumerate_transcripts(script);
    const CostReport c = cost(script);
    const std::uint64_t side = std::uint64_t{1} << n;

    // Accumulate marginal distributions keyed by projected outcomes.
    enum Var { X, Y, Akey, Bkey };
    auto project = [&](std::uint64_t x, std::uint64_t y, const std::vector<Var>& vars) {
        std::string key;
        for (Var v : vars) {
            switch (v) {
                case X: key += "x" + std::to_string(x); break;
                case Y: key += "y" + std::to_string(y); break;
                case Akey: key += "a" + table.to_alice[(x << n) | y]; break;
                case Bkey: key += "b" + table.to_bob[(x << n) | y]; break;
            }
            key += '|';
        }
        return key;
    };
    auto entropy_of = [&](const std::vector<Var>& vars) {
        std::map<std::string, double> dist;
        for (std::uint64_t x = 0; x < side; ++x)
            for (std::uint64_t y = 0; y < side; ++y) {
                const double p = joint_xy[(x << n) | y];
                if (p > 0.0) dist[project(x, y, vars)] += p;
            }
        std::vector<double> probs;
        probs.reserve(dist.size());
        for (const auto& [key, p] : dist) probs.push_back(p);
        return shannon_entropy(probs);
    };

    ClassicalInfoReport report;
    const double h_x = entropy_of({X});
    const double h_y = entropy_of({Y});
    report.i_xy = h_x + h_y - entropy_of({X, Y});
    report.i_x_yb = h_x + entropy_of({Y, Bkey}) - entropy_of({X, Y, Bkey});
    report.i_y_xa = h_y + entropy_of({X, Akey}) - entropy_of({X, Y, Akey});
    report.a_bits = c.to_alice();
    report.b_bits = c.to_bob();
    report.residual_a = report.a_bits - (report.i_x_yb - report.i_xy - 1.0);
    report.residual_b = report.b_bits - (report.i_y_xa - report.i_xy);
    return report;
}

}  // namespace cleancomm
