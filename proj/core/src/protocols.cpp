#include "cleancomm/protocols.hpp"

#include <cmath>

namespace cleancomm {

namespace {

std::string num(int i) { return std::to_string(i); }

Coord A(int i) { return Coord{"A" + num(i), 1}; }
Coord B(int i) { return Coord{"B" + num(i), 1}; }
const Coord kAns{"ans", 1};

void add_input_registers(std::vector<RegisterSpec>& regs, int n, RegKind kind) {
    for (int i = 1; i <= n; ++i) regs.push_back({"A" + num(i), 1, kind, Party::Alice});
    for (int i = 1; i <= n; ++i) regs.push_back({"B" + num(i), 1, kind, Party::Bob});
}

void local(std::vector<Step>& steps, Party p, Gate g) { steps.push_back(LocalStep{p, std::move(g)}); }

void send(std::vector<Step>& steps, Party from, Party to, std::vector<std::string> regs) {
    steps.push_back(SendStep{from, to, std::move(regs)});
}

void require_n(int n) {
    if (n < 1) throw std::invalid_argument("protocol requires n >= 1");
}

}  // namespace

const std::vector<ProtocolFamily>& protocol_families() {
    static const std::vector<ProtocolFamily> families = {
        {"phase-ip", "IP in the phase, one travelling ancilla qubit, n+1 qubits", false, false},
        {"phase-ip-noanc", "IP in the phase without ancillas, n+2 / n+1 qubits", false, false},
        {"clean-ip", "clean quantum IP with answer register, n+2 / n+3 qubits", false, false},
        {"mixed-ip", "clean IP with 2 qubits and n+1 bits", false, false},
        {"classical-ip", "clean classical block IP, about n + 4*sqrt(n) bits", true, true},
        {"trivial-ip", "unclean one-way baseline: Alice sends x, Bob computes", true, false},
        {"naive-wrap", "trivial-ip wrapped clean by doubling", true, false},
    };
    return families;
}

bool is_protocol_id(const std::string& id) {
    for (const auto& f : protocol_families())
        if (f.id == id) return true;
    return false;
}

ProtocolScript build_phase_ip(int n, bool use_ancilla) {
    require_n(n);
    if (!use_ancilla) {
        // The communication qubit is A1 itself; see the variant below.
        ProtocolScript s;
        s.name = "phase-ip-noanc";
        s.n = n;
        s.answer_mode = AnswerMode::Phase;
        std::vector<RegisterSpec> regs;
        add_input_registers(regs, n, RegKind::Qubit);
        s.layout = RegisterLayout(std::move(regs));
        auto& st = s.steps;

        if (n == 1) {
            send(st, Party::Alice, Party::Bob, {"A1"});
            local(st, Party::Bob, Gate::CZ(A(1), B(1)));
            send(st, Party::Bob, Party::Alice, {"A1"});
            return s;
        }

        const bool even = n % 2 == 0;
        const int last_even = even ? n : n - 1;
        // Alice pre-phases against her own even bits, then A1 starts shuttling.
        for (int i = 2; i <= last_even; i += 2) local(st, Party::Alice, Gate::CZ(A(1), A(i)));
        send(st, Party::Alice, Party::Bob, {"A1"});
        for (int i = 1; i <= n; i += 2) local(st, Party::Bob, Gate::CZ(A(1), B(i)));
        local(st, Party::Bob, Gate::CNOT(B(2), A(1)));  // A1 = |x1 + y2>
        send(st, Party::Bob, Party::Alice, {"A1"});

        const int rounds = (even ? n : n - 1) / 2;
        for (int j = 2; j <= rounds; ++j) {
            local(st, Party::Alice, Gate::CZ(A(1), A(2 * j - 2)));
            local(st, Party::Alice, Gate::CNOT(A(2 * j - 1), A(1)));
            send(st, Party::Alice, Party::Bob, {"A1"});
            local(st, Party::Bob, Gate::CNOT(B(2 * j - 2), A(1)));
            local(st, Party::Bob, Gate::CZ(A(1), B(2 * j - 1)));
            local(st, Party::Bob, Gate::CNOT(B(2 * j), A(1)));
            send(st, Party::Bob, Party::Alice, {"A1"});
            local(st, Party::Alice, Gate::CNOT(A(2 * j - 1), A(1)));
        }

        if (even) {
            local(st, Party::Alice, Gate::CZ(A(1), A(n)));
            send(st, Party::Alice, Party::Bob, {"A1"});
            local(st, Party::Bob, Gate::CNOT(B(n), A(1)));
            send(st, Party::Bob, Party::Alice, {"A1"});
        } else {
            local(st, Party::Alice, Gate::CZ(A(1), A(n - 1)));
            local(st, Party::Alice, Gate::CNOT(A(n), A(1)));
            send(st, Party::Alice, Party::Bob, {"A1"});
            local(st, Party::Bob, Gate::CNOT(B(n - 1), A(1)));
            local(st, Party::Bob, Gate::CZ(A(1), B(n)));
            send(st, Party::Bob, Party::Alice, {"A1"});  // A1 = |x1 + xn>
            local(st, Party::Alice, Gate::CNOT(A(n), A(1)));
        }
        return s;
    }

    // Ancilla variant: a dedicated communication qubit C carries one input
    // bit per trip; the receiver first cleans the previous bit, applies the
    // phase for the bit just received, then loads the next one.
    ProtocolScript s;
    s.name = "phase-ip";
    s.n = n;
    s.answer_mode = AnswerMode::Phase;
    std::vector<RegisterSpec> regs;
    add_input_registers(regs, n, RegKind::Qubit);
    regs.push_back({"C", 1, RegKind::Qubit, Party::Alice});
    s.layout = RegisterLayout(std::move(regs));
    auto& st = s.steps;
    const Coord C{"C", 1};

    local(st, Party::Alice, Gate::CNOT(A(1), C));
    send(st, Party::Alice, Party::Bob, {"C"});
    for (int i = 1; i <= n; ++i) {
        const bool bob_turn = i % 2 == 1;
        const Party holder = bob_turn ? Party::Bob : Party::Alice;
        // Clean the previous sender's bit, phase against bit i.
        if (i >= 2)
            local(st, holder, Gate::CNOT(bob_turn ? B(i - 1) : A(i - 1), C));
        local(st, holder, Gate::CZ(C, bob_turn ? B(i) : A(i)));
        if (i < n) {
            local(st, holder, Gate::CNOT(bob_turn ? B(i + 1) : A(i + 1), C));
            send(st, holder, bob_turn ? Party::Alice : Party::Bob, {"C"});
        } else {
            const Party other = bob_turn ? Party::Alice : Party::Bob;
            send(st, holder, other, {"C"});
            local(st, other, Gate::CNOT(bob_turn ? A(n) : B(n), C));
        }
    }
    return s;
}

ProtocolScript build_clean_quantum_ip(int n) {
    require_n(n);
    ProtocolScript s;
    s.name = "clean-ip";
    s.n = n;
    s.answer_mode = AnswerMode::Register;
    std::vector<RegisterSpec> regs;
    add_input_registers(regs, n, RegKind::Qubit);
    regs.push_back({"ans", 1, RegKind::Qubit, Party::Bob});
    s.layout = RegisterLayout(std::move(regs));
    auto& st = s.steps;

    if (n == 1) {
        // Cost pinned to n+3 = 4 by the odd-n formula; the extra round trip
        // shuttles A1 through a Hadamard frame since there is no second
        // input qubit to interleave with.
        send(st, Party::Alice, Party::Bob, {"A1"});
        local(st, Party::Bob, Gate::TOFFOLI(A(1), B(1), kAns));
        local(st, Party::Bob, Gate::H(A(1)));
        send(st, Party::Bob, Party::Alice, {"A1"});
        send(st, Party::Alice, Party::Bob, {"A1"});
        local(st, Party::Bob, Gate::H(A(1)));
        send(st, Party::Bob, Party::Alice, {"A1"});
        return s;
    }

    const int m = n % 2 == 0 ? n : n - 1;  // even prefix handled by the frame

    send(st, Party::Alice, Party::Bob, {"A1", "A2"});
    for (int i = 1; i <= m; i += 2) local(st, Party::Bob, Gate::TOFFOLI(A(1), B(i), kAns));
    for (int i = 2; i <= m; i += 2) local(st, Party::Bob, Gate::TOFFOLI(A(2), B(i), kAns));
    local(st, Party::Bob, Gate::H(A(1)));
    local(st, Party::Bob, Gate::CNOT(A(1), A(2)));
    send(st, Party::Bob, Party::Alice, {"A1"});

    for (int j = 2; j <= m / 2; ++j) {
        local(st, Party::Alice, Gate::CZ(A(1), A(2 * j - 1)));
        local(st, Party::Alice, Gate::CNOT(A(2 * j), A(1)));
        send(st, Party::Alice, Party::Bob, {"A1"});
        local(st, Party::Bob, Gate::CNOT(A(2), A(1)));
        local(st, Party::Bob, Gate::H(A(2)));
        // A1 = |x_{2j} + x_2>, A2 = |x_{2j-1} + x_1|: two clean Toffolis.
        local(st, Party::Bob, Gate::TOFFOLI(A(1), B(2 * j), kAns));
        local(st, Party::Bob, Gate::TOFFOLI(A(2), B(2 * j - 1), kAns));
        local(st, Party::Bob, Gate::H(A(2)));
        local(st, Party::Bob, Gate::CNOT(A(2), A(1)));
        send(st, Party::Bob, Party::Alice, {"A1"});
        local(st, Party::Alice, Gate::CNOT(A(2 * j), A(1)));
        local(st, Party::Alice, Gate::CZ(A(1), A(2 * j - 1)));
    }

    send(st, Party::Bob, Party::Alice, {"A2"});
    local(st, Party::Alice, Gate::CNOT(A(1), A(2)));
    local(st, Party::Alice, Gate::H(A(1)));

    if (n % 2 == 1) {
        send(st, Party::Alice, Party::Bob, {"A" + num(n)});
        local(st, Party::Bob, Gate::TOFFOLI(A(n), B(n), kAns));
        send(st, Party::Bob, Party::Alice, {"A" + num(n)});
    }
    return s;
}

ProtocolScript build_mixed_ip(int n) {
    require_n(n);
    ProtocolScript s;
    s.name = "mixed-ip";
    s.n = n;
    s.answer_mode = AnswerMode::Register;
    std::vector<RegisterSpec> regs;
    add_input_registers(regs, n, RegKind::Bit);
    regs.push_back({"ans", 1, RegKind::Qubit, Party::Bob});
    regs.push_back({"eq", 1, RegKind::Qubit, Party::Bob});   // entangled ancilla
    regs.push_back({"cb", 1, RegKind::Bit, Party::Alice});   // classical carrier
    s.layout = RegisterLayout(std::move(regs));
    auto& st = s.steps;
    const Coord C{"cb", 1};
    const Coord EQ{"eq", 1};

    // Bob turns |z> into half of (|00> + (-1)^z |11>)/sqrt(2) and parks the
    // other half with Alice; the phase-IP run below kicks (-1)^{x.y} onto it.
    local(st, Party::Bob, Gate::H(kAns));
    local(st, Party::Bob, Gate::CNOT(kAns, EQ));
    send(st, Party::Bob, Party::Alice, {"eq"});

    local(st, Party::Alice, Gate::CNOT(A(1), C));
    send(st, Party::Alice, Party::Bob, {"cb"});
    for (int i = 1; i <= n; ++i) {
        const bool bob_turn = i % 2 == 1;
        const Party holder = bob_turn ? Party::Bob : Party::Alice;
        const Coord half = bob_turn ? kAns : EQ;
        if (i >= 2) local(st, holder, Gate::CNOT(bob_turn ? B(i - 1) : A(i - 1), C));
        // CCZ(carrier, input bit, entangled half) via a Hadamard-framed Toffoli.
        local(st, holder, Gate::H(half));
        local(st, holder, Gate::TOFFOLI(C, bob_turn ? B(i) : A(i), half));
        local(st, holder, Gate::H(half));
        if (i < n) {
            local(st, holder, Gate::CNOT(bob_turn ? B(i + 1) : A(i + 1), C));
            send(st, holder, bob_turn ? Party::Alice : Party::Bob, {"cb"});
        } else {
            const Party other = bob_turn ? Party::Alice : Party::Bob;
            send(st, holder, other, {"cb"});
            local(st, other, Gate::CNOT(bob_turn ? A(n) : B(n), C));
        }
    }

    send(st, Party::Alice, Party::Bob, {"eq"});
    local(st, Party::Bob, Gate::CNOT(kAns, EQ));
    local(st, Party::Bob, Gate::H(kAns));
    return s;
}

BlockShape classical_block_shape(int n, std::optional<int> k_opt) {
    require_n(n);
    BlockShape shape;
    shape.k = k_opt.value_or(static_cast<int>(std::floor(std::sqrt(double(n)))));
    if (shape.k < 1 || shape.k > n)
        throw std::invalid_argument("block size k must satisfy 1 <= k <= n");
    shape.r = n % shape.k;
    shape.l = (n - shape.r) / shape.k;
    shape.even_rounds = (shape.l + 1) % 2 == 0;
    return shape;
}

ProtocolScript build_classical_ip(int n, std::optional<int> k_opt) {
    const BlockShape shape = classical_block_shape(n, k_opt);
    const int k = shape.k, l = shape.l, r = shape.r;

    ProtocolScript s;
    s.name = "classical-ip";
    s.n = n;
    s.answer_mode = AnswerMode::Register;
    std::vector<RegisterSpec> regs;
    add_input_registers(regs, n, RegKind::Bit);
    regs.push_back({"ans", 1, RegKind::Bit, Party::Bob});
    s.layout = RegisterLayout(std::move(regs));
    auto& st = s.steps;

    // Block i of x lives in A_{(i-1)k+1} .. ; block l+1 holds the final r
    // bits and is implicitly zero-padded, so its missing bits are skipped.
    const auto width = [&](int i) { return i <= l ? k : r; };
    const auto xc = [&](int i, int t) { return A((i - 1) * k + t); };
    const auto yc = [&](int i, int t) { return B((i - 1) * k + t); };
    // The travelling block register B(1) and the answer bit, as send lists.
    std::vector<std::string> block_and_ans, block_only;
    for (int t = 1; t <= k; ++t) block_only.push_back("B" + num(t));
    block_and_ans = block_only;
    block_and_ans.push_back("ans");

    const auto block_ip_into_ans = [&](Party p, int i, bool against_x) {
        for (int t = 1; t <= width(i); ++t)
            local(st, p, Gate::TOFFOLI(yc(1, t), against_x ? xc(i, t) : yc(i, t), kAns));
    };
    const auto xor_block = [&](Party p, int i, bool from_x) {
        for (int t = 1; t <= width(i); ++t)
            local(st, p, Gate::CNOT(from_x ? xc(i, t) : yc(i, t), yc(1, t)));
    };

    const int l1 = l + 1;
    const int full_rounds = shape.even_rounds ? l1 / 2 : l / 2;

    for (int i = 2; i <= l1; i += 2)
        if (shape.even_rounds || i <= l) block_ip_into_ans(Party::Bob, i, false);
    send(st, Party::Bob, Party::Alice, block_and_ans);
    for (int i = 1; i <= l1; i += 2) block_ip_into_ans(Party::Alice, i, true);
    xor_block(Party::Alice, 2, true);
    send(st, Party::Alice, Party::Bob, block_and_ans);

    for (int j = 2; j <= full_rounds; ++j) {
        block_ip_into_ans(Party::Bob, 2 * j - 2, false);
        xor_block(Party::Bob, 2 * j - 1, false);
        send(st, Party::Bob, Party::Alice, block_and_ans);
        xor_block(Party::Alice, 2 * j - 2, true);
        block_ip_into_ans(Party::Alice, 2 * j - 1, true);
        xor_block(Party::Alice, 2 * j, true);
        send(st, Party::Alice, Party::Bob, block_and_ans);
        xor_block(Party::Bob, 2 * j - 1, false);
    }

    if (shape.even_rounds) {
        // Bob finishes: B(1) holds y(1)+x(l+1), the last block product goes
        // into ans, then the block is walked home without the answer bit.
        block_ip_into_ans(Party::Bob, l1, false);
        send(st, Party::Bob, Party::Alice, block_only);
        xor_block(Party::Alice, l1, true);
        send(st, Party::Alice, Party::Bob, block_only);
    } else {
        // Alice applies the final product; Bob unwinds y(l+1) at the end.
        block_ip_into_ans(Party::Bob, l, false);
        xor_block(Party::Bob, l1, false);
        send(st, Party::Bob, Party::Alice, block_and_ans);
        xor_block(Party::Alice, l, true);
        block_ip_into_ans(Party::Alice, l1, true);
        send(st, Party::Alice, Party::Bob, block_and_ans);
        xor_block(Party::Bob, l1, false);
    }
    return s;
}

ProtocolScript build_trivial_unclean_ip(int n) {
    require_n(n);
    ProtocolScript s;
    s.name = "trivial-ip";
    s.n = n;
    s.answer_mode = AnswerMode::Register;
    std::vector<RegisterSpec> regs;
    add_input_registers(regs, n, RegKind::Bit);
    regs.push_back({"ans", 1, RegKind::Bit, Party::Bob});
    s.layout = RegisterLayout(std::move(regs));
    std::vector<std::string> all_a;
    for (int i = 1; i <= n; ++i) all_a.push_back("A" + num(i));
    send(s.steps, Party::Alice, Party::Bob, std::move(all_a));
    for (int i = 1; i <= n; ++i)
        local(s.steps, Party::Bob, Gate::TOFFOLI(A(i), B(i), kAns));
    return s;
}

ProtocolScript wrap_naive_clean(const ProtocolScript& unclean, std::optional<Coord> answer) {
    validate(unclean);
    std::optional<Coord> source = answer;
    if (!source && unclean.answer_mode == AnswerMode::Register) source = Coord{"ans", 1};

    if (source) {
        unclean.layout.slot(*source);
        if (final_owners(unclean).at(source->reg) != Party::Bob)
            throw std::invalid_argument(
                "naive wrap: answer is not located at Bob at the end of the protocol");
    }

    // The inner protocol's own answer register becomes plain working space
    // ("res") and a fresh answer register takes its place.
    ProtocolScript s;
    s.name = unclean.name + "+naive-wrap";
    s.n = unclean.n;
    s.answer_mode = source ? AnswerMode::Register : AnswerMode::None;

    const bool had_ans = unclean.layout.has_register("ans");
    auto rename = [&](const std::string& name) { return had_ans && name == "ans" ? "res" : name; };

    std::vector<RegisterSpec> regs;
    RegKind ans_kind = RegKind::Bit;
    for (const auto& r : unclean.layout.registers()) {
        if (r.name == "res")
            throw std::invalid_argument("naive wrap: register name 'res' is reserved");
        regs.push_back({rename(r.name), r.width, r.kind, r.owner});
        if (source && r.name == source->reg) ans_kind = r.kind;
    }
    if (source) regs.push_back({"ans", 1, ans_kind, Party::Bob});
    s.layout = RegisterLayout(std::move(regs));

    auto rename_step = [&](Step step) {
        if (auto* localp = std::get_if<LocalStep>(&step)) {
            for (auto& t : localp->gate.targets) t.reg = rename(t.reg);
        } else {
            for (auto& reg : std::get<SendStep>(step).regs) reg = rename(reg);
        }
        return step;
    };

    for (const auto& step : unclean.steps) s.steps.push_back(rename_step(step));
    if (source)
        local(s.steps, Party::Bob, Gate::CNOT(Coord{rename(source->reg), source->bit}, kAns));
    for (const auto& step : inverted_steps(unclean.steps)) s.steps.push_back(rename_step(step));
    return s;
}

ProtocolScript build_protocol(const std::string& id, int n, std::optional<int> k) {
    if (id == "phase-ip") return build_phase_ip(n, true);
    if (id == "phase-ip-noanc") return build_phase_ip(n, false);
    if (id == "clean-ip") return build_clean_quantum_ip(n);
    if (id == "mixed-ip") return build_mixed_ip(n);
    if (id == "classical-ip") return build_classical_ip(n, k);
    if (id == "trivial-ip") return build_trivial_unclean_ip(n);
    if (id == "naive-wrap") return wrap_naive_clean(build_trivial_unclean_ip(n));
    throw std::invalid_argument("unknown protocol id: " + id);
}

CostReport declared_cost(const std::string& id, int n, std::optional<int> k_opt) {
    require_n(n);
    CostReport c;
    const bool even = n % 2 == 0;
    if (id == "phase-ip") {
        const int total = n + 1;
        c.qubits_to_bob = (total + 1) / 2;
        c.qubits_to_alice = total / 2;
        c.rounds = total;
    } else if (id == "phase-ip-noanc") {
        const int total = even ? n + 2 : n + 1;
        c.qubits_to_bob = total / 2 + (total % 2);
        c.qubits_to_alice = total / 2;
        c.rounds = total;
    } else if (id == "clean-ip") {
        if (n == 1) {
            c.qubits_to_bob = 2;
            c.qubits_to_alice = 2;
            c.rounds = 4;
        } else if (even) {
            // A1+A2 out, A1 twice per middle round, A1 and A2 home.
            c.qubits_to_bob = 2 + (n / 2 - 1);
            c.qubits_to_alice = 1 + (n / 2 - 1) + 1;
            c.rounds = 3 + 2 * (n / 2 - 1);
        } else {
            const int m = n - 1;
            c.qubits_to_bob = 2 + (m / 2 - 1) + 1;
            c.qubits_to_alice = 1 + (m / 2 - 1) + 1 + 1;
            c.rounds = 3 + 2 * (m / 2 - 1) + 2;
        }
    } else if (id == "mixed-ip") {
        c.qubits_to_alice = 1;
        c.qubits_to_bob = 1;
        const int bits = n + 1;
        c.bits_to_bob = (bits + 1) / 2;
        c.bits_to_alice = bits / 2;
        c.rounds = 2 + bits;
    } else if (id == "classical-ip") {
        const BlockShape s = classical_block_shape(n, k_opt);
        const int k = s.k, l = s.l;
        if (s.even_rounds) {
            // (k+1)(l+1) + 2k = kl + 3k + l + 1
            c.bits_to_alice = (k + 1) * ((l + 1) / 2) + k;
            c.bits_to_bob = (k + 1) * ((l + 1) / 2) + k;
            c.rounds = l + 3;
        } else {
            // (k+1)(l+2) = kl + 2k + l + 2
            c.bits_to_alice = (k + 1) * ((l + 2) / 2);
            c.bits_to_bob = (k + 1) * ((l + 2) / 2);
            c.rounds = l + 2;
        }
    } else if (id == "trivial-ip") {
        c.bits_to_bob = n;
        c.rounds = 1;
    } else if (id == "naive-wrap") {
        c.bits_to_bob = n;
        c.bits_to_alice = n;
        c.rounds = 2;
    } else {
        throw std::invalid_argument("unknown protocol id: " + id);
    }
    return c;
}

SuperdenseResult superdense_extraction(int n, std::uint64_t fixed_input, bool alice_superposed,
                                       bool use_ancilla, double tolerance) {
    ProtocolScript script = build_phase_ip(n, use_ancilla);
    auto layout = std::make_shared<RegisterLayout>(script.layout);
    const auto superposed = alice_superposed ? script.alice_input_slots() : script.bob_input_slots();
    const auto fixed = alice_superposed ? script.bob_input_slots() : script.alice_input_slots();

    std::uint64_t base = 0;
    for (int i = 0; i < n; ++i)
        if ((fixed_input >> (n - 1 - i)) & 1u)
            base |= std::uint64_t{1} << layout->bitpos_of_slot(fixed[static_cast<std::size_t>(i)]);

    const double amp = 1.0 / std::sqrt(double(std::uint64_t{1} << n));
    std::vector<cplx> amps(layout->dimension(), cplx{0.0, 0.0});
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        std::uint64_t idx = base;
        for (int i = 0; i < n; ++i)
            if ((v >> (n - 1 - i)) & 1u)
                idx |= std::uint64_t{1}
                       << layout->bitpos_of_slot(superposed[static_cast<std::size_t>(i)]);
        amps[idx] = cplx{amp, 0.0};
    }

    QuantumRun run = run_quantum(script, PureState(layout, std::move(amps)));

    // Superdense decoding: the superposed side ends in H^{(x)n}|fixed>, so
    // local Hadamards turn it into a copy of the other player's input.
    PureState decoded = run.state;
    const auto coords = alice_superposed ? script.alice_input_coords() : script.bob_input_coords();
    for (int i = 0; i < n; ++i)
        decoded = apply_gate(decoded, Gate::H(coords[static_cast<std::size_t>(i)]));

    std::uint64_t target = base;
    for (int i = 0; i < n; ++i)
        if ((fixed_input >> (n - 1 - i)) & 1u)
            target |= std::uint64_t{1}
                      << layout->bitpos_of_slot(superposed[static_cast<std::size_t>(i)]);

    SuperdenseResult result;
    result.fidelity = std::norm(decoded.amplitude(target));
    result.pass = result.fidelity >= 1.0 - tolerance;
    return result;
}

}  // namespace cleancomm
