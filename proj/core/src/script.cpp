#include "cleancomm/script.hpp"

#include <algorithm>

namespace cleancomm {

std::string to_string(AnswerMode m) {
    switch (m) {
        case AnswerMode::Register: return "register";
        case AnswerMode::Phase: return "phase";
        case AnswerMode::None: return "none";
    }
    return "?";
}

AnswerMode answer_mode_from_string(const std::string& s) {
    if (s == "register") return AnswerMode::Register;
    if (s == "phase") return AnswerMode::Phase;
    if (s == "none") return AnswerMode::None;
    throw std::invalid_argument("unknown answer mode: " + s);
}

namespace {

std::vector<int> input_slots(const ProtocolScript& script, Party party) {
    std::vector<int> out;
    for (const auto& r : script.layout.registers()) {
        if (r.owner != party || r.name == "ans") continue;
        for (int b = 1; b <= r.width && static_cast<int>(out.size()) < script.n; ++b)
            out.push_back(script.layout.slot(Coord{r.name, b}));
        if (static_cast<int>(out.size()) == script.n) break;
    }
    if (static_cast<int>(out.size()) != script.n)
        throw std::invalid_argument("script " + script.name + ": " + to_string(party) +
                                    " owns fewer than n input bits");
    return out;
}

std::vector<Coord> input_coords(const ProtocolScript& script, Party party) {
    std::vector<Coord> out;
    for (const auto& r : script.layout.registers()) {
        if (r.owner != party || r.name == "ans") continue;
        for (int b = 1; b <= r.width && static_cast<int>(out.size()) < script.n; ++b)
            out.push_back(Coord{r.name, b});
        if (static_cast<int>(out.size()) == script.n) break;
    }
    if (static_cast<int>(out.size()) != script.n)
        throw std::invalid_argument("script " + script.name + ": " + to_string(party) +
                                    " owns fewer than n input bits");
    return out;
}

}  // namespace

std::vector<int> ProtocolScript::alice_input_slots() const { return input_slots(*this, Party::Alice); }
std::vector<int> ProtocolScript::bob_input_slots() const { return input_slots(*this, Party::Bob); }
std::vector<Coord> ProtocolScript::alice_input_coords() const { return input_coords(*this, Party::Alice); }
std::vector<Coord> ProtocolScript::bob_input_coords() const { return input_coords(*this, Party::Bob); }

bool ProtocolScript::is_classical() const {
    return std::all_of(layout.registers().begin(), layout.registers().end(),
                       [](const RegisterSpec& r) { return r.kind == RegKind::Bit; });
}

void validate(const ProtocolScript& script) {
    if (script.layout.empty()) throw std::invalid_argument("script has no registers");
    std::map<std::string, Party> owner;
    for (const auto& r : script.layout.registers()) owner[r.name] = r.owner;

    int step_no = 0;
    for (const auto& step : script.steps) {
        ++step_no;
        if (const auto* local = std::get_if<LocalStep>(&step)) {
            if (local->party == Party::None)
                throw std::invalid_argument("step " + std::to_string(step_no) +
                                            ": gates need an acting party");
            const int arity = gate_arity(local->gate.kind);
            if (static_cast<int>(local->gate.targets.size()) != arity)
                throw std::invalid_argument("step " + std::to_string(step_no) + ": gate " +
                                            to_string(local->gate.kind) + " expects " +
                                            std::to_string(arity) + " targets");
            for (const auto& t : local->gate.targets) {
                script.layout.slot(t);  // validates the coordinate
                if (owner.at(t.reg) != local->party)
                    throw std::invalid_argument(
                        "step " + std::to_string(step_no) + ": locality violation, " +
                        to_string(local->party) + " does not own " + t.reg);
            }
            for (std::size_t i = 0; i < local->gate.targets.size(); ++i)
                for (std::size_t j = i + 1; j < local->gate.targets.size(); ++j)
                    if (local->gate.targets[i] == local->gate.targets[j])
                        throw std::invalid_argument("step " + std::to_string(step_no) +
                                                    ": duplicate gate target");
        } else {
            const auto& send = std::get<SendStep>(step);
            if (send.from == send.to || send.from == Party::None || send.to == Party::None)
                throw std::invalid_argument("step " + std::to_string(step_no) +
                                            ": send needs two distinct parties");
            if (send.regs.empty())
                throw std::invalid_argument("step " + std::to_string(step_no) +
                                            ": send transfers no registers");
            for (const auto& name : send.regs) {
                if (!script.layout.has_register(name))
                    throw std::invalid_argument("step " + std::to_string(step_no) +
                                                ": send of unknown register " + name);
                if (owner.at(name) != send.from)
                    throw std::invalid_argument("step " + std::to_string(step_no) + ": send of " +
                                                name + " not owned by " + to_string(send.from));
                owner[name] = send.to;
            }
        }
    }
}

std::map<std::string, Party> final_owners(const ProtocolScript& script) {
    std::map<std::string, Party> owner;
    for (const auto& r : script.layout.registers()) owner[r.name] = r.owner;
    for (const auto& step : script.steps)
        if (const auto* send = std::get_if<SendStep>(&step))
            for (const auto& name : send->regs) owner[name] = send->to;
    return owner;
}

CostReport cost(const ProtocolScript& script) {
    CostReport report;
    for (const auto& step : script.steps) {
        const auto* send = std::get_if<SendStep>(&step);
        if (!send) continue;
        ++report.rounds;
        for (const auto& name : send->regs) {
            const auto& r = script.layout.reg(name);
            if (send->to == Party::Bob) {
                (r.kind == RegKind::Qubit ? report.qubits_to_bob : report.bits_to_bob) += r.width;
            } else {
                (r.kind == RegKind::Qubit ? report.qubits_to_alice : report.bits_to_alice) +=
                    r.width;
            }
        }
    }
    return report;
}

std::vector<Step> inverted_steps(const std::vector<Step>& steps) {
    std::vector<Step> out;
    out.reserve(steps.size());
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (const auto* local = std::get_if<LocalStep>(&*it)) {
            out.push_back(LocalStep{local->party, local->gate.inverse()});
        } else {
            const auto& send = std::get<SendStep>(*it);
            out.push_back(SendStep{send.to, send.from, send.regs});
        }
    }
    return out;
}

}  // namespace cleancomm
