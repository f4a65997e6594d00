#include "cleancomm/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cleancomm {

using nlohmann::ordered_json;

namespace {

ordered_json script_to_json(const ProtocolScript& script) {
    ordered_json doc;
    doc["name"] = script.name;
    doc["n"] = script.n;
    doc["answer_mode"] = to_string(script.answer_mode);
    doc["registers"] = ordered_json::array();
    for (const auto& r : script.layout.registers()) {
        ordered_json reg;
        reg["name"] = r.name;
        reg["width"] = r.width;
        reg["kind"] = r.kind == RegKind::Qubit ? "qubit" : "bit";
        reg["owner"] = to_string(r.owner);
        doc["registers"].push_back(std::move(reg));
    }
    doc["steps"] = ordered_json::array();
    for (const auto& step : script.steps) {
        ordered_json item;
        if (const auto* local = std::get_if<LocalStep>(&step)) {
            item["op"] = "gate";
            item["party"] = to_string(local->party);
            item["gate"] = to_string(local->gate.kind);
            item["targets"] = ordered_json::array();
            for (const auto& t : local->gate.targets) item["targets"].push_back(t.str());
            if (local->gate.kind == GateKind::PHASE) item["theta"] = local->gate.theta;
        } else {
            const auto& send = std::get<SendStep>(step);
            item["op"] = "send";
            item["from"] = to_string(send.from);
            item["to"] = to_string(send.to);
            item["regs"] = send.regs;
        }
        doc["steps"].push_back(std::move(item));
    }
    return doc;
}

ProtocolScript script_from_json(const ordered_json& doc) {
    ProtocolScript script;
    script.name = doc.at("name").get<std::string>();
    script.n = doc.at("n").get<int>();
    if (script.n < 0) throw std::invalid_argument("script document: n must be nonnegative");
    script.answer_mode = answer_mode_from_string(doc.at("answer_mode").get<std::string>());

    std::vector<RegisterSpec> regs;
    for (const auto& reg : doc.at("registers")) {
        RegisterSpec spec;
        spec.name = reg.at("name").get<std::string>();
        spec.width = reg.at("width").get<int>();
        const std::string kind = reg.at("kind").get<std::string>();
        if (kind == "qubit")
            spec.kind = RegKind::Qubit;
        else if (kind == "bit")
            spec.kind = RegKind::Bit;
        else
            throw std::invalid_argument("script document: unknown register kind " + kind);
        spec.owner = party_from_string(reg.at("owner").get<std::string>());
        regs.push_back(std::move(spec));
    }
    script.layout = RegisterLayout(std::move(regs));

    for (const auto& item : doc.at("steps")) {
        const std::string op = item.at("op").get<std::string>();
        if (op == "gate") {
            LocalStep step;
            step.party = party_from_string(item.at("party").get<std::string>());
            step.gate.kind = gate_from_string(item.at("gate").get<std::string>());
            for (const auto& t : item.at("targets"))
                step.gate.targets.push_back(Coord::parse(t.get<std::string>()));
            if (step.gate.kind == GateKind::PHASE) step.gate.theta = item.at("theta").get<double>();
            script.steps.push_back(std::move(step));
        } else if (op == "send") {
            SendStep step;
            step.from = party_from_string(item.at("from").get<std::string>());
            step.to = party_from_string(item.at("to").get<std::string>());
            step.regs = item.at("regs").get<std::vector<std::string>>();
            script.steps.push_back(std::move(step));
        } else {
            throw std::invalid_argument("script document: unknown step op " + op);
        }
    }
    validate(script);
    return script;
}

}  // namespace

std::string serialize_script(const ProtocolScript& script) {
    return script_to_json(script).dump(2) + "\n";
}

ProtocolScript deserialize_script(const std::string& document) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed script document: ") + e.what());
    }
    try {
        return script_from_json(doc);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed script document: ") + e.what());
    }
}

std::string serialize_truth_table(const TruthTable& f) {
    ordered_json doc;
    doc["n"] = f.n();
    doc["rows"] = ordered_json::array();
    const std::uint64_t side = f.inputs_per_side();
    for (std::uint64_t x = 0; x < side; ++x) {
        std::string row(side, '0');
        for (std::uint64_t y = 0; y < side; ++y)
            if (f(x, y)) row[y] = '1';
        doc["rows"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

TruthTable deserialize_truth_table(const std::string& document) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed truth-table document: ") + e.what());
    }
    int n = 0;
    std::vector<std::string> rows;
    try {
        n = doc.at("n").get<int>();
        rows = doc.at("rows").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed truth-table document: ") + e.what());
    }
    if (n < 0 || n > 16) throw std::invalid_argument("truth-table document: n out of range");
    const std::uint64_t side = std::uint64_t{1} << n;
    if (rows.size() != side)
        throw std::invalid_argument("truth-table document: expected 2^n rows");
    std::vector<std::uint8_t> values(side * side);
    for (std::uint64_t x = 0; x < side; ++x) {
        if (rows[x].size() != side)
            throw std::invalid_argument("truth-table document: row length must be 2^n");
        for (std::uint64_t y = 0; y < side; ++y) {
            const char c = rows[x][y];
            if (c != '0' && c != '1')
                throw std::invalid_argument("truth-table document: rows must be 0/1 strings");
            values[(x << n) | y] = static_cast<std::uint8_t>(c == '1');
        }
    }
    return TruthTable(n, std::move(values));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace cleancomm
