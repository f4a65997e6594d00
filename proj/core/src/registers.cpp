#include "cleancomm/registers.hpp"

#include <algorithm>

namespace cleancomm {

std::string to_string(Party p) {
    switch (p) {
        case Party::Alice: return "A";
        case Party::Bob: return "B";
        case Party::None: return "none";
    }
    return "?";
}

Party party_from_string(const std::string& s) {
    if (s == "A" || s == "Alice" || s == "alice") return Party::Alice;
    if (s == "B" || s == "Bob" || s == "bob") return Party::Bob;
    if (s == "none") return Party::None;
    throw std::invalid_argument("unknown party: " + s);
}

Coord Coord::parse(const std::string& s) {
    auto dot = s.rfind('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 >= s.size())
        throw std::invalid_argument("bad coordinate (want REG.bit): " + s);
    Coord c;
    c.reg = s.substr(0, dot);
    try {
        c.bit = std::stoi(s.substr(dot + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad coordinate bit index: " + s);
    }
    if (c.bit < 1) throw std::invalid_argument("coordinate bit index must be >= 1: " + s);
    return c;
}

RegisterLayout::RegisterLayout(std::vector<RegisterSpec> regs) : regs_(std::move(regs)) {
    offsets_.reserve(regs_.size());
    for (const auto& r : regs_) {
        if (r.name.empty()) throw std::invalid_argument("register with empty name");
        if (r.width < 1) throw std::invalid_argument("register " + r.name + " has width < 1");
        for (const auto& other : regs_)
            if (&other != &r && other.name == r.name)
                throw std::invalid_argument("duplicate register name: " + r.name);
        if (r.name == "ans") {
            if (r.width != 1) throw std::invalid_argument("answer register must have width 1");
            if (r.owner != Party::Bob)
                throw std::invalid_argument("answer register must start with Bob");
        }
        offsets_.push_back(total_width_);
        total_width_ += r.width;
    }
    if (total_width_ > 62)
        throw std::invalid_argument("layout too wide: " + std::to_string(total_width_) + " bits");
}

int RegisterLayout::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < regs_.size(); ++i)
        if (regs_[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown register: " + name);
}

bool RegisterLayout::has_register(const std::string& name) const {
    return std::any_of(regs_.begin(), regs_.end(),
                       [&](const RegisterSpec& r) { return r.name == name; });
}

const RegisterSpec& RegisterLayout::reg(const std::string& name) const {
    return regs_[static_cast<std::size_t>(index_of(name))];
}

int RegisterLayout::slot_offset(const std::string& name) const {
    return offsets_[static_cast<std::size_t>(index_of(name))];
}

int RegisterLayout::slot(const Coord& c) const {
    int i = index_of(c.reg);
    const auto& r = regs_[static_cast<std::size_t>(i)];
    if (c.bit < 1 || c.bit > r.width)
        throw std::invalid_argument("coordinate " + c.str() + " out of range (width " +
                                    std::to_string(r.width) + ")");
    return offsets_[static_cast<std::size_t>(i)] + c.bit - 1;
}

std::vector<int> RegisterLayout::slots(const std::string& name) const {
    int i = index_of(name);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(regs_[static_cast<std::size_t>(i)].width));
    for (int b = 0; b < regs_[static_cast<std::size_t>(i)].width; ++b)
        out.push_back(offsets_[static_cast<std::size_t>(i)] + b);
    return out;
}

std::vector<int> RegisterLayout::slots(const std::vector<std::string>& names) const {
    std::vector<int> out;
    for (const auto& n : names) {
        auto s = slots(n);
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

bool operator==(const RegisterLayout& a, const RegisterLayout& b) {
    if (a.regs_.size() != b.regs_.size()) return false;
    for (std::size_t i = 0; i < a.regs_.size(); ++i) {
        const auto& x = a.regs_[i];
        const auto& y = b.regs_[i];
        if (x.name != y.name || x.width != y.width || x.kind != y.kind || x.owner != y.owner)
            return false;
    }
    return true;
}

}  // namespace cleancomm
