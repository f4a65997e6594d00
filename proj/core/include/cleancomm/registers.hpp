#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cleancomm {

enum class Party { Alice, Bob, None };

enum class RegKind { Qubit, Bit };

std::string to_string(Party p);
Party party_from_string(const std::string& s);

/// One named register: a contiguous block of qubits or classical bits
/// belonging to one party (or to nobody, for purification registers).
struct RegisterSpec {
    std::string name;
    int width = 1;
    RegKind kind = RegKind::Qubit;
    Party owner = Party::Alice;
};

/// A register-bit coordinate "REG.i" with 1-based bit index.
/// Bit 1 is the most significant bit of its register.
struct Coord {
    std::string reg;
    int bit = 1;

    std::string str() const { return reg + "." + std::to_string(bit); }
    static Coord parse(const std::string& s);
    friend bool operator==(const Coord& a, const Coord& b) {
        return a.reg == b.reg && a.bit == b.bit;
    }
};

/// Ordered collection of registers fixing the global basis-index order:
/// registers appear in declaration order and the first declared bit is the
/// most significant bit of the joint index.
class RegisterLayout {
  public:
    RegisterLayout() = default;
    explicit RegisterLayout(std::vector<RegisterSpec> regs);

    const std::vector<RegisterSpec>& registers() const { return regs_; }
    int total_width() const { return total_width_; }
    std::size_t dimension() const { return std::size_t{1} << total_width_; }
    bool empty() const { return regs_.empty(); }

    bool has_register(const std::string& name) const;
    const RegisterSpec& reg(const std::string& name) const;

    /// Slot of a register's first bit, counted from the most significant end.
    int slot_offset(const std::string& name) const;
    /// Slot of a coordinate (0-based from the MSB of the joint index).
    int slot(const Coord& c) const;
    /// All slots of one register, MSB first.
    std::vector<int> slots(const std::string& name) const;
    std::vector<int> slots(const std::vector<std::string>& names) const;

    /// Mask with the bit of the given coordinate set (bit position counted
    /// from the LSB of the joint index, ready for kernel use).
    std::uint64_t mask(const Coord& c) const { return std::uint64_t{1} << bitpos(c); }
    int bitpos(const Coord& c) const { return total_width_ - 1 - slot(c); }
    int bitpos_of_slot(int s) const { return total_width_ - 1 - s; }

    friend bool operator==(const RegisterLayout& a, const RegisterLayout& b);

  private:
    std::vector<RegisterSpec> regs_;
    std::vector<int> offsets_;
    int total_width_ = 0;

    int index_of(const std::string& name) const;
};

}  // namespace cleancomm
