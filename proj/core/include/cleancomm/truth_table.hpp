#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cleancomm {

/// Boolean function of two n-bit inputs, stored as a flat table indexed by
/// x * 2^n + y with x and y read big-endian (x_1 is the most significant
/// bit of x).
class TruthTable {
  public:
    TruthTable(int n, std::vector<std::uint8_t> values);

    int n() const { return n_; }
    std::uint64_t inputs_per_side() const { return std::uint64_t{1} << n_; }
    std::uint8_t operator()(std::uint64_t x, std::uint64_t y) const {
        return values_[(x << n_) | y];
    }
    const std::vector<std::uint8_t>& values() const { return values_; }

    static TruthTable inner_product(int n);
    static TruthTable equality(int n);
    static TruthTable constant(int n, std::uint8_t value);
    static TruthTable random(int n, std::mt19937& rng);

  private:
    int n_;
    std::vector<std::uint8_t> values_;
};

/// IP_n(x,y) = sum_i x_i * y_i mod 2, on big-endian n-bit values.
inline std::uint8_t ip_value(std::uint64_t x, std::uint64_t y) {
    std::uint64_t v = x & y;
    v ^= v >> 32;
    v ^= v >> 16;
    v ^= v >> 8;
    v ^= v >> 4;
    v ^= v >> 2;
    v ^= v >> 1;
    return static_cast<std::uint8_t>(v & 1u);
}

std::string bits_to_string(std::uint64_t value, int width);
std::uint64_t bits_from_string(const std::string& s);

}  // namespace cleancomm
