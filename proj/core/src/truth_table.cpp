#include "cleancomm/truth_table.hpp"

#include <stdexcept>

namespace cleancomm {

TruthTable::TruthTable(int n, std::vector<std::uint8_t> values)
    : n_(n), values_(std::move(values)) {
    if (n < 0 || n > 16) throw std::invalid_argument("truth table n out of range");
    if (values_.size() != (std::size_t{1} << (2 * n)))
        throw std::invalid_argument("truth table length must be 2^(2n)");
    for (auto v : values_)
        if (v > 1) throw std::invalid_argument("truth table entries must be 0 or 1");
}

TruthTable TruthTable::inner_product(int n) {
    const std::uint64_t side = std::uint64_t{1} << n;
    std::vector<std::uint8_t> vals(side * side);
    for (std::uint64_t x = 0; x < side; ++x)
        for (std::uint64_t y = 0; y < side; ++y) vals[(x << n) | y] = ip_value(x, y);
    return TruthTable(n, std::move(vals));
}

TruthTable TruthTable::equality(int n) {
    const std::uint64_t side = std::uint64_t{1} << n;
    std::vector<std::uint8_t> vals(side * side, 0);
    for (std::uint64_t x = 0; x < side; ++x) vals[(x << n) | x] = 1;
    return TruthTable(n, std::move(vals));
}

TruthTable TruthTable::constant(int n, std::uint8_t value) {
    const std::uint64_t side = std::uint64_t{1} << n;
    return TruthTable(n, std::vector<std::uint8_t>(side * side, value));
}

TruthTable TruthTable::random(int n, std::mt19937& rng) {
    const std::uint64_t side = std::uint64_t{1} << n;
    std::vector<std::uint8_t> vals(side * side);
    for (auto& v : vals) v = static_cast<std::uint8_t>(rng() & 1u);
    return TruthTable(n, std::move(vals));
}

std::string bits_to_string(std::uint64_t value, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i)
        if ((value >> (width - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

std::uint64_t bits_from_string(const std::string& s) {
    std::uint64_t v = 0;
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("bit string must be 0s and 1s: " + s);
        v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return v;
}

}  // namespace cleancomm
