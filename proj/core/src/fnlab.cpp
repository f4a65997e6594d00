#include "cleancomm/fnlab.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "cleancomm/infocost.hpp"
#include "cleancomm/protocols.hpp"

namespace cleancomm {

CommMatrix::CommMatrix(const TruthTable& f) : n_(f.n()), entries_(f.values()) {}

CommMatrix::CommMatrix(int n, std::vector<std::uint8_t> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n < 0 || n > 16) throw std::invalid_argument("matrix n out of range");
    if (entries_.size() != (std::size_t{1} << (2 * n)))
        throw std::invalid_argument("matrix must be 2^n x 2^n");
    for (auto v : entries_)
        if (v > 1) throw std::invalid_argument("matrix entries must be 0 or 1");
}

bool CommMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](std::uint8_t v) { return v == 0; });
}

namespace {

/// Row-major bit rows, multiple 64-bit words per row.
struct BitMatrix {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> data;

    explicit BitMatrix(const CommMatrix& m)
        : rows(m.side()), cols(m.side()), words((m.side() + 63) / 64), data(rows * words, 0) {
        for (std::uint64_t x = 0; x < rows; ++x)
            for (std::uint64_t y = 0; y < cols; ++y)
                if (m.at(x, y)) set(x, y);
    }
    void set(std::uint64_t r, std::uint64_t c) {
        data[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
    }
    bool get(std::uint64_t r, std::uint64_t c) const {
        return (data[r * words + c / 64] >> (c % 64)) & 1u;
    }
    void xor_row(std::uint64_t dst, std::uint64_t src) {
        for (std::size_t w = 0; w < words; ++w) data[dst * words + w] ^= data[src * words + w];
    }
    bool row_empty(std::uint64_t r) const {
        for (std::size_t w = 0; w < words; ++w)
            if (data[r * words + w]) return false;
        return true;
    }
};

int rank_gf2(const CommMatrix& m) {
    BitMatrix bits(m);
    int rank = 0;
    std::uint64_t row = 0;
    for (std::uint64_t col = 0; col < bits.cols && row < bits.rows; ++col) {
        std::uint64_t pivot = row;
        while (pivot < bits.rows && !bits.get(pivot, col)) ++pivot;
        if (pivot == bits.rows) continue;
        if (pivot != row)
            for (std::size_t w = 0; w < bits.words; ++w)
                std::swap(bits.data[pivot * bits.words + w], bits.data[row * bits.words + w]);
        for (std::uint64_t r = 0; r < bits.rows; ++r)
            if (r != row && bits.get(r, col)) bits.xor_row(r, row);
        ++row;
        ++rank;
    }
    return rank;
}

int rank_real(const CommMatrix& m) {
    const std::uint64_t side = m.side();
    std::vector<std::vector<mpq_class>> a(side, std::vector<mpq_class>(side));
    for (std::uint64_t x = 0; x < side; ++x)
        for (std::uint64_t y = 0; y < side; ++y) a[x][y] = int(m.at(x, y));

    int rank = 0;
    std::uint64_t row = 0;
    for (std::uint64_t col = 0; col < side && row < side; ++col) {
        std::uint64_t pivot = row;
        while (pivot < side && a[pivot][col] == 0) ++pivot;
        if (pivot == side) continue;
        std::swap(a[pivot], a[row]);
        const mpq_class inv = 1 / a[row][col];
        for (std::uint64_t y = col; y < side; ++y) a[row][y] *= inv;
        for (std::uint64_t r = row + 1; r < side; ++r) {
            if (a[r][col] == 0) continue;
            const mpq_class factor = a[r][col];
            for (std::uint64_t y = col; y < side; ++y) a[r][y] -= factor * a[row][y];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

int rank(const CommMatrix& m, RankField field) {
    return field == RankField::Gf2 ? rank_gf2(m) : rank_real(m);
}

double log_rank_bound(const CommMatrix& m) {
    if (m.is_zero()) return 0.0;
    return std::log2(double(rank(m, RankField::Real))) + 1.0;
}

std::uint8_t Gf2Decomposition::evaluate(std::uint64_t x, std::uint64_t y) const {
    std::uint8_t v = 0;
    for (int i = 0; i < k; ++i)
        v ^= static_cast<std::uint8_t>(P[static_cast<std::size_t>(i)][x] &
                                       Q[static_cast<std::size_t>(i)][y]);
    return v;
}

Gf2Decomposition gf2_decompose(const CommMatrix& m) {
    const std::uint64_t side = m.side();
    std::vector<std::uint8_t> residual = m.entries();
    auto at = [&](std::uint64_t x, std::uint64_t y) -> std::uint8_t& {
        return residual[(x << m.n()) | y];
    };

    Gf2Decomposition d;
    d.n = m.n();
    // Rank-one peeling with the lowest-index pivot: each round removes the
    // pivot's row and column pattern, dropping the GF(2) rank by one.
    while (true) {
        std::uint64_t pr = side, pc = side;
        for (std::uint64_t x = 0; x < side && pr == side; ++x)
            for (std::uint64_t y = 0; y < side; ++y)
                if (at(x, y)) {
                    pr = x;
                    pc = y;
                    break;
                }
        if (pr == side) break;
        std::vector<std::uint8_t> p(side), q(side);
        for (std::uint64_t x = 0; x < side; ++x) p[x] = at(x, pc);
        for (std::uint64_t y = 0; y < side; ++y) q[y] = at(pr, y);
        for (std::uint64_t x = 0; x < side; ++x) {
            if (!p[x]) continue;
            for (std::uint64_t y = 0; y < side; ++y) at(x, y) ^= q[y];
        }
        d.P.push_back(std::move(p));
        d.Q.push_back(std::move(q));
    }
    d.k = static_cast<int>(d.P.size());
    return d;
}

std::vector<std::uint64_t> anf_monomials(const std::vector<std::uint8_t>& truth, int n) {
    if (truth.size() != (std::size_t{1} << n))
        throw std::invalid_argument("truth vector length must be 2^n");
    std::vector<std::uint8_t> a = truth;
    // Moebius transform over GF(2).
    for (int b = 0; b < n; ++b) {
        const std::uint64_t bit = std::uint64_t{1} << b;
        for (std::uint64_t i = 0; i < a.size(); ++i)
            if (i & bit) a[i] ^= a[i ^ bit];
    }
    std::vector<std::uint64_t> monomials;
    for (std::uint64_t mask = 0; mask < a.size(); ++mask)
        if (a[mask]) monomials.push_back(mask);
    return monomials;
}

namespace {

/// Emits a reversible XOR of one ANF monomial into `target`, using a
/// Toffoli chain through `scratch` for monomials with three or more
/// variables. The scratch bits start and end at zero.
void emit_monomial(std::vector<Step>& steps, Party party, std::uint64_t mask, int n,
                   const std::string& input_prefix, const std::string& scratch_prefix,
                   const Coord& target) {
    std::vector<Coord> vars;
    for (int i = 1; i <= n; ++i)
        if ((mask >> (n - i)) & 1u) vars.push_back(Coord{input_prefix + std::to_string(i), 1});

    auto push = [&](Gate g) { steps.push_back(LocalStep{party, std::move(g)}); };
    if (vars.empty()) {
        push(Gate::X(target));
        return;
    }
    if (vars.size() == 1) {
        push(Gate::CNOT(vars[0], target));
        return;
    }
    if (vars.size() == 2) {
        push(Gate::TOFFOLI(vars[0], vars[1], target));
        return;
    }
    std::vector<Step> chain;
    auto chain_push = [&](Gate g) { chain.push_back(LocalStep{party, std::move(g)}); };
    Coord prev{scratch_prefix + "1", 1};
    chain_push(Gate::TOFFOLI(vars[0], vars[1], prev));
    for (std::size_t i = 2; i + 1 < vars.size(); ++i) {
        Coord next{scratch_prefix + std::to_string(i), 1};
        chain_push(Gate::TOFFOLI(prev, vars[i], next));
        prev = next;
    }
    for (const auto& step : chain) steps.push_back(step);
    steps.push_back(LocalStep{party, Gate::TOFFOLI(prev, vars.back(), target)});
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) steps.push_back(*it);
}

}  // namespace

CompiledProtocol compile_clean(const Gf2Decomposition& decomp, CompileMode mode) {
    const int n = decomp.n;
    const int k = decomp.k;
    const RegKind kind = mode == CompileMode::Quantum ? RegKind::Qubit : RegKind::Bit;

    CompiledProtocol out;
    out.n = n;
    out.k = k;
    out.mode = mode;
    out.quantum_threshold = k < 2 * n - 3;
    out.classical_threshold = double(k) < 2.0 * n - 4.0 * std::sqrt(2.0 * n) + 4.0;

    ProtocolScript& s = out.script;
    s.name = std::string("compiled-") + (mode == CompileMode::Quantum ? "quantum" : "classical");
    s.n = n;
    s.answer_mode = AnswerMode::Register;

    // ANF of every coordinate function, and the scratch depth the longest
    // monomial chain needs on each side.
    std::vector<std::vector<std::uint64_t>> p_monomials, q_monomials;
    std::size_t max_vars = 0;
    for (int i = 0; i < k; ++i) {
        p_monomials.push_back(anf_monomials(decomp.P[static_cast<std::size_t>(i)], n));
        q_monomials.push_back(anf_monomials(decomp.Q[static_cast<std::size_t>(i)], n));
        for (const auto& group : {p_monomials.back(), q_monomials.back()})
            for (std::uint64_t mask : group)
                max_vars = std::max(max_vars,
                                    static_cast<std::size_t>(__builtin_popcountll(mask)));
    }
    const int chain_depth = max_vars >= 3 ? static_cast<int>(max_vars) - 2 : 0;

    std::vector<RegisterSpec> regs;
    for (int i = 1; i <= n; ++i) regs.push_back({"A" + std::to_string(i), 1, kind, Party::Alice});
    for (int i = 1; i <= n; ++i) regs.push_back({"B" + std::to_string(i), 1, kind, Party::Bob});
    for (int i = 1; i <= k; ++i) regs.push_back({"P" + std::to_string(i), 1, kind, Party::Alice});
    for (int i = 1; i <= k; ++i) regs.push_back({"Q" + std::to_string(i), 1, kind, Party::Bob});
    regs.push_back({"ans", 1, kind, Party::Bob});
    for (int i = 1; i <= chain_depth; ++i)
        regs.push_back({"S" + std::to_string(i), 1, kind, Party::Alice});
    for (int i = 1; i <= chain_depth; ++i)
        regs.push_back({"T" + std::to_string(i), 1, kind, Party::Bob});
    s.layout = RegisterLayout(std::move(regs));

    if (k == 0) {
        // Constant-zero decomposition: the clean protocol is empty.
        out.cost = cost(s);
        validate(s);
        return out;
    }

    std::vector<Step> compute;
    for (int i = 0; i < k; ++i) {
        const Coord p_target{"P" + std::to_string(i + 1), 1};
        const Coord q_target{"Q" + std::to_string(i + 1), 1};
        for (std::uint64_t mask : p_monomials[static_cast<std::size_t>(i)])
            emit_monomial(compute, Party::Alice, mask, n, "A", "S", p_target);
        for (std::uint64_t mask : q_monomials[static_cast<std::size_t>(i)])
            emit_monomial(compute, Party::Bob, mask, n, "B", "T", q_target);
    }

    // Inner clean IP_k protocol, retargeted from its own A/B registers onto
    // the scratch coordinates.
    ProtocolScript inner = mode == CompileMode::Quantum ? build_clean_quantum_ip(k)
                                                        : build_classical_ip(k);
    auto remap_name = [&](const std::string& name) -> std::string {
        if (name == "ans") return "ans";
        if (name[0] == 'A') return "P" + name.substr(1);
        if (name[0] == 'B') return "Q" + name.substr(1);
        throw std::logic_error("unexpected register in inner protocol: " + name);
    };
    std::vector<Step> inner_steps;
    for (Step step : inner.steps) {
        if (auto* local = std::get_if<LocalStep>(&step)) {
            for (auto& t : local->gate.targets) t.reg = remap_name(t.reg);
        } else {
            for (auto& reg : std::get<SendStep>(step).regs) reg = remap_name(reg);
        }
        inner_steps.push_back(std::move(step));
    }

    for (const auto& step : compute) s.steps.push_back(step);
    for (const auto& step : inner_steps) s.steps.push_back(step);
    for (const auto& step : inverted_steps(compute)) s.steps.push_back(step);

    validate(s);
    out.cost = cost(s);
    return out;
}

RectanglePartition extract_rectangles(const ProtocolScript& script, const TruthTable& f) {
    if (f.n() != script.n)
        throw std::invalid_argument("truth table arity does not match the script");
    const TranscriptTable table = enumerate_transcripts(script);
    const std::uint64_t side = std::uint64_t{1} << script.n;

    std::map<std::string, std::pair<std::set<std::uint64_t>, std::set<std::uint64_t>>> groups;
    std::map<std::string, std::uint64_t> group_sizes;
    for (std::uint64_t x = 0; x < side; ++x)
        for (std::uint64_t y = 0; y < side; ++y) {
            const std::string key =
                table.to_alice[(x << script.n) | y] + "/" + table.to_bob[(x << script.n) | y];
            groups[key].first.insert(x);
            groups[key].second.insert(y);
            ++group_sizes[key];
        }

    RectanglePartition out;
    for (const auto& [key, sets] : groups) {
        StripedRectangle rect;
        rect.transcript = key;
        rect.xs.assign(sets.first.begin(), sets.first.end());
        rect.ys.assign(sets.second.begin(), sets.second.end());
        out.covered_pairs += group_sizes[key];

        if (group_sizes[key] != rect.xs.size() * rect.ys.size())
            out.violations.push_back("transcript " + key + " is not a combinatorial rectangle");

        for (std::uint64_t y : rect.ys) {
            const std::uint8_t v = f(rect.xs.front(), y);
            for (std::uint64_t x : rect.xs)
                if (f(x, y) != v) {
                    out.violations.push_back("transcript " + key + " is not striped at y=" +
                                             bits_to_string(y, script.n));
                    break;
                }
            rect.stripe.push_back(v);
        }
        out.rectangles.push_back(std::move(rect));
    }
    out.pass = out.violations.empty() && out.covered_pairs == side * side;
    return out;
}

}  // namespace cleancomm
