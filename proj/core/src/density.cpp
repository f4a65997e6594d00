#include "cleancomm/density.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace cleancomm {

namespace {

constexpr double kEigClamp = 1e-12;
constexpr double kEigFloor = -1e-10;
constexpr double kHermTol = 1e-10;

/// Gathers the listed bit positions out of a basis index, first position
/// most significant.
std::uint64_t gather_bits(std::uint64_t index, const std::vector<int>& bitpos) {
    std::uint64_t out = 0;
    for (int p : bitpos) out = (out << 1) | ((index >> p) & 1u);
    return out;
}

/// Scatters a compact value back onto the listed bit positions.
std::uint64_t scatter_bits(std::uint64_t value, const std::vector<int>& bitpos) {
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < bitpos.size(); ++j)
        out |= ((value >> (bitpos.size() - 1 - j)) & 1u) << bitpos[j];
    return out;
}

std::vector<int> bit_positions(const RegisterLayout& layout, const std::vector<int>& slots) {
    std::vector<int> pos;
    pos.reserve(slots.size());
    for (int s : slots) pos.push_back(layout.bitpos_of_slot(s));
    return pos;
}

double entropy_of_eigenvalues(const Eigen::VectorXd& evals) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
        const double p = evals[i];
        if (p < kEigFloor)
            throw std::runtime_error("density matrix has eigenvalue " + std::to_string(p) +
                                     " below tolerance");
        if (p <= kEigClamp) continue;
        h -= p * std::log2(p);
    }
    return h;
}

/// Reduced density matrix on the given slots, via the reshape-and-Gram
/// route: rho = M M^dagger with M the amplitude vector viewed as a
/// (subset x environment) matrix.
Eigen::MatrixXcd reduce_to_slots(const PureState& state, const std::vector<int>& keep) {
    const auto& layout = state.layout();
    const int m = layout.total_width();
    std::set<int> keep_set(keep.begin(), keep.end());
    if (keep_set.size() != keep.size()) throw std::invalid_argument("repeated slot in subset");
    std::vector<int> env;
    for (int s = 0; s < m; ++s)
        if (!keep_set.count(s)) env.push_back(s);

    const auto kp = bit_positions(layout, keep);
    const auto ep = bit_positions(layout, env);
    const std::size_t kdim = std::size_t{1} << keep.size();
    const std::size_t edim = std::size_t{1} << env.size();

    Eigen::MatrixXcd M(static_cast<Eigen::Index>(kdim), static_cast<Eigen::Index>(edim));
    const auto& amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const auto r = static_cast<Eigen::Index>(gather_bits(i, kp));
        const auto c = static_cast<Eigen::Index>(gather_bits(i, ep));
        M(r, c) = amps[i];
    }
    return M * M.adjoint();
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd mat, std::vector<SubsystemSpec> subsystem)
    : mat_(std::move(mat)), subsystem_(std::move(subsystem)) {
    if (mat_.rows() != mat_.cols()) throw std::invalid_argument("density matrix must be square");
    int width = 0;
    for (const auto& s : subsystem_) width += s.width;
    if (mat_.rows() != Eigen::Index{1} << width)
        throw std::invalid_argument("density matrix dimension does not match subsystem widths");
}

double DensityMatrix::hermiticity_defect() const {
    if (mat_.rows() == 0) return 0.0;
    return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
}

void DensityMatrix::validate() const {
    if (hermiticity_defect() > kHermTol)
        throw std::runtime_error("density matrix is not Hermitian within tolerance");
    if (std::abs(trace_real() - 1.0) > kHermTol || std::abs(mat_.trace().imag()) > kHermTol)
        throw std::runtime_error("density matrix trace differs from 1 beyond tolerance");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < kEigFloor)
        throw std::runtime_error("density matrix has a negative eigenvalue beyond tolerance");
}

DensityMatrix partial_trace(const PureState& state, const std::vector<std::string>& keep) {
    // Keep registers in layout order so the result's index order is fixed.
    std::vector<SubsystemSpec> ordered;
    for (const auto& r : state.layout().registers())
        if (std::find(keep.begin(), keep.end(), r.name) != keep.end())
            ordered.push_back({r.name, r.width});
    if (ordered.size() != keep.size()) {
        for (const auto& n : keep)
            if (!state.layout().has_register(n))
                throw std::invalid_argument("unknown register: " + n);
        throw std::invalid_argument("repeated register in keep set");
    }
    std::vector<std::string> names;
    for (const auto& s : ordered) names.push_back(s.name);
    return DensityMatrix(reduce_to_slots(state, state.layout().slots(names)), std::move(ordered));
}

DensityMatrix partial_trace(const DensityMatrix& dm, const std::vector<std::string>& keep) {
    const int total = static_cast<int>(std::llround(std::log2(double(dm.dimension()))));
    // Slot ranges of each subsystem inside this matrix's own index order.
    std::vector<int> keep_slots, env_slots;
    std::vector<SubsystemSpec> ordered;
    int offset = 0;
    std::set<std::string> keep_set(keep.begin(), keep.end());
    for (const auto& sub : dm.subsystem()) {
        const bool kept = keep_set.count(sub.name) > 0;
        for (int b = 0; b < sub.width; ++b)
            (kept ? keep_slots : env_slots).push_back(offset + b);
        if (kept) {
            ordered.push_back(sub);
            keep_set.erase(sub.name);
        }
        offset += sub.width;
    }
    if (!keep_set.empty())
        throw std::invalid_argument("unknown register: " + *keep_set.begin());

    auto to_bitpos = [total](const std::vector<int>& slots) {
        std::vector<int> pos;
        for (int s : slots) pos.push_back(total - 1 - s);
        return pos;
    };
    const auto kp = to_bitpos(keep_slots);
    const auto ep = to_bitpos(env_slots);
    const std::size_t kdim = std::size_t{1} << kp.size();
    const std::size_t edim = std::size_t{1} << ep.size();

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(kdim),
                                                  static_cast<Eigen::Index>(kdim));
    for (std::uint64_t a = 0; a < kdim; ++a) {
        const std::uint64_t abits = scatter_bits(a, kp);
        for (std::uint64_t b = 0; b < kdim; ++b) {
            const std::uint64_t bbits = scatter_bits(b, kp);
            cplx s{0.0, 0.0};
            for (std::uint64_t e = 0; e < edim; ++e) {
                const std::uint64_t ebits = scatter_bits(e, ep);
                s += dm.matrix()(static_cast<Eigen::Index>(abits | ebits),
                                 static_cast<Eigen::Index>(bbits | ebits));
            }
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = s;
        }
    }
    return DensityMatrix(std::move(out), std::move(ordered));
}

double entropy(const DensityMatrix& dm) {
    if (dm.hermiticity_defect() > kHermTol)
        throw std::runtime_error("entropy: non-Hermitian input beyond tolerance");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dm.matrix(), Eigen::EigenvaluesOnly);
    return entropy_of_eigenvalues(es.eigenvalues());
}

double subset_entropy(const PureState& state, const std::vector<int>& slots) {
    const int m = state.layout().total_width();
    std::set<int> subset(slots.begin(), slots.end());
    if (subset.size() != slots.size()) throw std::invalid_argument("repeated slot in subset");
    for (int s : slots)
        if (s < 0 || s >= m) throw std::invalid_argument("slot out of range");
    // For a pure global state both sides of a cut have equal spectra.
    std::vector<int> side(subset.begin(), subset.end());
    if (side.size() * 2 > static_cast<std::size_t>(m)) {
        std::vector<int> comp;
        for (int s = 0; s < m; ++s)
            if (!subset.count(s)) comp.push_back(s);
        side = std::move(comp);
    }
    if (side.empty()) return 0.0;
    Eigen::MatrixXcd rho = reduce_to_slots(state, side);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    return entropy_of_eigenvalues(es.eigenvalues());
}

double cmi_slots(const PureState& state, const std::vector<int>& a, const std::vector<int>& b,
                 const std::vector<int>& c) {
    std::set<int> seen;
    for (const auto* grp : {&a, &b, &c})
        for (int s : *grp)
            if (!seen.insert(s).second)
                throw std::invalid_argument("conditional mutual information: overlapping subsets");
    auto join = [](const std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> out(x);
        out.insert(out.end(), y.begin(), y.end());
        return out;
    };
    const double s_ac = subset_entropy(state, join(a, c));
    const double s_bc = subset_entropy(state, join(b, c));
    const double s_c = subset_entropy(state, c);
    const double s_abc = subset_entropy(state, join(join(a, b), c));
    return s_ac + s_bc - s_c - s_abc;
}

double conditional_mutual_information(const PureState& state, const std::vector<std::string>& a,
                                      const std::vector<std::string>& b,
                                      const std::vector<std::string>& c) {
    const auto& layout = state.layout();
    return cmi_slots(state, layout.slots(a), layout.slots(b), layout.slots(c));
}

}  // namespace cleancomm
