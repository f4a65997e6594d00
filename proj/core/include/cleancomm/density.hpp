#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cleancomm/state.hpp"

namespace cleancomm {

/// A named subsystem block of a density matrix.
struct SubsystemSpec {
    std::string name;
    int width = 1;
};

/// Reduced density matrix over a named register subset, kept in the
/// layout's slot order.
class DensityMatrix {
  public:
    DensityMatrix(Eigen::MatrixXcd mat, std::vector<SubsystemSpec> subsystem);

    const Eigen::MatrixXcd& matrix() const { return mat_; }
    const std::vector<SubsystemSpec>& subsystem() const { return subsystem_; }
    std::size_t dimension() const { return static_cast<std::size_t>(mat_.rows()); }

    double trace_real() const { return mat_.trace().real(); }
    double hermiticity_defect() const;

    /// Hermitian within 1e-10, trace 1 within 1e-10, eigenvalues >= -1e-10.
    void validate() const;

  private:
    Eigen::MatrixXcd mat_;
    std::vector<SubsystemSpec> subsystem_;
};

DensityMatrix partial_trace(const PureState& state, const std::vector<std::string>& keep);
DensityMatrix partial_trace(const DensityMatrix& dm, const std::vector<std::string>& keep);

/// Von Neumann entropy in bits. Eigenvalues within [-1e-12, 1e-12] of zero
/// contribute nothing; anything below -1e-10 is rejected.
double entropy(const DensityMatrix& dm);

/// Entropy of the reduced state on `slots`, computed from the pure global
/// state via whichever of the subset and its complement is smaller.
double subset_entropy(const PureState& state, const std::vector<int>& slots);

/// Quantum conditional mutual information I(A:B|C) in bits; `c` may be
/// empty, giving the plain mutual information. Subsets must be disjoint.
double conditional_mutual_information(const PureState& state, const std::vector<std::string>& a,
                                      const std::vector<std::string>& b,
                                      const std::vector<std::string>& c);

/// Slot-level variant used by the information-cost machinery.
double cmi_slots(const PureState& state, const std::vector<int>& a, const std::vector<int>& b,
                 const std::vector<int>& c);

}  // namespace cleancomm
