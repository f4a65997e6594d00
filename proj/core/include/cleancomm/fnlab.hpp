#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cleancomm/script.hpp"
#include "cleancomm/truth_table.hpp"

namespace cleancomm {

/// Communication matrix M[x][y] = f(x,y), 2^n x 2^n over {0,1}, row index
/// x and column index y read big-endian.
class CommMatrix {
  public:
    explicit CommMatrix(const TruthTable& f);
    CommMatrix(int n, std::vector<std::uint8_t> entries);

    int n() const { return n_; }
    std::uint64_t side() const { return std::uint64_t{1} << n_; }
    std::uint8_t at(std::uint64_t x, std::uint64_t y) const { return entries_[(x << n_) | y]; }
    const std::vector<std::uint8_t>& entries() const { return entries_; }
    bool is_zero() const;

  private:
    int n_;
    std::vector<std::uint8_t> entries_;
};

enum class RankField { Real, Gf2 };

/// Exact rank; rational Gaussian elimination over Q, bit elimination over
/// GF(2).
int rank(const CommMatrix& m, RankField field);

/// log2(rank over the reals) + 1; 0 for the zero matrix.
double log_rank_bound(const CommMatrix& m);

/// f(x,y) = sum_i P_i(x) * Q_i(y) mod 2 with k = rank_GF2(M^f) terms.
/// P[i] and Q[i] are 2^n-entry truth vectors indexed big-endian.
struct Gf2Decomposition {
    int n = 0;
    int k = 0;
    std::vector<std::vector<std::uint8_t>> P;
    std::vector<std::vector<std::uint8_t>> Q;

    std::uint8_t evaluate(std::uint64_t x, std::uint64_t y) const;
};

Gf2Decomposition gf2_decompose(const CommMatrix& m);

/// Algebraic normal form of a 2^n-entry truth vector: the list of monomial
/// masks with nonzero coefficient (bit 2^(n-i) of a mask selects x_i).
std::vector<std::uint64_t> anf_monomials(const std::vector<std::uint8_t>& truth, int n);

enum class CompileMode { Quantum, Classical };

/// Clean protocol for f compiled from a GF(2) decomposition: each player
/// reversibly computes their k coordinate functions into local scratch,
/// the clean IP_k protocol runs on the scratch, and the scratch is
/// uncomputed. Communication equals the IP_k builder's cost.
struct CompiledProtocol {
    ProtocolScript script;
    int n = 0;
    int k = 0;
    CompileMode mode = CompileMode::Quantum;
    CostReport cost;
    bool quantum_threshold = false;    // k < 2n - 3
    bool classical_threshold = false;  // k < 2n - 4*sqrt(2n) + 4
};

CompiledProtocol compile_clean(const Gf2Decomposition& decomp, CompileMode mode);

/// Transcript-induced partition of the input grid. Each part must be a
/// combinatorial rectangle on which f depends only on y (a
/// monochromatically striped rectangle); any violation is reported.
struct StripedRectangle {
    std::string transcript;
    std::vector<std::uint64_t> xs;
    std::vector<std::uint64_t> ys;
    std::vector<std::uint8_t> stripe;  // g(y) per listed y
};

struct RectanglePartition {
    std::vector<StripedRectangle> rectangles;
    std::vector<std::string> violations;
    std::uint64_t covered_pairs = 0;
    bool pass = false;
};

RectanglePartition extract_rectangles(const ProtocolScript& script, const TruthTable& f);

}  // namespace cleancomm
