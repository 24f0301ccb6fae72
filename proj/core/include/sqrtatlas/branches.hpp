#pragma once

#include <cstdint>

#include "sqrtatlas/spectral.hpp"

namespace sqrtatlas {

/// Index family selecting one branch of square roots: u_i positive-sqrt
/// multiplicities per positive cluster, mu_lt per complex modulus (shape
/// matches profile.complexGroups). v_i = h_i - u_i and nu_lt = m_lt - mu_lt
/// are derived.
struct BranchIndex {
  std::vector<int> u;
  std::vector<std::vector<int>> mu;

  bool operator==(const BranchIndex&) const = default;
};

struct SqrtBranch {
  BranchIndex index;
  Matrix rja;             // square root of the RJS form
  Matrix representative;  // Y with Y^2 = M
  int dimension = 0;
  double residual = 0.0;  // ||Y^2 - M||_F
};

/// Validate an index against a profile (throws IndexOutOfRange) and require
/// real-root existence (throws ExistenceViolated).
void validateIndex(const SpectralProfile& profile, const BranchIndex& index);

/// Assemble the canonical square root of the RJS form for one branch.
Matrix buildRja(const SpectralProfile& profile, const BranchIndex& index);

/// All branch indices, lexicographically descending so the generalized
/// principal branch comes first.
std::vector<BranchIndex> enumerateBranches(const SpectralProfile& profile);

/// Base point of a branch: Y = C rja C^{-1}.
SqrtBranch representative(const RjsDecomposition& dec, const BranchIndex& index,
                          const Tolerances& tol);

/// Random element of a branch: Y = C X rja X^{-1} C^{-1} with X drawn
/// block-wise from the centralizer of the RJS form.
Matrix sampleBranch(const RjsDecomposition& dec, const BranchIndex& index,
                    std::uint64_t seed, const Tolerances& tol);

/// Branch dimension 2 [ sum u_i (h_i - u_i) + 2 sum mu (m - mu) + sum k_i^2 ].
int dimensionOf(const SpectralProfile& profile, const BranchIndex& index);

/// Finiteness: all h_i = 1, all m_lt = 1, q = 0.
bool isFinite(const SpectralProfile& profile);

/// 2^{(p+n)/2} when finite; throws CountUndefined otherwise.
long countIfFinite(const SpectralProfile& profile);

/// The branch with u_i = h_i and mu_lt = m_lt.
BranchIndex principalBranchIndex(const SpectralProfile& profile);

/// Y^2 = M and every eigenvalue argument of Y in [-pi/2, pi/2] (with
/// clusterTol slack).
bool isGeneralizedPrincipal(const Matrix& m, const Matrix& y, const Tolerances& tol);

/// Fixed-point test of the map X -> M X^{-1}: true iff ||M Y^{-1} - Y|| is
/// within budget. Equivalent to Y^2 = M; used as an independent cross-check.
bool verifyFixedPoint(const Matrix& m, const Matrix& y, const Tolerances& tol);

}  // namespace sqrtatlas
