#pragma once

#include <cstdint>

#include "sqrtatlas/branches.hpp"

namespace sqrtatlas {

/// One branch of symmetric square roots of an SPD matrix.
struct SsrBranch {
  std::vector<int> u;     // u_1 .. u_p
  Matrix rja;
  Matrix representative;  // symmetric, Y^2 = M
  int dimension = 0;      // sum u_i (h_i - u_i)
  int signatureU = 0;     // count of positive eigenvalues of Y
  double residual = 0.0;
};

/// Require M symmetric positive definite with an orthogonal conjugator;
/// throws NotSpd otherwise.
void requireSpd(const RjsDecomposition& dec, const Tolerances& tol);

/// One branch per tuple (u_1 .. u_p), descending (principal first).
std::vector<SsrBranch> enumerateSsrBranches(const RjsDecomposition& dec,
                                            const Tolerances& tol);

/// Random symmetric root in a branch: Y = Q X rja X^T Q^T with X drawn
/// block-wise from the orthogonal groups O_{h_i}.
Matrix sampleSsrBranch(const RjsDecomposition& dec, const std::vector<int>& u,
                       std::uint64_t seed, const Tolerances& tol);

/// The u_i = h_i branch point (the SPD root M^{1/2}).
Matrix principalSpdSqrt(const RjsDecomposition& dec, const Tolerances& tol);
/// The u_i = 0 branch point (-M^{1/2}).
Matrix negativeSpdSqrt(const RjsDecomposition& dec, const Tolerances& tol);

/// Number of connected components of the symmetric square-root set:
/// prod (h_i + 1), one per branch.
long ssrComponentCount(const SpectralProfile& profile);

}  // namespace sqrtatlas
