#pragma once

#include "sqrtatlas/matrix.hpp"

namespace sqrtatlas {

/// Singular values (descending) and right singular vectors of an m x n
/// matrix, m >= n not required. Computed by one-sided Jacobi; adequate and
/// robust at desk scale.
struct SvdResult {
  std::vector<double> sigma;  // descending, length min-free: one per column
  ComplexMatrix v;            // right singular vectors as columns
};

SvdResult jacobiSvd(const ComplexMatrix& a);

std::vector<double> singularValues(const Matrix& a);
std::vector<double> singularValues(const ComplexMatrix& a);

/// Number of singular values above the rank threshold. The threshold is
/// rankTol * sigma_max by default; passing scale > 0 makes it the absolute
/// rankTol * max(1, scale) instead, which is what shifted matrices need
/// (A - lambda I can be numerically zero while its noise floor is not).
int svdRank(const Matrix& a, const Tolerances& tol, double scale = 0.0);
int svdRank(const ComplexMatrix& a, const Tolerances& tol, double scale = 0.0);

/// Orthonormal basis (columns) of the numerical null space of A, with the
/// same scale convention as svdRank.
ComplexMatrix nullspace(const ComplexMatrix& a, const Tolerances& tol,
                        double scale = 0.0);
Matrix nullspace(const Matrix& a, const Tolerances& tol, double scale = 0.0);

}  // namespace sqrtatlas
