#pragma once

#include "sqrtatlas/matrix.hpp"

namespace sqrtatlas {

struct EigenPair {
  std::complex<double> value;
  std::vector<std::complex<double>> vector;  // unit 2-norm
};

/// Eigenvalues only: Householder Hessenberg reduction followed by Francis
/// double-shift QR iteration. Throws NonConvergence past the iteration cap.
std::vector<std::complex<double>> eigenvalues(const Matrix& a);

/// Eigenpairs with multiplicity. Eigenvalues come from the QR iteration;
/// eigenvectors per cluster are null-space vectors of A - lambda I over C,
/// so repeated eigenvalues of a semisimple matrix get a full basis.
/// Complex pairs are returned as conjugate pairs.
std::vector<EigenPair> eig(const Matrix& a, const Tolerances& tol);

}  // namespace sqrtatlas
