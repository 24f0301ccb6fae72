#pragma once

#include "sqrtatlas/matrix.hpp"

namespace sqrtatlas {

/// Solve A X = B by LU with partial pivoting. Throws SingularInput on an
/// exactly zero pivot.
Matrix luSolve(const Matrix& a, const Matrix& b);
ComplexMatrix luSolve(const ComplexMatrix& a, const ComplexMatrix& b);

Matrix inverse(const Matrix& a);
ComplexMatrix inverse(const ComplexMatrix& a);

double determinant(const Matrix& a);
std::complex<double> determinant(const ComplexMatrix& a);

/// Reciprocal condition estimate sigma_min / sigma_max (0 for singular).
double rcondEstimate(const Matrix& a);

/// ||A B - I|| style helpers used all over the checks.
double orthogonalityDefect(const Matrix& q);   // ||Q^T Q - I||_F
double symmetryDefect(const Matrix& a);        // ||A - A^T||_F
double skewDefect(const Matrix& a);            // ||A + A^T||_F

}  // namespace sqrtatlas
