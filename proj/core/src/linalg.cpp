#include "sqrtatlas/linalg.hpp"

#include <algorithm>

#include "sqrtatlas/svd.hpp"

namespace sqrtatlas {

namespace {

// LU with partial pivoting, in place. Returns the permutation sign, fills
// perm with row indices. Throws on a zero pivot.
template <class Scalar>
int luDecompose(DenseMatrix<Scalar>& a, std::vector<int>& perm) {
  const int n = a.order();
  perm.resize(n);
  int sign = 1;
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(std::complex<double>(a(k, k)));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(std::complex<double>(a(i, k)));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) throw SingularInput("LU: zero pivot, matrix is singular");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(perm[k], perm[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      const Scalar f = a(i, k) / a(k, k);
      a(i, k) = f;
      for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return sign;
}

template <class Scalar>
DenseMatrix<Scalar> luSolveImpl(const DenseMatrix<Scalar>& a,
                                const DenseMatrix<Scalar>& b) {
  assert(a.isSquare() && a.order() == b.rows());
  const int n = a.order();
  const int m = b.cols();
  DenseMatrix<Scalar> lu = a;
  std::vector<int> perm;
  luDecompose(lu, perm);
  DenseMatrix<Scalar> x(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) x(i, j) = b(perm[i], j);
  // forward substitution (unit lower)
  for (int i = 1; i < n; ++i)
    for (int k = 0; k < i; ++k) {
      const Scalar f = lu(i, k);
      if (f == Scalar{}) continue;
      for (int j = 0; j < m; ++j) x(i, j) -= f * x(k, j);
    }
  // back substitution
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) {
      const Scalar f = lu(i, k);
      if (f == Scalar{}) continue;
      for (int j = 0; j < m; ++j) x(i, j) -= f * x(k, j);
    }
    for (int j = 0; j < m; ++j) x(i, j) /= lu(i, i);
  }
  return x;
}

template <class Scalar>
Scalar determinantImpl(const DenseMatrix<Scalar>& a) {
  DenseMatrix<Scalar> lu = a;
  std::vector<int> perm;
  int sign;
  try {
    sign = luDecompose(lu, perm);
  } catch (const SingularInput&) {
    return Scalar{};
  }
  Scalar d(sign);
  for (int i = 0; i < a.order(); ++i) d *= lu(i, i);
  return d;
}

}  // namespace

Matrix luSolve(const Matrix& a, const Matrix& b) { return luSolveImpl(a, b); }
ComplexMatrix luSolve(const ComplexMatrix& a, const ComplexMatrix& b) {
  return luSolveImpl(a, b);
}

Matrix inverse(const Matrix& a) { return luSolveImpl(a, Matrix::identity(a.order())); }
ComplexMatrix inverse(const ComplexMatrix& a) {
  return luSolveImpl(a, ComplexMatrix::identity(a.order()));
}

double determinant(const Matrix& a) { return determinantImpl(a); }
std::complex<double> determinant(const ComplexMatrix& a) { return determinantImpl(a); }

double rcondEstimate(const Matrix& a) {
  const std::vector<double> s = singularValues(a);
  if (s.empty() || s.front() == 0.0) return 0.0;
  return s.back() / s.front();
}

double orthogonalityDefect(const Matrix& q) {
  return (q.transpose() * q - Matrix::identity(q.order())).frobeniusNorm();
}

double symmetryDefect(const Matrix& a) { return (a - a.transpose()).frobeniusNorm(); }

double skewDefect(const Matrix& a) { return (a + a.transpose()).frobeniusNorm(); }

}  // namespace sqrtatlas
