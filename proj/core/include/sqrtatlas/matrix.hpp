#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

#include "sqrtatlas/errors.hpp"

namespace sqrtatlas {

/// Dense row-major matrix over Scalar (double or std::complex<double>).
/// Value type: every operation returns a fresh matrix.
template <class Scalar>
class DenseMatrix {
 public:
  DenseMatrix() = default;

  DenseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    assert(rows >= 0 && cols >= 0);
  }

  /// Square zero matrix of the given order.
  explicit DenseMatrix(int n) : DenseMatrix(n, n) {}

  /// Row-major square matrix from a flat list: {a11, a12, a21, a22}.
  static DenseMatrix fromRowMajor(int n, std::initializer_list<Scalar> v) {
    assert(static_cast<int>(v.size()) == n * n);
    DenseMatrix m(n, n);
    int i = 0;
    for (const Scalar& x : v) m.data_[i++] = x;
    return m;
  }

  static DenseMatrix identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  static DenseMatrix diagonal(const std::vector<Scalar>& d) {
    DenseMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// Order of a square matrix.
  int order() const {
    assert(rows_ == cols_);
    return rows_;
  }

  bool isSquare() const { return rows_ == cols_; }

  Scalar& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  const Scalar& operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  const std::vector<Scalar>& data() const { return data_; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  DenseMatrix block(int i0, int j0, int r, int c) const {
    assert(i0 + r <= rows_ && j0 + c <= cols_);
    DenseMatrix b(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
    return b;
  }

  void setBlock(int i0, int j0, const DenseMatrix& b) {
    assert(i0 + b.rows() <= rows_ && j0 + b.cols() <= cols_);
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }

  Scalar trace() const {
    assert(rows_ == cols_);
    Scalar t{};
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobeniusNorm() const {
    double s = 0.0;
    for (const Scalar& x : data_) s += std::norm(std::complex<double>(x));
    return std::sqrt(s);
  }

  double maxAbs() const {
    double m = 0.0;
    for (const Scalar& x : data_) m = std::max(m, std::abs(std::complex<double>(x)));
    return m;
  }

  bool allFinite() const {
    for (const Scalar& x : data_) {
      std::complex<double> z(x);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
  }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  DenseMatrix& operator*=(Scalar s) {
    for (Scalar& x : data_) x *= s;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(Scalar s, DenseMatrix a) { return a *= s; }
  friend DenseMatrix operator*(DenseMatrix a, Scalar s) { return a *= s; }
  friend DenseMatrix operator-(DenseMatrix a) { return a *= Scalar(-1); }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    assert(a.cols_ == b.rows_);
    DenseMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Scalar aik = a(i, k);
        if (aik == Scalar{}) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

using Matrix = DenseMatrix<double>;
using ComplexMatrix = DenseMatrix<std::complex<double>>;

/// Conjugate transpose.
inline ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

inline ComplexMatrix complexify(const Matrix& a) {
  ComplexMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  return c;
}

inline Matrix realPart(const ComplexMatrix& a) {
  Matrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).real();
  return r;
}

inline Matrix imagPart(const ComplexMatrix& a) {
  Matrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).imag();
  return r;
}

/// The rotation block E_theta = cos(theta) I_2 + sin(theta) E_{pi/2}.
Matrix rotationBlock(double theta);

/// Block-diagonal assembly; zero-order blocks are skipped.
Matrix directSum(const std::vector<Matrix>& blocks);
ComplexMatrix directSum(const std::vector<ComplexMatrix>& blocks);

/// Numerical tolerances. All strictly positive. clusterTol and residTol are
/// relative: effective budgets scale with max(1, ||M||_F) at the use site.
struct Tolerances {
  double clusterTol = 1e-8;  // eigenvalue clustering radius
  double residTol = 1e-8;    // equation-residual acceptance
  double rankTol = 1e-8;     // SVD rank threshold, relative to sigma_max
};

/// Effective residual budget for a matrix of the given norm.
inline double residualBudget(const Tolerances& tol, double norm) {
  return tol.residTol * std::max(1.0, norm);
}

inline double clusterRadius(const Tolerances& tol, double norm) {
  return tol.clusterTol * std::max(1.0, norm);
}

}  // namespace sqrtatlas
