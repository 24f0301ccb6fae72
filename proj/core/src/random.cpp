#include "sqrtatlas/random.hpp"

#include <random>

#include "sqrtatlas/linalg.hpp"
#include "sqrtatlas/svd.hpp"

namespace sqrtatlas {

Matrix randomGaussian(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = gauss(rng);
  return m;
}

ComplexMatrix randomComplexGaussian(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      m(i, j) = {re, im};
    }
  return m;
}

namespace {

double conjugate(double x) { return x; }
std::complex<double> conjugate(const std::complex<double>& z) { return std::conj(z); }

// Householder QR of a square Gaussian matrix, keeping Q, with the R diagonal
// phase absorbed into Q so the distribution is Haar.
template <class Scalar>
DenseMatrix<Scalar> haarFromGaussian(DenseMatrix<Scalar> a) {
  const int n = a.order();
  DenseMatrix<Scalar> q = DenseMatrix<Scalar>::identity(n);
  std::vector<Scalar> v(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    double xnorm = 0.0;
    for (int i = k; i < n; ++i) xnorm += std::norm(std::complex<double>(a(i, k)));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    const std::complex<double> akk(a(k, k));
    const double aabs = std::abs(akk);
    const std::complex<double> phase = aabs == 0.0 ? 1.0 : akk / aabs;
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = Scalar{};
    for (int i = k; i < n; ++i) v[static_cast<size_t>(i)] = a(i, k);
    // v = x + phase * ||x|| e_k avoids cancellation
    if constexpr (std::is_same_v<Scalar, double>)
      v[static_cast<size_t>(k)] += phase.real() * xnorm;
    else
      v[static_cast<size_t>(k)] += Scalar(phase * xnorm);
    double vnorm2 = 0.0;
    for (int i = k; i < n; ++i) vnorm2 += std::norm(std::complex<double>(v[static_cast<size_t>(i)]));
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    // A <- P A with P = I - beta v v^*
    for (int j = 0; j < n; ++j) {
      Scalar s{};
      for (int i = k; i < n; ++i) s += conjugate(v[static_cast<size_t>(i)]) * a(i, j);
      s *= Scalar(beta);
      for (int i = k; i < n; ++i) a(i, j) -= v[static_cast<size_t>(i)] * s;
    }
    // Q <- Q P (accumulates Q = P_0 P_1 ... )
    for (int i = 0; i < n; ++i) {
      Scalar s{};
      for (int j = k; j < n; ++j) s += q(i, j) * v[static_cast<size_t>(j)];
      s *= Scalar(beta);
      for (int j = k; j < n; ++j) q(i, j) -= s * conjugate(v[static_cast<size_t>(j)]);
    }
  }
  // Absorb the R diagonal phase: Q <- Q diag(phase(R_jj)), which makes the
  // implicit R diagonal real positive.
  for (int j = 0; j < n; ++j) {
    const std::complex<double> rjj(a(j, j));
    const double rabs = std::abs(rjj);
    const std::complex<double> phase = rabs == 0.0 ? 1.0 : rjj / rabs;
    for (int i = 0; i < n; ++i) {
      if constexpr (std::is_same_v<Scalar, double>)
        q(i, j) *= phase.real();
      else
        q(i, j) *= Scalar(phase);
    }
  }
  return q;
}

}  // namespace

Matrix randomOrthogonal(int n, std::uint64_t seed) {
  return haarFromGaussian(randomGaussian(n, n, seed));
}

ComplexMatrix randomUnitary(int m, std::uint64_t seed) {
  return haarFromGaussian(randomComplexGaussian(m, m, seed));
}

Matrix randomInvertible(int n, std::uint64_t seed, double condCap) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix m = randomGaussian(n, n, seed + static_cast<std::uint64_t>(attempt));
    if (rcondEstimate(m) > 1.0 / condCap) return m;
  }
  throw NonConvergence("could not draw a well-conditioned random matrix");
}

ComplexMatrix randomComplexInvertible(int n, std::uint64_t seed, double condCap) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    ComplexMatrix m = randomComplexGaussian(n, n, seed + static_cast<std::uint64_t>(attempt));
    const std::vector<double> s = singularValues(m);
    if (!s.empty() && s.front() > 0.0 && s.back() / s.front() > 1.0 / condCap) return m;
  }
  throw NonConvergence("could not draw a well-conditioned random matrix");
}

}  // namespace sqrtatlas
