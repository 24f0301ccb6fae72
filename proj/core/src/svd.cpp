#include "sqrtatlas/svd.hpp"

#include <algorithm>
#include <numeric>

namespace sqrtatlas {

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kJacobiEps = 1e-14;

}  // namespace

SvdResult jacobiSvd(const ComplexMatrix& a) {
  const int m = a.rows();
  const int n = a.cols();
  ComplexMatrix w = a;  // columns rotated in place
  ComplexMatrix v = ComplexMatrix::identity(n);

  auto colDot = [&](int p, int q) {  // w_p^* . w_q
    std::complex<double> s{};
    for (int i = 0; i < m; ++i) s += std::conj(w(i, p)) * w(i, q);
    return s;
  };
  auto colNorm2 = [&](int p) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += std::norm(w(i, p));
    return s;
  };

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double app = colNorm2(p);
        const double aqq = colNorm2(q);
        const std::complex<double> apq = colDot(p, q);
        const double off = std::abs(apq);
        if (off <= kJacobiEps * std::sqrt(app * aqq) || off == 0.0) continue;
        rotated = true;
        // Phase so the coupling becomes real (w_p^* . phase w_q = |apq|),
        // then a real Jacobi rotation diagonalizing [[app, off], [off, aqq]].
        const std::complex<double> phase = std::conj(apq) / off;
        const double tau = (aqq - app) / (2.0 * off);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (int i = 0; i < m; ++i) {
          const std::complex<double> wp = w(i, p);
          const std::complex<double> wq = phase * w(i, q);
          w(i, p) = cs * wp - sn * wq;
          w(i, q) = sn * wp + cs * wq;
        }
        for (int i = 0; i < n; ++i) {
          const std::complex<double> vp = v(i, p);
          const std::complex<double> vq = phase * v(i, q);
          v(i, p) = cs * vp - sn * vq;
          v(i, q) = sn * vp + cs * vq;
        }
      }
    }
    if (!rotated) break;
  }

  SvdResult res;
  res.sigma.resize(n);
  for (int j = 0; j < n; ++j) res.sigma[static_cast<size_t>(j)] = std::sqrt(colNorm2(j));

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return res.sigma[static_cast<size_t>(i)] > res.sigma[static_cast<size_t>(j)]; });

  std::vector<double> sigmaSorted(static_cast<size_t>(n));
  ComplexMatrix vSorted(n, n);
  for (int j = 0; j < n; ++j) {
    sigmaSorted[static_cast<size_t>(j)] = res.sigma[static_cast<size_t>(order[static_cast<size_t>(j)])];
    for (int i = 0; i < n; ++i) vSorted(i, j) = v(i, order[static_cast<size_t>(j)]);
  }
  res.sigma = std::move(sigmaSorted);
  res.v = std::move(vSorted);
  return res;
}

std::vector<double> singularValues(const ComplexMatrix& a) {
  return jacobiSvd(a).sigma;
}

std::vector<double> singularValues(const Matrix& a) {
  return jacobiSvd(complexify(a)).sigma;
}

namespace {

int rankFromSigma(const std::vector<double>& sigma, double rankTol, double scale) {
  if (sigma.empty()) return 0;
  const double cut =
      scale > 0.0 ? rankTol * std::max(1.0, scale) : rankTol * sigma.front();
  int r = 0;
  for (double s : sigma)
    if (s > cut && s > 0.0) ++r;
  return r;
}

}  // namespace

int svdRank(const Matrix& a, const Tolerances& tol, double scale) {
  return rankFromSigma(singularValues(a), tol.rankTol, scale);
}

int svdRank(const ComplexMatrix& a, const Tolerances& tol, double scale) {
  return rankFromSigma(singularValues(a), tol.rankTol, scale);
}

ComplexMatrix nullspace(const ComplexMatrix& a, const Tolerances& tol, double scale) {
  const SvdResult svd = jacobiSvd(a);
  const int n = a.cols();
  const int r = rankFromSigma(svd.sigma, tol.rankTol, scale);
  ComplexMatrix basis(n, n - r);
  for (int j = r; j < n; ++j)
    for (int i = 0; i < n; ++i) basis(i, j - r) = svd.v(i, j);
  return basis;
}

Matrix nullspace(const Matrix& a, const Tolerances& tol, double scale) {
  // Real matrix: the Jacobi rotations of a real input stay real up to the
  // phase factors, which are +-1 there; take the real part of the complex path.
  const ComplexMatrix basis = nullspace(complexify(a), tol, scale);
  return realPart(basis);
}

}  // namespace sqrtatlas
