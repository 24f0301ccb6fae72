#include "sqrtatlas/geometry.hpp"

#include <random>

#include "sqrtatlas/expm.hpp"
#include "sqrtatlas/linalg.hpp"
#include "sqrtatlas/svd.hpp"

namespace sqrtatlas {

double traceMetric(const Matrix& a, const Matrix& v, const Matrix& w) {
  const Matrix ainv = inverse(a);
  return (ainv * v * ainv * w).trace();
}

Matrix geodesic(const Matrix& a, const Matrix& v, double t) {
  Matrix dir = inverse(a) * v;
  dir *= t;
  return a * expm(dir);
}

std::vector<Matrix> orbitTangentBasis(const RjsDecomposition& dec, const Matrix& y) {
  std::vector<Matrix> out;
  for (const Matrix& b : centralizerBasis(dec.profile)) {
    const Matrix w = dec.c * b * dec.cInv;
    out.push_back(w * y - y * w);
  }
  return out;
}

namespace {

Matrix projectRestriction(const Matrix& v, const Matrix& y,
                          TangentRestriction restriction) {
  switch (restriction) {
    case TangentRestriction::None:
      return v;
    case TangentRestriction::Symmetric:
      return 0.5 * (v + v.transpose());
    case TangentRestriction::Orthogonal: {
      // projection onto {V : Y^T V + V^T Y = 0} for orthogonal Y
      const Matrix s = y.transpose() * v;
      return y * (0.5 * (s - s.transpose()));
    }
  }
  return v;
}

}  // namespace

int tangentRankDimension(const RjsDecomposition& dec, const Matrix& y,
                         TangentRestriction restriction, const Tolerances& tol) {
  const std::vector<Matrix> span = orbitTangentBasis(dec, y);
  if (span.empty()) return 0;
  const int n = y.order();
  Matrix stacked(n * n, static_cast<int>(span.size()));
  for (size_t col = 0; col < span.size(); ++col) {
    const Matrix p = projectRestriction(span[col], y, restriction);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        stacked(i * n + j, static_cast<int>(col)) = p(i, j);
  }
  return svdRank(stacked, tol, y.frobeniusNorm());
}

GeodesicCertificate certifyTotallyGeodesic(const RjsDecomposition& dec,
                                           const Matrix& y, std::uint64_t seed,
                                           const std::vector<double>& grid) {
  const std::vector<Matrix> span = orbitTangentBasis(dec, y);
  const Matrix m = dec.c * dec.j * dec.cInv;
  const int n = y.order();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix v(n);
  for (const Matrix& b : span) {
    const double c = gauss(rng);
    v += c * b;
  }
  const double norm = v.frobeniusNorm();
  GeodesicCertificate cert;
  // a 0-dimensional branch leaves only roundoff in the span; nothing to certify
  if (norm <= 1e-8 * std::max(1.0, y.frobeniusNorm())) {
    cert.tangent = Matrix(n);
    return cert;
  }
  v *= 1.0 / norm;
  cert.tangent = v;

  for (double t : grid) {
    const Matrix g = geodesic(y, v, t);
    cert.maxResidual = std::max(cert.maxResidual, (g * g - m).frobeniusNorm());
  }
  return cert;
}

bool isometryCheck(IsometryKind kind, const Matrix& m0, int samples,
                   std::uint64_t seed, const Tolerances&) {
  const int n = m0.order();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&](double scale) {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = scale * gauss(rng);
    return m;
  };

  for (int s = 0; s < samples; ++s) {
    // base point: a perturbation of the identity, kept invertible
    Matrix a = Matrix::identity(n) + draw(0.2);
    if (rcondEstimate(a) < 1e-6) {
      --s;
      continue;
    }
    const Matrix v = draw(1.0);
    const Matrix w = draw(1.0);
    const double lhs = traceMetric(a, v, w);

    Matrix fa(n), dv(n), dw(n);
    switch (kind) {
      case IsometryKind::Inversion: {
        const Matrix ainv = inverse(a);
        fa = ainv;
        dv = -1.0 * (ainv * v * ainv);
        dw = -1.0 * (ainv * w * ainv);
        break;
      }
      case IsometryKind::LeftTranslation:
        fa = m0 * a;
        dv = m0 * v;
        dw = m0 * w;
        break;
      case IsometryKind::RightTranslation:
        fa = a * m0;
        dv = v * m0;
        dw = w * m0;
        break;
      case IsometryKind::Conjugation: {
        const Matrix minv = inverse(m0);
        fa = m0 * a * minv;
        dv = m0 * v * minv;
        dw = m0 * w * minv;
        break;
      }
      case IsometryKind::Congruence:
        fa = m0 * a * m0.transpose();
        dv = m0 * v * m0.transpose();
        dw = m0 * w * m0.transpose();
        break;
    }
    const double rhs = traceMetric(fa, dv, dw);
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    if (std::abs(lhs - rhs) > 1e-10 * scale) return false;
  }
  return true;
}

}  // namespace sqrtatlas
