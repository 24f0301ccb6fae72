#include <doctest.h>

#include "sqrtatlas/geometry.hpp"
#include "sqrtatlas/linalg.hpp"
#include "sqrtatlas/orthogonal.hpp"
#include "sqrtatlas/random.hpp"
#include "sqrtatlas/symmetric.hpp"
#include "test_support.hpp"

using namespace sqrtatlas;
using testsupport::matrixFromProfile;
using testsupport::randomProfile;

namespace {
const Tolerances tol;
const std::vector<double> grid = {-1.0, -0.5, 0.25, 0.5, 1.0};
}  // namespace

TEST_CASE("trace metric basics") {
  const Matrix i3 = Matrix::identity(3);
  const Matrix v = randomGaussian(3, 3, 1);
  const Matrix w = randomGaussian(3, 3, 2);
  // at the identity the metric is tr(VW)
  CHECK(traceMetric(i3, v, w) == doctest::Approx((v * w).trace()));
  // symmetry
  const Matrix a = Matrix::identity(3) + 0.2 * randomGaussian(3, 3, 3);
  CHECK(traceMetric(a, v, w) == doctest::Approx(traceMetric(a, w, v)));
  // on O_n the restriction is minus the Frobenius inner product: for a skew
  // tangent QS at Q, g_Q(QS, QS) = tr(S^2) = -||S||_F^2
  const Matrix q = randomOrthogonal(4, 4);
  Matrix s(4);
  s(0, 1) = 1.3;
  s(1, 0) = -1.3;
  s(2, 3) = -0.4;
  s(3, 2) = 0.4;
  const Matrix tangent = q * s;
  CHECK(traceMetric(q, tangent, tangent) ==
        doctest::Approx(-s.frobeniusNorm() * s.frobeniusNorm()));
}

TEST_CASE("geodesic initial conditions") {
  const Matrix a = Matrix::identity(3) + 0.3 * randomGaussian(3, 3, 7);
  const Matrix v = randomGaussian(3, 3, 8);
  CHECK((geodesic(a, v, 0.0) - a).frobeniusNorm() < 1e-14);
  // finite-difference velocity at t = 0
  const double h = 1e-6;
  const Matrix fd = (1.0 / (2.0 * h)) * (geodesic(a, v, h) - geodesic(a, v, -h));
  CHECK((fd - v).frobeniusNorm() < 1e-7 * std::max(1.0, v.frobeniusNorm()));
}

TEST_CASE("orbit tangent span vanishes exactly on 0-dimensional branches") {
  const Matrix m = Matrix::diagonal({1.0, 4.0, 9.0});
  const RjsDecomposition dec = rjsDecompose(m, tol);
  const Matrix y = Matrix::diagonal({1.0, 2.0, 3.0});
  CHECK(tangentRankDimension(dec, y, TangentRestriction::None, tol) == 0);
}

TEST_CASE("tangent rank equals the dimension formula per family") {
  SUBCASE("general") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const SpectralProfile p = randomProfile(seed + 900, 6);
      const Matrix m = matrixFromProfile(p, seed + 31);
      const RjsDecomposition dec = rjsDecompose(m, tol);
      for (const auto& idx : enumerateBranches(dec.profile)) {
        const SqrtBranch b = representative(dec, idx, tol);
        CHECK(tangentRankDimension(dec, b.representative,
                                   TangentRestriction::None, tol) == b.dimension);
      }
    }
  }
  SUBCASE("symmetric") {
    const Matrix q = randomOrthogonal(4, 17);
    const Matrix m = q * Matrix::diagonal({1.0, 1.0, 4.0, 4.0}) * q.transpose();
    const RjsDecomposition dec = rjsDecompose(m, tol);
    for (const auto& b : enumerateSsrBranches(dec, tol))
      CHECK(tangentRankDimension(dec, b.representative,
                                 TangentRestriction::Symmetric, tol) == b.dimension);
  }
  SUBCASE("orthogonal") {
    const Matrix q = randomOrthogonal(6, 23);
    const Matrix j = directSum({Matrix::identity(2), rotationBlock(0.9),
                                -Matrix::identity(2)});
    const Matrix m = q * j * q.transpose();
    const RjsDecomposition dec = rjsDecompose(m, tol);
    const OsrProfile p = osrProfile(m, tol);
    for (const auto& b : enumerateOsrBranches(dec, p, tol))
      CHECK(tangentRankDimension(dec, b.representative,
                                 TangentRestriction::Orthogonal, tol) == b.dimension);
  }
}

TEST_CASE("geodesics tangent to a branch stay in the solution set") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SpectralProfile p;
    p.positive = {{1.0, 2}, {4.0, 1}};  // branch dims up to 2
    const Matrix m = matrixFromProfile(p, seed + 60);
    const RjsDecomposition dec = rjsDecompose(m, tol);
    BranchIndex idx;
    idx.u = {1, 1};
    const SqrtBranch b = representative(dec, idx, tol);
    REQUIRE(b.dimension == 2);
    const GeodesicCertificate cert =
        certifyTotallyGeodesic(dec, b.representative, seed, grid);
    CHECK(cert.maxResidual <= residualBudget(tol, m.frobeniusNorm()));
    CHECK(cert.tangent.frobeniusNorm() == doctest::Approx(1.0));
  }
}

TEST_CASE("negative control: non-tangent directions leave the solution set") {
  const Matrix m = Matrix::diagonal({1.0, 4.0});
  const Matrix y = Matrix::diagonal({1.0, 2.0});
  Matrix v(2);
  v(1, 1) = 1.0;  // unit direction, not tangent to the 0-dimensional branch
  const Matrix g1 = geodesic(y, v, 1.0);
  CHECK((g1 * g1 - m).frobeniusNorm() > 1e-3);
}

TEST_CASE("all five isometry families preserve the trace metric") {
  const Matrix m0 = Matrix::identity(3) + 0.4 * randomGaussian(3, 3, 5);
  CHECK(isometryCheck(IsometryKind::Inversion, m0, 20, 1, tol));
  CHECK(isometryCheck(IsometryKind::LeftTranslation, m0, 20, 2, tol));
  CHECK(isometryCheck(IsometryKind::RightTranslation, m0, 20, 3, tol));
  CHECK(isometryCheck(IsometryKind::Conjugation, m0, 20, 4, tol));
  CHECK(isometryCheck(IsometryKind::Congruence, m0, 20, 5, tol));
}
