#include <doctest.h>

#include <cmath>

#include "sqrtatlas/eig.hpp"
#include "sqrtatlas/expm.hpp"
#include "sqrtatlas/linalg.hpp"
#include "sqrtatlas/random.hpp"
#include "sqrtatlas/rho.hpp"
#include "sqrtatlas/svd.hpp"
#include "test_support.hpp"

using namespace sqrtatlas;
using doctest::Approx;

TEST_CASE("matrix basics") {
  Matrix a = Matrix::fromRowMajor(2, {1.0, 2.0, 3.0, 4.0});
  CHECK(a(0, 1) == 2.0);
  CHECK(a.trace() == 5.0);
  CHECK(a.transpose()(1, 0) == 2.0);
  CHECK(a.frobeniusNorm() == Approx(std::sqrt(30.0)));

  Matrix b = a * Matrix::identity(2);
  CHECK((b - a).frobeniusNorm() == 0.0);

  Matrix d = directSum({Matrix::identity(2), 3.0 * Matrix::identity(1)});
  CHECK(d.order() == 3);
  CHECK(d(2, 2) == 3.0);
  CHECK(d(0, 2) == 0.0);

  // zero-order blocks vanish
  Matrix e = directSum({Matrix(0), Matrix::identity(2), Matrix(0)});
  CHECK(e.order() == 2);
}

TEST_CASE("rotation block") {
  const Matrix e = rotationBlock(M_PI / 2.0);
  CHECK(e(0, 0) == Approx(0.0));
  CHECK(e(0, 1) == Approx(-1.0));
  CHECK(e(1, 0) == Approx(1.0));
  // E_theta^2 = E_{2 theta}
  const Matrix sq = rotationBlock(0.7) * rotationBlock(0.7);
  CHECK((sq - rotationBlock(1.4)).frobeniusNorm() < 1e-15);
}

TEST_CASE("lu solve and inverse") {
  const Matrix a = Matrix::fromRowMajor(3, {2, 1, 0, 1, 3, 1, 0, 1, 2});
  const Matrix x = luSolve(a, Matrix::identity(3));
  CHECK((a * x - Matrix::identity(3)).frobeniusNorm() < 1e-13);
  CHECK((inverse(a) - x).frobeniusNorm() < 1e-13);

  CHECK_THROWS_AS(inverse(Matrix(2)), SingularInput);
}

TEST_CASE("determinant") {
  CHECK(determinant(Matrix::identity(4)) == Approx(1.0));
  const Matrix a = Matrix::fromRowMajor(2, {1, 2, 3, 4});
  CHECK(determinant(a) == Approx(-2.0));
  CHECK(determinant(Matrix(3)) == 0.0);

  ComplexMatrix z(2);
  z(0, 0) = {0.0, 1.0};
  z(1, 1) = {0.0, 1.0};
  CHECK(determinant(z).real() == Approx(-1.0));
  CHECK(determinant(z).imag() == Approx(0.0).epsilon(1e-12));
}

TEST_CASE("svd on a known matrix") {
  // diag(3, 2, 1) scrambled by orthogonal factors keeps its singular values
  const Matrix q1 = randomOrthogonal(3, 5);
  const Matrix q2 = randomOrthogonal(3, 6);
  const Matrix a = q1 * Matrix::diagonal({3.0, 2.0, 1.0}) * q2;
  const auto s = singularValues(a);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == Approx(3.0));
  CHECK(s[1] == Approx(2.0));
  CHECK(s[2] == Approx(1.0));

  Tolerances tol;
  CHECK(svdRank(a, tol) == 3);
}

TEST_CASE("nullspace") {
  Tolerances tol;
  // rank-1 projector: nullspace has dimension 2
  Matrix a(3);
  a(0, 0) = 1.0;
  const ComplexMatrix ns = nullspace(complexify(a), tol);
  REQUIRE(ns.cols() == 2);
  CHECK((complexify(a) * ns).frobeniusNorm() < 1e-13);
  // columns orthonormal
  const ComplexMatrix gram = adjoint(ns) * ns;
  CHECK((gram - ComplexMatrix::identity(2)).frobeniusNorm() < 1e-12);
}

TEST_CASE("eigenvalues of known matrices") {
  const auto ev = eigenvalues(Matrix::diagonal({1.0, 2.0, 3.0}));
  REQUIRE(ev.size() == 3);
  // sorted by (Re, Im)
  CHECK(ev[0].real() == Approx(1.0));
  CHECK(ev[2].real() == Approx(3.0));

  // rotation-scaling block: 2 e^{+- 0.8 i}
  const auto evc = eigenvalues(2.0 * rotationBlock(0.8));
  REQUIRE(evc.size() == 2);
  CHECK(std::abs(evc[0]) == Approx(2.0));
  CHECK(std::abs(std::abs(std::arg(evc[0])) - 0.8) < 1e-12);
  CHECK(evc[0].imag() == Approx(-evc[1].imag()));
}

TEST_CASE("eig recovers a full eigenbasis for repeated eigenvalues") {
  Tolerances tol;
  const Matrix q = randomOrthogonal(4, 9);
  const Matrix m = q * Matrix::diagonal({2.0, 2.0, 5.0, 5.0}) * q.transpose();
  const auto pairs = eig(m, tol);
  REQUIRE(pairs.size() == 4);
  for (const auto& p : pairs) {
    std::complex<double> worst = 0.0;
    for (int i = 0; i < 4; ++i) {
      std::complex<double> acc = -p.value * p.vector[static_cast<size_t>(i)];
      for (int j = 0; j < 4; ++j) acc += m(i, j) * p.vector[static_cast<size_t>(j)];
      worst = std::max(std::abs(worst), std::abs(acc));
    }
    CHECK(std::abs(worst) < 1e-10);
  }
}

TEST_CASE("expm basics") {
  CHECK((expm(Matrix(3)) - Matrix::identity(3)).frobeniusNorm() < 1e-15);

  const Matrix d = expm(Matrix::diagonal({1.0, -2.0}));
  CHECK(d(0, 0) == Approx(std::exp(1.0)));
  CHECK(d(1, 1) == Approx(std::exp(-2.0)));

  // exp of the rotation generator is the rotation
  Matrix gen(2);
  gen(0, 1) = -0.9;
  gen(1, 0) = 0.9;
  CHECK((expm(gen) - rotationBlock(0.9)).frobeniusNorm() < 1e-13);

  // group law along a one-parameter subgroup
  const Matrix a = 0.4 * randomGaussian(4, 4, 3);
  CHECK((expm(a) * expm(a) - expm(2.0 * a)).frobeniusNorm() < 1e-12);
}

TEST_CASE("random generators are deterministic and well-formed") {
  const Matrix q = randomOrthogonal(5, 77);
  CHECK(orthogonalityDefect(q) < 1e-13);
  CHECK((q - randomOrthogonal(5, 77)).frobeniusNorm() == 0.0);
  CHECK((q - randomOrthogonal(5, 78)).frobeniusNorm() > 1e-3);

  const ComplexMatrix u = randomUnitary(4, 12);
  CHECK((adjoint(u) * u - ComplexMatrix::identity(4)).frobeniusNorm() < 1e-13);

  const Matrix g = randomInvertible(6, 4);
  CHECK(rcondEstimate(g) > 1e-8);
}

TEST_CASE("rho embedding identities") {
  const ComplexMatrix z = randomComplexGaussian(3, 3, 1);
  const ComplexMatrix w = randomComplexGaussian(3, 3, 2);

  CHECK((rho(z * w) - rho(z) * rho(w)).frobeniusNorm() < 1e-12);
  CHECK((rho(adjoint(z)) - rho(z).transpose()).frobeniusNorm() == 0.0);
  CHECK(rho(z).trace() == Approx(2.0 * z.trace().real()));
  CHECK(determinant(rho(z)) == Approx(std::norm(determinant(z))));
}

TEST_CASE("defect helpers") {
  const Matrix q = randomOrthogonal(3, 1);
  CHECK(orthogonalityDefect(q) < 1e-13);
  CHECK(symmetryDefect(Matrix::identity(3)) == 0.0);
  Matrix skew(2);
  skew(0, 1) = 1.0;
  skew(1, 0) = -1.0;
  CHECK(skewDefect(skew) == 0.0);
  CHECK(symmetryDefect(skew) > 1.0);
}
