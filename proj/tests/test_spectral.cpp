#include <doctest.h>

#include "sqrtatlas/linalg.hpp"
#include "sqrtatlas/spectral.hpp"
#include "test_support.hpp"

using namespace sqrtatlas;
using testsupport::matrixFromProfile;
using testsupport::mildConjugator;
using testsupport::randomProfile;

namespace {
const Tolerances tol;
}

TEST_CASE("classifySpectrum splits the three families in canonical order") {
  SpectralProfile p;
  p.positive = {{0.5, 1}, {2.0, 2}};
  p.complexGroups = {{0.9, {{1.0, 1}}}};
  p.negative = {{1.5, 2}};
  const Matrix m = matrixFromProfile(p, 3);

  const SpectralProfile got = classifySpectrum(m, tol);
  REQUIRE(got.positive.size() == 2);
  CHECK(got.positive[0].lambda == doctest::Approx(0.5));
  CHECK(got.positive[0].mult == 1);
  CHECK(got.positive[1].lambda == doctest::Approx(2.0));
  CHECK(got.positive[1].mult == 2);
  REQUIRE(got.complexGroups.size() == 1);
  CHECK(got.complexGroups[0].theta == doctest::Approx(0.9));
  REQUIRE(got.complexGroups[0].moduli.size() == 1);
  CHECK(got.complexGroups[0].moduli[0].rho == doctest::Approx(1.0));
  CHECK(got.complexGroups[0].moduli[0].mult == 1);
  REQUIRE(got.negative.size() == 1);
  CHECK(got.negative[0].zeta == doctest::Approx(1.5));
  CHECK(got.negative[0].mult == 2);
  CHECK(got.order() == m.order());
}

TEST_CASE("complex moduli sort ascending within an angle group") {
  SpectralProfile p;
  p.complexGroups = {{1.1, {{1.0, 1}, {3.0, 1}}}};
  const SpectralProfile got = classifySpectrum(matrixFromProfile(p, 5), tol);
  REQUIRE(got.complexGroups.size() == 1);
  REQUIRE(got.complexGroups[0].moduli.size() == 2);
  CHECK(got.complexGroups[0].moduli[0].rho == doctest::Approx(1.0));
  CHECK(got.complexGroups[0].moduli[1].rho == doctest::Approx(3.0));
}

TEST_CASE("singular input is rejected") {
  CHECK_THROWS_AS(classifySpectrum(Matrix(3), tol), SingularInput);
  Matrix nearSing = Matrix::diagonal({1.0, 1e-14});
  CHECK_THROWS_AS(classifySpectrum(nearSing, tol), SingularInput);
}

TEST_CASE("buildRjs reproduces the matrix it was classified from") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SpectralProfile p = randomProfile(seed, 7);
    const Matrix j = buildRjs(p);
    const SpectralProfile q = classifySpectrum(j, tol);
    CHECK((buildRjs(q) - j).frobeniusNorm() < 1e-9 * std::max(1.0, j.frobeniusNorm()));
  }
}

TEST_CASE("checkSemisimple accepts diagonalizable, rejects Jordan blocks") {
  const SpectralProfile p = randomProfile(3, 6);
  CHECK(checkSemisimple(matrixFromProfile(p, 8), tol));

  // one genuine Jordan block, conjugated
  Matrix j = Matrix::diagonal({10.0, 10.0, 30.0, 40.0});
  j(0, 1) = 10.0;
  const Matrix c = mildConjugator(4, 2);
  CHECK_FALSE(checkSemisimple(c * j * inverse(c), tol));
}

TEST_CASE("hasRealSqrt is the even-negative-multiplicity test") {
  SpectralProfile ok;
  ok.negative = {{2.0, 2}};
  CHECK(hasRealSqrt(ok));
  SpectralProfile bad;
  bad.positive = {{1.0, 1}};
  bad.negative = {{2.0, 3}};
  CHECK_FALSE(hasRealSqrt(bad));
}

TEST_CASE("rjsDecompose reconstructs M within budget") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const SpectralProfile p = randomProfile(seed + 100, 8);
    const Matrix m = matrixFromProfile(p, seed);
    const RjsDecomposition dec = rjsDecompose(m, tol);
    CHECK(dec.residual <= residualBudget(tol, m.frobeniusNorm()));
    CHECK((dec.c * dec.j * dec.cInv - m).frobeniusNorm() ==
          doctest::Approx(dec.residual));
  }
}

TEST_CASE("rjsDecompose takes an orthogonal conjugator on symmetric input") {
  const Matrix q = randomOrthogonal(5, 31);
  const Matrix m = q * Matrix::diagonal({1.0, 1.0, 4.0, 4.0, 9.0}) * q.transpose();
  const RjsDecomposition dec = rjsDecompose(m, tol);
  CHECK(dec.conjugatorIsOrthogonal);
  CHECK(orthogonalityDefect(dec.c) < 1e-8);
}

TEST_CASE("rjsDecompose takes an orthogonal conjugator on rotations") {
  const Matrix q = randomOrthogonal(4, 8);
  const Matrix m =
      q * directSum({rotationBlock(0.7), rotationBlock(2.1)}) * q.transpose();
  const RjsDecomposition dec = rjsDecompose(m, tol);
  CHECK(dec.conjugatorIsOrthogonal);
  CHECK(dec.residual <= residualBudget(tol, m.frobeniusNorm()));
}

TEST_CASE("defective input is rejected by rjsDecompose") {
  Matrix j = Matrix::diagonal({10.0, 10.0});
  j(0, 1) = 10.0;
  CHECK_THROWS_AS(rjsDecompose(j, tol), DefectiveInput);
}

TEST_CASE("centralizer basis commutes with the RJS form") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const SpectralProfile p = randomProfile(seed + 40, 7);
    const Matrix j = buildRjs(p);
    int expected = 0;
    for (const auto& c : p.positive) expected += c.mult * c.mult;
    for (const auto& g : p.complexGroups)
      for (const auto& m : g.moduli) expected += 2 * m.mult * m.mult;
    for (const auto& c : p.negative) expected += c.mult * c.mult;

    const auto basis = centralizerBasis(p);
    CHECK(static_cast<int>(basis.size()) == expected);
    for (const auto& b : basis)
      CHECK((b * j - j * b).frobeniusNorm() < 1e-12 * std::max(1.0, j.frobeniusNorm()));
  }
}
