#include <doctest.h>

#include <algorithm>

#include "sqrtatlas/branches.hpp"
#include "sqrtatlas/linalg.hpp"
#include "test_support.hpp"

using namespace sqrtatlas;
using testsupport::matrixFromProfile;
using testsupport::randomProfile;
using testsupport::relResidual;

namespace {
const Tolerances tol;
}

TEST_CASE("branch enumeration size is the product of index ranges") {
  SpectralProfile p;
  p.positive = {{1.0, 2}, {4.0, 1}};
  p.complexGroups = {{0.9, {{2.0, 2}}}};
  p.negative = {{1.0, 4}};
  const auto branches = enumerateBranches(p);
  CHECK(branches.size() == 3u * 2u * 3u);  // (h1+1)(h2+1)(m+1)

  // principal comes first, all-negative last
  CHECK(branches.front() == principalBranchIndex(p));
  CHECK(branches.back().u == std::vector<int>{0, 0});
  CHECK(branches.back().mu == std::vector<std::vector<int>>{{0}});

  // all distinct
  for (size_t i = 0; i < branches.size(); ++i)
    for (size_t j = i + 1; j < branches.size(); ++j)
      CHECK_FALSE(branches[i] == branches[j]);
}

TEST_CASE("pure negative spectrum still has exactly one branch") {
  SpectralProfile p;
  p.negative = {{1.0, 2}};
  const auto branches = enumerateBranches(p);
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].u.empty());
  CHECK(branches[0].mu.empty());
}

TEST_CASE("existence gate: odd negative multiplicity") {
  SpectralProfile p;
  p.positive = {{2.0, 1}};
  p.negative = {{1.0, 1}};
  CHECK_THROWS_AS(enumerateBranches(p), ExistenceViolated);
  CHECK_THROWS_AS(principalBranchIndex(p), ExistenceViolated);
}

TEST_CASE("index validation") {
  SpectralProfile p;
  p.positive = {{1.0, 2}};
  BranchIndex bad;
  bad.u = {3};
  CHECK_THROWS_AS(validateIndex(p, bad), IndexOutOfRange);
  bad.u = {1, 1};
  CHECK_THROWS_AS(validateIndex(p, bad), IndexOutOfRange);
  BranchIndex good;
  good.u = {2};
  CHECK_NOTHROW(validateIndex(p, good));
}

TEST_CASE("the RJA form squares to the RJS form") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const SpectralProfile p = randomProfile(seed + 300, 8);
    const Matrix j = buildRjs(p);
    for (const auto& idx : enumerateBranches(p)) {
      const Matrix rja = buildRja(p, idx);
      CHECK((rja * rja - j).frobeniusNorm() < 1e-12 * std::max(1.0, j.frobeniusNorm()));
    }
  }
}

TEST_CASE("representatives and samples square to M") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const SpectralProfile p = randomProfile(seed + 500, 7);
    const Matrix m = matrixFromProfile(p, seed + 17);
    const RjsDecomposition dec = rjsDecompose(m, tol);
    for (const auto& idx : enumerateBranches(dec.profile)) {
      const SqrtBranch b = representative(dec, idx, tol);
      CHECK(relResidual(b.representative, m) <= tol.residTol);
      const Matrix y = sampleBranch(dec, idx, seed * 13 + 1, tol);
      CHECK(relResidual(y, m) <= tol.residTol);
    }
  }
}

TEST_CASE("branch dimension formula") {
  SpectralProfile p;
  p.positive = {{1.0, 3}};
  p.complexGroups = {{0.9, {{2.0, 2}}}};
  p.negative = {{1.0, 4}};  // k = 2
  BranchIndex idx;
  idx.u = {1};
  idx.mu = {{1}};
  // 2 [ 1*2 + 2*1*1 + 2^2 ] = 16
  CHECK(dimensionOf(p, idx) == 16);

  BranchIndex principal = principalBranchIndex(p);
  // 2 [ 0 + 0 + 4 ] = 8
  CHECK(dimensionOf(p, principal) == 8);
}

TEST_CASE("finiteness and count") {
  SpectralProfile fin;
  fin.positive = {{1.0, 1}, {4.0, 1}};
  fin.complexGroups = {{0.9, {{2.0, 1}}}};
  CHECK(isFinite(fin));
  // p = 2, n = 4 -> 2^3 roots
  CHECK(countIfFinite(fin) == 8);

  SpectralProfile inf1;
  inf1.positive = {{1.0, 2}};
  CHECK_FALSE(isFinite(inf1));
  CHECK_THROWS_AS(countIfFinite(inf1), CountUndefined);

  SpectralProfile inf2;
  inf2.negative = {{1.0, 2}};
  CHECK_FALSE(isFinite(inf2));
}

TEST_CASE("distinct positive spectrum: enumerated roots match the sign oracle") {
  const std::vector<double> d = {1.0, 4.0, 9.0};
  const Matrix c = testsupport::mildConjugator(3, 99);
  const Matrix m = c * Matrix::diagonal(d) * inverse(c);
  const RjsDecomposition dec = rjsDecompose(m, tol);
  const auto branches = enumerateBranches(dec.profile);
  REQUIRE(branches.size() == 8);

  // oracle: every sign pattern of C diag(+-1, +-2, +-3) C^{-1}
  std::vector<Matrix> oracle;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<double> diag;
    for (int i = 0; i < 3; ++i)
      diag.push_back((mask >> i & 1 ? 1.0 : -1.0) * std::sqrt(d[static_cast<size_t>(i)]));
    oracle.push_back(c * Matrix::diagonal(diag) * inverse(c));
  }
  for (const auto& idx : branches) {
    const Matrix y = representative(dec, idx, tol).representative;
    double best = 1e9;
    for (const auto& o : oracle) best = std::min(best, (y - o).frobeniusNorm());
    CHECK(best < 1e-8);
  }
}

TEST_CASE("generalized principal detection") {
  const Matrix m = Matrix::diagonal({4.0, 9.0});
  const RjsDecomposition dec = rjsDecompose(m, tol);
  const Matrix principal =
      representative(dec, principalBranchIndex(dec.profile), tol).representative;
  CHECK(isGeneralizedPrincipal(m, principal, tol));
  CHECK_FALSE(isGeneralizedPrincipal(m, Matrix::diagonal({-2.0, 3.0}), tol));
  // not a square root at all
  CHECK_FALSE(isGeneralizedPrincipal(m, Matrix::identity(2), tol));

  // -I_2: the unique roots are rotations by +-pi/2, arguments on the boundary
  const Matrix neg = -Matrix::identity(2);
  CHECK(isGeneralizedPrincipal(neg, rotationBlock(M_PI / 2.0), tol));
}

TEST_CASE("fixed point verification") {
  const Matrix m = Matrix::diagonal({4.0, 9.0});
  CHECK(verifyFixedPoint(m, Matrix::diagonal({2.0, 3.0}), tol));
  CHECK(verifyFixedPoint(m, Matrix::diagonal({-2.0, 3.0}), tol));
  CHECK_FALSE(verifyFixedPoint(m, Matrix::diagonal({2.0, 3.1}), tol));
  CHECK_THROWS_AS(verifyFixedPoint(m, Matrix(2), tol), SingularInput);
}
