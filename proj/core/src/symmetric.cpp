#include "sqrtatlas/symmetric.hpp"

#include "sqrtatlas/linalg.hpp"
#include "sqrtatlas/random.hpp"

namespace sqrtatlas {

void requireSpd(const RjsDecomposition& dec, const Tolerances& tol) {
  const Matrix m = dec.c * dec.j * dec.cInv;
  if (symmetryDefect(m) > residualBudget(tol, m.frobeniusNorm()))
    throw NotSpd("matrix is not symmetric");
  if (!dec.profile.complexGroups.empty() || !dec.profile.negative.empty())
    throw NotSpd("matrix has non-positive eigenvalues");
  if (!dec.conjugatorIsOrthogonal)
    throw NotSpd("conjugator is not orthogonal");
  for (const auto& c : dec.profile.positive)
    if (c.lambda <= tol.clusterTol) throw NotSpd("eigenvalue too close to zero");
}

namespace {

Matrix ssrRja(const SpectralProfile& profile, const std::vector<int>& u) {
  BranchIndex idx;
  idx.u = u;
  return buildRja(profile, idx);
}

// Tuples (u_1..u_p), lexicographically descending.
std::vector<std::vector<int>> enumerateTuples(const SpectralProfile& profile) {
  std::vector<int> caps;
  for (const auto& c : profile.positive) caps.push_back(c.mult);
  std::vector<std::vector<int>> out;
  std::vector<int> cur = caps;
  while (true) {
    out.push_back(cur);
    int pos = static_cast<int>(caps.size()) - 1;
    while (pos >= 0 && cur[static_cast<size_t>(pos)] == 0) {
      cur[static_cast<size_t>(pos)] = caps[static_cast<size_t>(pos)];
      --pos;
    }
    if (pos < 0) break;
    --cur[static_cast<size_t>(pos)];
  }
  return out;
}

}  // namespace

std::vector<SsrBranch> enumerateSsrBranches(const RjsDecomposition& dec,
                                            const Tolerances& tol) {
  requireSpd(dec, tol);
  const Matrix m = dec.c * dec.j * dec.c.transpose();
  std::vector<SsrBranch> out;
  for (const auto& u : enumerateTuples(dec.profile)) {
    SsrBranch b;
    b.u = u;
    b.rja = ssrRja(dec.profile, u);
    b.representative = dec.c * b.rja * dec.c.transpose();
    int dim = 0, uTotal = 0;
    for (size_t i = 0; i < u.size(); ++i) {
      dim += u[i] * (dec.profile.positive[i].mult - u[i]);
      uTotal += u[i];
    }
    b.dimension = dim;
    b.signatureU = uTotal;
    b.residual = (b.representative * b.representative - m).frobeniusNorm();
    if (b.residual > residualBudget(tol, m.frobeniusNorm()))
      throw ResidualTooLarge("SSR representative residual exceeds the budget");
    out.push_back(std::move(b));
  }
  return out;
}

Matrix sampleSsrBranch(const RjsDecomposition& dec, const std::vector<int>& u,
                       std::uint64_t seed, const Tolerances& tol) {
  requireSpd(dec, tol);
  if (u.size() != dec.profile.positive.size())
    throw IndexOutOfRange("u-tuple has wrong length");
  std::vector<Matrix> blocks;
  std::uint64_t s = seed;
  for (const auto& c : dec.profile.positive)
    blocks.push_back(randomOrthogonal(c.mult, s++ * 0x9e3779b97f4a7c15ULL + 11));
  const Matrix x = directSum(blocks);
  const Matrix rja = ssrRja(dec.profile, u);
  const Matrix y = dec.c * x * rja * x.transpose() * dec.c.transpose();
  const Matrix m = dec.c * dec.j * dec.c.transpose();
  if ((y * y - m).frobeniusNorm() > residualBudget(tol, m.frobeniusNorm()))
    throw ResidualTooLarge("SSR sample residual exceeds the budget");
  return y;
}

Matrix principalSpdSqrt(const RjsDecomposition& dec, const Tolerances& tol) {
  requireSpd(dec, tol);
  std::vector<int> u;
  for (const auto& c : dec.profile.positive) u.push_back(c.mult);
  return dec.c * ssrRja(dec.profile, u) * dec.c.transpose();
}

Matrix negativeSpdSqrt(const RjsDecomposition& dec, const Tolerances& tol) {
  requireSpd(dec, tol);
  const std::vector<int> u(dec.profile.positive.size(), 0);
  return dec.c * ssrRja(dec.profile, u) * dec.c.transpose();
}

long ssrComponentCount(const SpectralProfile& profile) {
  if (!profile.complexGroups.empty() || !profile.negative.empty())
    throw NotSpd("matrix has non-positive eigenvalues");
  long count = 1;
  for (const auto& c : profile.positive) count *= c.mult + 1;
  return count;
}

}  // namespace sqrtatlas
