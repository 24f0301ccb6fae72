#include "sqrtatlas/branches.hpp"

#include <algorithm>

#include "sqrtatlas/eig.hpp"
#include "sqrtatlas/linalg.hpp"
#include "sqrtatlas/random.hpp"
#include "sqrtatlas/rho.hpp"

namespace sqrtatlas {

void validateIndex(const SpectralProfile& profile, const BranchIndex& index) {
  if (!hasRealSqrt(profile))
    throw ExistenceViolated("negative eigenvalue of odd multiplicity");
  if (static_cast<int>(index.u.size()) != profile.numPositive())
    throw IndexOutOfRange("branch index u-family has wrong length");
  for (size_t i = 0; i < index.u.size(); ++i)
    if (index.u[i] < 0 || index.u[i] > profile.positive[i].mult)
      throw IndexOutOfRange("u_i outside [0, h_i]");
  if (index.mu.size() != profile.complexGroups.size())
    throw IndexOutOfRange("branch index mu-family has wrong shape");
  for (size_t l = 0; l < index.mu.size(); ++l) {
    const auto& group = profile.complexGroups[l];
    if (index.mu[l].size() != group.moduli.size())
      throw IndexOutOfRange("branch index mu-family has wrong shape");
    for (size_t t = 0; t < index.mu[l].size(); ++t)
      if (index.mu[l][t] < 0 || index.mu[l][t] > group.moduli[t].mult)
        throw IndexOutOfRange("mu_lt outside [0, m_lt]");
  }
}

Matrix buildRja(const SpectralProfile& profile, const BranchIndex& index) {
  validateIndex(profile, index);
  std::vector<Matrix> blocks;
  for (size_t i = 0; i < profile.positive.size(); ++i) {
    const int h = profile.positive[i].mult;
    const int u = index.u[i];
    const double root = std::sqrt(profile.positive[i].lambda);
    Matrix d = Matrix::identity(h);
    for (int j = u; j < h; ++j) d(j, j) = -1.0;
    blocks.push_back(root * d);
  }
  for (size_t l = 0; l < profile.complexGroups.size(); ++l) {
    const auto& group = profile.complexGroups[l];
    const Matrix ePlus = rotationBlock(group.theta / 2.0);
    const Matrix eMinus = rotationBlock(group.theta / 2.0 - M_PI);
    for (size_t t = 0; t < group.moduli.size(); ++t) {
      const int m = group.moduli[t].mult;
      const int mu = index.mu[l][t];
      const double root = std::sqrt(group.moduli[t].rho);
      for (int rep = 0; rep < mu; ++rep) blocks.push_back(root * ePlus);
      for (int rep = mu; rep < m; ++rep) blocks.push_back(root * eMinus);
    }
  }
  for (const auto& c : profile.negative) {
    const int k = c.mult / 2;
    const double root = std::sqrt(c.zeta);
    const Matrix e = rotationBlock(M_PI / 2.0);
    for (int rep = 0; rep < k; ++rep) blocks.push_back(root * e);
  }
  if (blocks.empty()) return Matrix(0);
  return directSum(blocks);
}

std::vector<BranchIndex> enumerateBranches(const SpectralProfile& profile) {
  if (!hasRealSqrt(profile))
    throw ExistenceViolated("negative eigenvalue of odd multiplicity");

  // Flatten the index ranges: h_i then m_lt, in canonical order.
  std::vector<int> caps;
  for (const auto& c : profile.positive) caps.push_back(c.mult);
  for (const auto& g : profile.complexGroups)
    for (const auto& m : g.moduli) caps.push_back(m.mult);

  std::vector<BranchIndex> out;
  std::vector<int> cur(caps.size());
  for (size_t i = 0; i < caps.size(); ++i) cur[i] = caps[i];  // descending start

  auto emit = [&]() {
    BranchIndex idx;
    size_t pos = 0;
    idx.u.assign(cur.begin(), cur.begin() + profile.positive.size());
    pos = profile.positive.size();
    for (const auto& g : profile.complexGroups) {
      std::vector<int> mus;
      for (size_t t = 0; t < g.moduli.size(); ++t) mus.push_back(cur[pos++]);
      idx.mu.push_back(std::move(mus));
    }
    out.push_back(std::move(idx));
  };

  if (caps.empty()) {
    emit();  // the single (empty) index when p = r = 0
    return out;
  }
  while (true) {
    emit();
    // next index in lexicographically descending order
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

SqrtBranch representative(const RjsDecomposition& dec, const BranchIndex& index,
                          const Tolerances& tol) {
  SqrtBranch branch;
  branch.index = index;
  branch.rja = buildRja(dec.profile, index);
  branch.representative = dec.c * branch.rja * dec.cInv;
  branch.dimension = dimensionOf(dec.profile, index);
  const Matrix m = dec.c * dec.j * dec.cInv;
  branch.residual = (branch.representative * branch.representative - m).frobeniusNorm();
  if (branch.residual > residualBudget(tol, m.frobeniusNorm()))
    throw ResidualTooLarge("branch representative residual exceeds the budget");
  return branch;
}

namespace {

// Block-wise random element of the centralizer of the RJS form.
Matrix sampleCentralizer(const SpectralProfile& profile, std::uint64_t seed) {
  std::vector<Matrix> blocks;
  std::uint64_t s = seed;
  for (const auto& c : profile.positive)
    blocks.push_back(randomInvertible(c.mult, s++ * 0x9e3779b97f4a7c15ULL + 1));
  for (const auto& g : profile.complexGroups)
    for (const auto& m : g.moduli)
      blocks.push_back(rho(randomComplexInvertible(m.mult, s++ * 0x9e3779b97f4a7c15ULL + 2)));
  for (const auto& c : profile.negative)
    blocks.push_back(randomInvertible(c.mult, s++ * 0x9e3779b97f4a7c15ULL + 3));
  if (blocks.empty()) return Matrix(0);
  return directSum(blocks);
}

}  // namespace

Matrix sampleBranch(const RjsDecomposition& dec, const BranchIndex& index,
                    std::uint64_t seed, const Tolerances& tol) {
  const Matrix rja = buildRja(dec.profile, index);
  const Matrix x = sampleCentralizer(dec.profile, seed);
  const Matrix y = dec.c * x * rja * inverse(x) * dec.cInv;
  const Matrix m = dec.c * dec.j * dec.cInv;
  const double resid = (y * y - m).frobeniusNorm();
  if (resid > residualBudget(tol, m.frobeniusNorm()))
    throw ResidualTooLarge("sampled branch element residual exceeds the budget");
  return y;
}

int dimensionOf(const SpectralProfile& profile, const BranchIndex& index) {
  validateIndex(profile, index);
  long acc = 0;
  for (size_t i = 0; i < profile.positive.size(); ++i) {
    const long u = index.u[i];
    acc += u * (profile.positive[i].mult - u);
  }
  for (size_t l = 0; l < profile.complexGroups.size(); ++l)
    for (size_t t = 0; t < profile.complexGroups[l].moduli.size(); ++t) {
      const long mu = index.mu[l][t];
      acc += 2 * mu * (profile.complexGroups[l].moduli[t].mult - mu);
    }
  for (const auto& c : profile.negative) {
    const long k = c.mult / 2;
    acc += k * k;
  }
  return static_cast<int>(2 * acc);
}

bool isFinite(const SpectralProfile& profile) {
  if (!hasRealSqrt(profile))
    throw ExistenceViolated("negative eigenvalue of odd multiplicity");
  if (!profile.negative.empty()) return false;
  for (const auto& c : profile.positive)
    if (c.mult != 1) return false;
  for (const auto& g : profile.complexGroups)
    for (const auto& m : g.moduli)
      if (m.mult != 1) return false;
  return true;
}

long countIfFinite(const SpectralProfile& profile) {
  if (!isFinite(profile))
    throw CountUndefined("the square-root set is a positive-dimensional manifold");
  const int p = profile.numPositive();
  const int n = profile.order();
  return 1L << ((p + n) / 2);
}

BranchIndex principalBranchIndex(const SpectralProfile& profile) {
  if (!hasRealSqrt(profile))
    throw ExistenceViolated("negative eigenvalue of odd multiplicity");
  BranchIndex idx;
  for (const auto& c : profile.positive) idx.u.push_back(c.mult);
  for (const auto& g : profile.complexGroups) {
    std::vector<int> mus;
    for (const auto& m : g.moduli) mus.push_back(m.mult);
    idx.mu.push_back(std::move(mus));
  }
  return idx;
}

bool isGeneralizedPrincipal(const Matrix& m, const Matrix& y, const Tolerances& tol) {
  if ((y * y - m).frobeniusNorm() > residualBudget(tol, m.frobeniusNorm())) return false;
  const double slack = clusterRadius(tol, y.frobeniusNorm());
  for (const std::complex<double>& v : eigenvalues(y)) {
    const double arg = std::arg(v);
    if (arg > M_PI / 2.0 + slack || arg < -M_PI / 2.0 - slack) return false;
  }
  return true;
}

bool verifyFixedPoint(const Matrix& m, const Matrix& y, const Tolerances& tol) {
  if (rcondEstimate(y) <= tol.rankTol)
    throw SingularInput("candidate square root is singular");
  const Matrix diff = m * inverse(y) - y;
  return diff.frobeniusNorm() <= residualBudget(tol, y.frobeniusNorm());
}

}  // namespace sqrtatlas
