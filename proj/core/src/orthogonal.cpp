#include "sqrtatlas/orthogonal.hpp"

#include <algorithm>

#include "sqrtatlas/linalg.hpp"
#include "sqrtatlas/random.hpp"
#include "sqrtatlas/rho.hpp"

namespace sqrtatlas {

int OsrProfile::order() const {
  int n = h + 2 * k;
  for (const auto& a : angles) n += 2 * a.mult;
  return n;
}

OsrProfile osrProfileOf(const SpectralProfile& profile, const Tolerances& tol) {
  OsrProfile out;
  for (const auto& c : profile.positive) {
    if (std::abs(c.lambda - 1.0) > clusterRadius(tol, 1.0) * 100)
      throw NotSpecialOrthogonal("positive eigenvalue away from 1");
    out.h += c.mult;
  }
  for (const auto& g : profile.complexGroups) {
    int mult = 0;
    for (const auto& m : g.moduli) {
      if (std::abs(m.rho - 1.0) > clusterRadius(tol, 1.0) * 100)
        throw NotSpecialOrthogonal("complex eigenvalue off the unit circle");
      mult += m.mult;
    }
    out.angles.push_back({g.theta, mult});
  }
  for (const auto& c : profile.negative) {
    if (std::abs(c.zeta - 1.0) > clusterRadius(tol, 1.0) * 100)
      throw NotSpecialOrthogonal("negative eigenvalue away from -1");
    if (c.mult % 2 != 0)
      throw NotSpecialOrthogonal("matrix is in O_n^-: no real square roots exist");
    out.k += c.mult / 2;
  }
  return out;
}

OsrProfile osrProfile(const Matrix& m, const Tolerances& tol) {
  if (orthogonalityDefect(m) > residualBudget(tol, m.frobeniusNorm()))
    throw NotSpecialOrthogonal("matrix is not orthogonal");
  if (determinant(m) < 0.0)
    throw NotSpecialOrthogonal("matrix is in O_n^-: no real square roots exist");
  return osrProfileOf(classifySpectrum(m, tol), tol);
}

namespace {

Matrix osrRja(const OsrProfile& profile, int u, const std::vector<int>& mu) {
  std::vector<Matrix> blocks;
  Matrix idPos = Matrix::identity(u);
  Matrix idNeg = -1.0 * Matrix::identity(profile.h - u);
  blocks.push_back(idPos);
  blocks.push_back(idNeg);
  for (size_t j = 0; j < profile.angles.size(); ++j) {
    const double half = profile.angles[j].theta / 2.0;
    for (int rep = 0; rep < mu[j]; ++rep) blocks.push_back(rotationBlock(half));
    for (int rep = mu[j]; rep < profile.angles[j].mult; ++rep)
      blocks.push_back(rotationBlock(half - M_PI));
  }
  for (int rep = 0; rep < profile.k; ++rep) blocks.push_back(rotationBlock(M_PI / 2.0));
  return directSum(blocks);
}

void validateOsrIndex(const OsrProfile& profile, int u, const std::vector<int>& mu) {
  if (u < 0 || u > profile.h) throw IndexOutOfRange("u outside [0, h]");
  if (mu.size() != profile.angles.size())
    throw IndexOutOfRange("mu-family has wrong length");
  for (size_t j = 0; j < mu.size(); ++j)
    if (mu[j] < 0 || mu[j] > profile.angles[j].mult)
      throw IndexOutOfRange("mu_j outside [0, m_j]");
}

int osrDimension(const OsrProfile& profile, int u, const std::vector<int>& mu) {
  int dim = u * (profile.h - u) + profile.k * (profile.k - 1);
  for (size_t j = 0; j < mu.size(); ++j)
    dim += 2 * mu[j] * (profile.angles[j].mult - mu[j]);
  return dim;
}

void requireOrthogonalConjugator(const RjsDecomposition& dec) {
  if (!dec.conjugatorIsOrthogonal)
    throw NotSpecialOrthogonal("conjugator is not orthogonal");
}

}  // namespace

int detSignOf(int h, int u) { return (h - u) % 2 == 0 ? 1 : -1; }

std::vector<OsrBranch> enumerateOsrBranches(const RjsDecomposition& dec,
                                            const OsrProfile& profile,
                                            const Tolerances& tol) {
  requireOrthogonalConjugator(dec);
  const Matrix m = dec.c * dec.j * dec.c.transpose();
  const double budget = residualBudget(tol, m.frobeniusNorm());

  std::vector<int> caps;
  caps.push_back(profile.h);
  for (const auto& a : profile.angles) caps.push_back(a.mult);

  std::vector<OsrBranch> out;
  std::vector<int> cur = caps;
  while (true) {
    OsrBranch b;
    b.u = cur[0];
    b.mu.assign(cur.begin() + 1, cur.end());
    b.rja = osrRja(profile, b.u, b.mu);
    b.representative = dec.c * b.rja * dec.c.transpose();
    b.dimension = osrDimension(profile, b.u, b.mu);
    b.detSign = detSignOf(profile.h, b.u);
    b.componentCount = profile.k == 0 ? 1 : 2;
    b.residual = (b.representative * b.representative - m).frobeniusNorm();
    if (b.residual > budget)
      throw ResidualTooLarge("OSR representative residual exceeds the budget");
    out.push_back(std::move(b));

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

Matrix sampleOsrBranch(const RjsDecomposition& dec, const OsrProfile& profile,
                       int u, const std::vector<int>& mu, std::uint64_t seed,
                       const Tolerances& tol, OsrComponent component) {
  requireOrthogonalConjugator(dec);
  validateOsrIndex(profile, u, mu);

  std::vector<Matrix> blocks;
  std::uint64_t s = seed;
  blocks.push_back(randomOrthogonal(profile.h, s++ * 0x9e3779b97f4a7c15ULL + 21));
  for (const auto& a : profile.angles)
    blocks.push_back(rho(randomUnitary(a.mult, s++ * 0x9e3779b97f4a7c15ULL + 22)));
  Matrix w = randomOrthogonal(2 * profile.k, s++ * 0x9e3779b97f4a7c15ULL + 23);
  if (profile.k > 0) {
    const bool wantPlus = component == OsrComponent::Plus;
    if ((determinant(w) > 0.0) != wantPlus) {
      // flip into the other component of O_{2k}
      for (int i = 0; i < 2 * profile.k; ++i) w(i, 0) = -w(i, 0);
    }
  }
  blocks.push_back(w);
  const Matrix x = directSum(blocks);

  const Matrix rja = osrRja(profile, u, mu);
  const Matrix y = dec.c * x * rja * x.transpose() * dec.c.transpose();
  const Matrix m = dec.c * dec.j * dec.c.transpose();
  if ((y * y - m).frobeniusNorm() > residualBudget(tol, m.frobeniusNorm()))
    throw ResidualTooLarge("OSR sample residual exceeds the budget");
  return y;
}

std::pair<std::vector<OsrBranch>, std::vector<OsrBranch>> splitByDet(
    const std::vector<OsrBranch>& branches) {
  std::pair<std::vector<OsrBranch>, std::vector<OsrBranch>> out;
  for (const auto& b : branches) {
    if (b.detSign > 0)
      out.first.push_back(b);
    else
      out.second.push_back(b);
  }
  return out;
}

int pfaffianSign(const Matrix& a, const Tolerances& tol) {
  const int n = a.order();
  if (n % 2 != 0) throw NotSkew("pfaffian needs even order");
  if (skewDefect(a) > residualBudget(tol, a.frobeniusNorm()))
    throw NotSkew("matrix is not skew-symmetric");

  // Parlett-Reid: skew tridiagonalization by congruence with pivoting;
  // pf = prod of superdiagonal pivots times the permutation sign, in the
  // convention pf([[0,1],[-1,0]]) = 1. Ours flips that per 2x2 block:
  // pf(E_{pi/2}) = +1, hence the (-1)^{n/2} at the end.
  Matrix w = a;
  double pf = 1.0;
  for (int k = 0; k + 1 < n; k += 2) {
    // pivot: bring the largest |w(i, k)|, i > k, into row k+1
    int piv = k + 1;
    double best = std::abs(w(k + 1, k));
    for (int i = k + 2; i < n; ++i)
      if (std::abs(w(i, k)) > best) {
        best = std::abs(w(i, k));
        piv = i;
      }
    if (best == 0.0) throw SingularInput("skew matrix is singular");
    if (piv != k + 1) {
      for (int j = 0; j < n; ++j) std::swap(w(k + 1, j), w(piv, j));
      for (int i = 0; i < n; ++i) std::swap(w(i, k + 1), w(i, piv));
      pf = -pf;
    }
    pf *= w(k, k + 1);
    if (k + 2 >= n) break;
    // trailing update: W += tau b^T - b tau^T with tau = W(:,k)/W(k+1,k),
    // b = W(:,k+1), restricted to the trailing block
    std::vector<double> tau(static_cast<size_t>(n), 0.0), bcol(static_cast<size_t>(n), 0.0);
    for (int i = k + 2; i < n; ++i) {
      tau[static_cast<size_t>(i)] = w(i, k) / w(k + 1, k);
      bcol[static_cast<size_t>(i)] = w(i, k + 1);
    }
    for (int i = k + 2; i < n; ++i)
      for (int j = k + 2; j < n; ++j)
        w(i, j) += tau[static_cast<size_t>(i)] * bcol[static_cast<size_t>(j)] -
                   bcol[static_cast<size_t>(i)] * tau[static_cast<size_t>(j)];
  }
  const int flip = (n / 2) % 2 == 0 ? 1 : -1;
  return (pf > 0.0 ? 1 : -1) * flip;
}

OsrBranch principalOrthogonalBranch(const RjsDecomposition& dec,
                                    const OsrProfile& profile,
                                    const Tolerances& tol) {
  requireOrthogonalConjugator(dec);
  const Matrix m = dec.c * dec.j * dec.c.transpose();
  OsrBranch b;
  b.u = profile.h;
  for (const auto& a : profile.angles) b.mu.push_back(a.mult);
  b.rja = osrRja(profile, b.u, b.mu);
  b.representative = dec.c * b.rja * dec.c.transpose();
  b.dimension = osrDimension(profile, b.u, b.mu);
  b.detSign = detSignOf(profile.h, b.u);
  b.componentCount = profile.k == 0 ? 1 : 2;
  b.residual = (b.representative * b.representative - m).frobeniusNorm();
  if (b.residual > residualBudget(tol, m.frobeniusNorm()))
    throw ResidualTooLarge("POSR representative residual exceeds the budget");
  return b;
}

}  // namespace sqrtatlas
