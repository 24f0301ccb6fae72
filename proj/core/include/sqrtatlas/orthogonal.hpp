#pragma once

#include <cstdint>

#include "sqrtatlas/branches.hpp"

namespace sqrtatlas {

/// Spectrum of a special-orthogonal matrix: eigenvalue 1 with multiplicity h,
/// conjugate pairs e^{+-i theta_j} with multiplicity m_j, eigenvalue -1 with
/// multiplicity 2k.
struct OsrProfile {
  struct Angle {
    double theta;  // in (0, pi)
    int mult;      // m_j >= 1
  };
  int h = 0;
  std::vector<Angle> angles;
  int k = 0;

  int order() const;
};

/// One branch of orthogonal square roots.
struct OsrBranch {
  int u = 0;                // 0 <= u <= h
  std::vector<int> mu;      // 0 <= mu_j <= m_j
  Matrix rja;
  Matrix representative;    // orthogonal, Y^2 = M
  int dimension = 0;        // u(h-u) + 2 sum mu_j (m_j - mu_j) + k(k-1)
  int detSign = 1;          // (-1)^{h-u}
  int componentCount = 1;   // 1 if k = 0, else 2
  double residual = 0.0;
};

/// Classify M in SO_n; throws NotSpecialOrthogonal for non-orthogonal input
/// and for O_n^- (which has no real square roots at all).
OsrProfile osrProfile(const Matrix& m, const Tolerances& tol);

OsrProfile osrProfileOf(const SpectralProfile& profile, const Tolerances& tol);

/// One branch per (u, mu_1 .. mu_r), descending (principal first).
std::vector<OsrBranch> enumerateOsrBranches(const RjsDecomposition& dec,
                                            const OsrProfile& profile,
                                            const Tolerances& tol);

/// Which component of the O_{2k}/U_k factor to target when k >= 1: the
/// O_{2k} block of X is drawn in SO_{2k} (PLUS) or O_{2k}^- (MINUS).
enum class OsrComponent { Plus, Minus };

Matrix sampleOsrBranch(const RjsDecomposition& dec, const OsrProfile& profile,
                       int u, const std::vector<int>& mu, std::uint64_t seed,
                       const Tolerances& tol,
                       OsrComponent component = OsrComponent::Plus);

int detSignOf(int h, int u);

/// Partition branches by det(Y) = (-1)^{h-u}.
std::pair<std::vector<OsrBranch>, std::vector<OsrBranch>> splitByDet(
    const std::vector<OsrBranch>& branches);

/// Sign of the pfaffian of a non-singular even-order skew-symmetric matrix,
/// by Parlett-Reid skew tridiagonalization with sign tracking.
/// Convention: pf([[0,-1],[1,0]]) = pf(E_{pi/2}) = +1, extended
/// multiplicatively over blocks.
int pfaffianSign(const Matrix& a, const Tolerances& tol);

/// The (u = h, mu_j = m_j) branch.
OsrBranch principalOrthogonalBranch(const RjsDecomposition& dec,
                                    const OsrProfile& profile,
                                    const Tolerances& tol);

}  // namespace sqrtatlas
