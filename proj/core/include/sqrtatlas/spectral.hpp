#pragma once

#include "sqrtatlas/matrix.hpp"

namespace sqrtatlas {

/// Clustered eigenstructure of a non-singular semisimple matrix, in the
/// canonical order: positive eigenvalues ascending, complex groups by angle
/// ascending (moduli ascending within a group), negative eigenvalues by
/// magnitude ascending.
struct SpectralProfile {
  struct PositiveCluster {
    double lambda;  // > 0
    int mult;       // h_i >= 1
  };
  struct ComplexModulus {
    double rho;  // > 0
    int mult;    // m_lt >= 1, per conjugate pair
  };
  struct ComplexGroup {
    double theta;  // in (0, pi)
    std::vector<ComplexModulus> moduli;
  };
  struct NegativeCluster {
    double zeta;  // eigenvalue is -zeta, zeta > 0
    int mult;     // total multiplicity (even iff a real root exists)
  };

  std::vector<PositiveCluster> positive;
  std::vector<ComplexGroup> complexGroups;
  std::vector<NegativeCluster> negative;

  int order() const;          // n
  int numPositive() const { return static_cast<int>(positive.size()); }   // p
  int numNegative() const { return static_cast<int>(negative.size()); }   // q
  /// Flattened complex multiplicities in canonical order (m_11 .. m_rs_r).
  std::vector<int> complexMults() const;
};

/// Profile plus the real Jordan standard form J and a conjugator C with
/// M = C J C^{-1}.
struct RjsDecomposition {
  SpectralProfile profile;
  Matrix j;
  Matrix c;
  Matrix cInv;
  double residual = 0.0;  // ||C J C^{-1} - M||_F
  bool conjugatorIsOrthogonal = false;
};

/// Cluster the spectrum of a non-singular matrix into the three families.
/// Throws SingularInput, AmbiguousSpectrum (mixed real/non-real cluster).
SpectralProfile classifySpectrum(const Matrix& m, const Tolerances& tol);

/// Assemble the RJS form from a profile, in canonical order.
Matrix buildRjs(const SpectralProfile& profile);

/// True iff every eigenvalue cluster has geometric multiplicity (computed on
/// the complexification) equal to its algebraic multiplicity.
bool checkSemisimple(const Matrix& m, const Tolerances& tol);

/// Real-square-root existence: every negative cluster has even multiplicity.
bool hasRealSqrt(const SpectralProfile& profile);

/// Build the RJS form and the conjugator. C is made orthogonal when M is
/// detected symmetric or orthogonal within the residual budget.
RjsDecomposition rjsDecompose(const Matrix& m, const Tolerances& tol);

/// Basis of the Lie algebra of the centralizer of the RJS form, in block
/// form: gl_{h_i} per positive cluster, the rho image of gl_{m_lt}(C) per
/// complex modulus, gl_{2k_i} per negative cluster.
std::vector<Matrix> centralizerBasis(const SpectralProfile& profile);

}  // namespace sqrtatlas
