#pragma once

#include <cstdint>

#include "sqrtatlas/spectral.hpp"

namespace sqrtatlas {

/// Trace metric g_A(V, W) = tr(A^{-1} V A^{-1} W) on GL_n.
double traceMetric(const Matrix& a, const Matrix& v, const Matrix& w);

/// Trace-metric geodesic through A with initial velocity V:
/// gamma(t) = A expm(t A^{-1} V).
Matrix geodesic(const Matrix& a, const Matrix& v, double t);

/// Spanning set of the branch tangent space at Y: commutators [W', Y] with
/// W' ranging over C * (centralizer Lie algebra basis) * C^{-1}. Possibly
/// linearly dependent; rank it with tangentRankDimension.
std::vector<Matrix> orbitTangentBasis(const RjsDecomposition& dec, const Matrix& y);

enum class TangentRestriction { None, Symmetric, Orthogonal };

/// Numerical dimension of the branch through Y: rank of the (optionally
/// restricted) orbit tangent span. Restrictions project onto symmetric
/// matrices or onto the tangent space of O_n at Y before re-ranking.
int tangentRankDimension(const RjsDecomposition& dec, const Matrix& y,
                         TangentRestriction restriction, const Tolerances& tol);

struct GeodesicCertificate {
  double maxResidual = 0.0;  // max_t ||gamma(t)^2 - M||_F over the grid
  Matrix tangent;            // the unit tangent that was used
};

/// Draw a random tangent in the orbit tangent span at Y, normalize it, and
/// record the worst ||gamma(t)^2 - M|| over the grid. Small residuals certify
/// that geodesics tangent to the branch stay inside the solution set.
GeodesicCertificate certifyTotallyGeodesic(const RjsDecomposition& dec,
                                           const Matrix& y, std::uint64_t seed,
                                           const std::vector<double>& grid);

enum class IsometryKind { Inversion, LeftTranslation, RightTranslation, Conjugation, Congruence };

/// Verify g_{F(A)}(dF V, dF W) = g_A(V, W) on seeded sample triples.
bool isometryCheck(IsometryKind kind, const Matrix& m0, int samples,
                   std::uint64_t seed, const Tolerances& tol);

}  // namespace sqrtatlas
