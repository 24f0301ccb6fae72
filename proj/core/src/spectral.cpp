#include "sqrtatlas/spectral.hpp"

#include <algorithm>
#include <map>

#include "sqrtatlas/eig.hpp"
#include "sqrtatlas/linalg.hpp"
#include "sqrtatlas/rho.hpp"
#include "sqrtatlas/svd.hpp"

namespace sqrtatlas {

int SpectralProfile::order() const {
  int n = 0;
  for (const auto& c : positive) n += c.mult;
  for (const auto& g : complexGroups)
    for (const auto& m : g.moduli) n += 2 * m.mult;
  for (const auto& c : negative) n += c.mult;
  return n;
}

std::vector<int> SpectralProfile::complexMults() const {
  std::vector<int> out;
  for (const auto& g : complexGroups)
    for (const auto& m : g.moduli) out.push_back(m.mult);
  return out;
}

namespace {

void requireNonSingular(const Matrix& m, const Tolerances& tol) {
  const std::vector<double> s = singularValues(m);
  if (s.empty() || s.front() == 0.0 || s.back() <= tol.rankTol * s.front())
    throw SingularInput("matrix is singular (or numerically so)");
}

// Single-linkage clusters of points in C with the given radius.
std::vector<std::vector<int>> clusterPoints(const std::vector<std::complex<double>>& pts,
                                            double radius) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> label(static_cast<size_t>(n), -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (label[static_cast<size_t>(i)] >= 0) continue;
    label[static_cast<size_t>(i)] = next;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int j = 0; j < n; ++j) {
        if (label[static_cast<size_t>(j)] >= 0) continue;
        for (int k = 0; k < n; ++k) {
          if (label[static_cast<size_t>(k)] != next) continue;
          if (std::abs(pts[static_cast<size_t>(j)] - pts[static_cast<size_t>(k)]) <= radius) {
            label[static_cast<size_t>(j)] = next;
            grew = true;
            break;
          }
        }
        if (grew) break;
      }
    }
    ++next;
  }
  std::vector<std::vector<int>> clusters(static_cast<size_t>(next));
  for (int i = 0; i < n; ++i) clusters[static_cast<size_t>(label[static_cast<size_t>(i)])].push_back(i);
  return clusters;
}

}  // namespace

SpectralProfile classifySpectrum(const Matrix& m, const Tolerances& tol) {
  requireNonSingular(m, tol);
  const std::vector<std::complex<double>> vals = eigenvalues(m);
  const double radius = clusterRadius(tol, m.frobeniusNorm());
  const auto clusters = clusterPoints(vals, radius);

  struct ComplexCluster {
    double theta;
    double rho;
    int mult;
  };
  SpectralProfile profile;
  std::vector<ComplexCluster> complexClusters;

  for (const auto& cluster : clusters) {
    int nReal = 0, nPos = 0, nNeg = 0;
    std::complex<double> mean{};
    for (int idx : cluster) {
      const std::complex<double> v = vals[static_cast<size_t>(idx)];
      mean += v;
      if (std::abs(v.imag()) <= radius)
        ++nReal;
      else if (v.imag() > 0.0)
        ++nPos;
      else
        ++nNeg;
    }
    mean /= static_cast<double>(cluster.size());

    if (nReal > 0 && (nPos > 0 || nNeg > 0))
      throw AmbiguousSpectrum("eigenvalue cluster mixes real and non-real values");
    if (nReal == 0 && nPos > 0 && nNeg > 0)
      throw AmbiguousSpectrum("near-real conjugate pair collapses into one cluster");

    if (nReal > 0) {
      if (mean.real() > 0.0)
        profile.positive.push_back({mean.real(), static_cast<int>(cluster.size())});
      else
        profile.negative.push_back({-mean.real(), static_cast<int>(cluster.size())});
    } else if (nPos > 0) {
      // one entry per conjugate pair; the nNeg-only mirror cluster is skipped
      complexClusters.push_back({std::arg(mean), std::abs(mean), static_cast<int>(cluster.size())});
    }
  }

  std::sort(profile.positive.begin(), profile.positive.end(),
            [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
  std::sort(profile.negative.begin(), profile.negative.end(),
            [](const auto& a, const auto& b) { return a.zeta < b.zeta; });

  // Group complex clusters by angle (single linkage on theta), then sort.
  std::sort(complexClusters.begin(), complexClusters.end(),
            [](const auto& a, const auto& b) { return a.theta < b.theta; });
  const double angleRadius = tol.clusterTol;
  for (size_t i = 0; i < complexClusters.size(); ++i) {
    if (i == 0 || complexClusters[i].theta - complexClusters[i - 1].theta > angleRadius) {
      profile.complexGroups.push_back({complexClusters[i].theta, {}});
    }
    profile.complexGroups.back().moduli.push_back(
        {complexClusters[i].rho, complexClusters[i].mult});
  }
  for (auto& g : profile.complexGroups)
    std::sort(g.moduli.begin(), g.moduli.end(),
              [](const auto& a, const auto& b) { return a.rho < b.rho; });
  return profile;
}

Matrix buildRjs(const SpectralProfile& profile) {
  std::vector<Matrix> blocks;
  for (const auto& c : profile.positive) {
    blocks.push_back(c.lambda * Matrix::identity(c.mult));
  }
  for (const auto& g : profile.complexGroups) {
    const Matrix e = rotationBlock(g.theta);
    for (const auto& m : g.moduli)
      for (int rep = 0; rep < m.mult; ++rep) blocks.push_back(m.rho * e);
  }
  for (const auto& c : profile.negative) {
    blocks.push_back(-c.zeta * Matrix::identity(c.mult));
  }
  return directSum(blocks);
}

bool checkSemisimple(const Matrix& m, const Tolerances& tol) {
  requireNonSingular(m, tol);
  const int n = m.order();
  const std::vector<std::complex<double>> vals = eigenvalues(m);
  const double radius = clusterRadius(tol, m.frobeniusNorm());
  const ComplexMatrix mc = complexify(m);
  auto nullity = [&](std::complex<double> mu) {
    ComplexMatrix shifted = mc;
    for (int i = 0; i < n; ++i) shifted(i, i) -= mu;
    return n - svdRank(shifted, tol, m.frobeniusNorm());
  };
  auto clusterMean = [&](const std::vector<int>& cluster) {
    std::complex<double> mean{};
    for (int idx : cluster) mean += vals[static_cast<size_t>(idx)];
    return mean / static_cast<double>(cluster.size());
  };
  for (const auto& cluster : clusterPoints(vals, radius)) {
    if (nullity(clusterMean(cluster)) != static_cast<int>(cluster.size()))
      return false;
  }
  // A defective eigenvalue can split wider than the cluster radius once the
  // Jordan structure amplifies roundoff (the split grows like a root of eps).
  // Re-cluster coarsely: if a coarse mean is still numerically an eigenvalue
  // but its nullity falls short of the coarse multiplicity, the eigenvectors
  // have collapsed. A genuinely separated semisimple group gives nullity 0
  // at the coarse mean and is left alone.
  const double coarse =
      std::sqrt(tol.rankTol) * std::max(1.0, m.frobeniusNorm());
  for (const auto& cluster : clusterPoints(vals, coarse)) {
    if (cluster.size() < 2) continue;
    const int nu = nullity(clusterMean(cluster));
    if (nu > 0 && nu < static_cast<int>(cluster.size())) return false;
  }
  return true;
}

bool hasRealSqrt(const SpectralProfile& profile) {
  for (const auto& c : profile.negative)
    if (c.mult % 2 != 0) return false;
  return true;
}

namespace {

// Real columns spanning the invariant plane pair so that the restriction of
// M to them is rho E_theta: eigenvector w of rho e^{-i theta} gives columns
// (Re w, Im w).
void appendComplexColumns(Matrix& c, int& col, const ComplexMatrix& basis,
                          bool orthonormalize) {
  const int n = c.rows();
  const double scale = orthonormalize ? std::sqrt(2.0) : 1.0;
  for (int j = 0; j < basis.cols(); ++j) {
    for (int i = 0; i < n; ++i) {
      c(i, col) = scale * basis(i, j).real();
      c(i, col + 1) = scale * basis(i, j).imag();
    }
    col += 2;
  }
}

}  // namespace

RjsDecomposition rjsDecompose(const Matrix& m, const Tolerances& tol) {
  const int n = m.order();
  const SpectralProfile profile = classifySpectrum(m, tol);
  if (!checkSemisimple(m, tol))
    throw DefectiveInput("matrix is not semisimple");

  const double budget = residualBudget(tol, m.frobeniusNorm());
  const bool symmetric = symmetryDefect(m) <= budget;
  const bool orthogonal = orthogonalityDefect(m) <= budget;
  const bool wantOrthogonalC = symmetric || orthogonal;

  const ComplexMatrix mc = complexify(m);
  auto realEigenbasis = [&](double lambda, int mult) {
    ComplexMatrix shifted = mc;
    for (int i = 0; i < n; ++i) shifted(i, i) -= lambda;
    const ComplexMatrix basis = nullspace(shifted, tol, m.frobeniusNorm());
    if (basis.cols() < mult)
      throw DefectiveInput("eigenspace smaller than algebraic multiplicity");
    return realPart(basis.block(0, 0, n, mult));
  };

  Matrix c(n, n);
  int col = 0;
  for (const auto& cl : profile.positive) {
    c.setBlock(0, col, realEigenbasis(cl.lambda, cl.mult));
    col += cl.mult;
  }
  for (const auto& g : profile.complexGroups)
    for (const auto& mod : g.moduli) {
      const std::complex<double> lambda =
          mod.rho * std::exp(std::complex<double>(0.0, -g.theta));
      ComplexMatrix shifted = mc;
      for (int i = 0; i < n; ++i) shifted(i, i) -= lambda;
      const ComplexMatrix basis = nullspace(shifted, tol, m.frobeniusNorm());
      if (basis.cols() < mod.mult)
        throw DefectiveInput("eigenspace smaller than algebraic multiplicity");
      appendComplexColumns(c, col, basis.block(0, 0, n, mod.mult), wantOrthogonalC);
    }
  for (const auto& cl : profile.negative) {
    c.setBlock(0, col, realEigenbasis(-cl.zeta, cl.mult));
    col += cl.mult;
  }
  assert(col == n);

  RjsDecomposition dec;
  dec.profile = profile;
  dec.j = buildRjs(profile);
  dec.conjugatorIsOrthogonal = wantOrthogonalC && orthogonalityDefect(c) <= budget;
  dec.c = c;
  dec.cInv = dec.conjugatorIsOrthogonal ? c.transpose() : inverse(c);
  dec.residual = (dec.c * dec.j * dec.cInv - m).frobeniusNorm();
  if (dec.residual > budget)
    throw ResidualTooLarge("RJS reconstruction residual exceeds the budget");
  return dec;
}

std::vector<Matrix> centralizerBasis(const SpectralProfile& profile) {
  const int n = profile.order();
  std::vector<Matrix> basis;

  auto fullGl = [&](int offset, int size) {
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b) {
        Matrix e(n);
        e(offset + a, offset + b) = 1.0;
        basis.push_back(std::move(e));
      }
  };

  int off = 0;
  for (const auto& c : profile.positive) {
    fullGl(off, c.mult);
    off += c.mult;
  }
  for (const auto& g : profile.complexGroups)
    for (const auto& mod : g.moduli) {
      const int h = mod.mult;
      // rho image of gl_h(C): real and imaginary elementary matrices
      for (int a = 0; a < h; ++a)
        for (int b = 0; b < h; ++b)
          for (int part = 0; part < 2; ++part) {
            ComplexMatrix e(h);
            e(a, b) = part == 0 ? std::complex<double>(1.0, 0.0)
                                : std::complex<double>(0.0, 1.0);
            Matrix block = rho(e);
            Matrix full(n);
            full.setBlock(off, off, block);
            basis.push_back(std::move(full));
          }
      off += 2 * h;
    }
  for (const auto& c : profile.negative) {
    if (c.mult % 2 != 0)
      throw ExistenceViolated("negative eigenvalue of odd multiplicity");
    fullGl(off, c.mult);
    off += c.mult;
  }
  return basis;
}

}  // namespace sqrtatlas
