#include "sqrtatlas/eig.hpp"

#include <algorithm>
#include <limits>

#include "sqrtatlas/svd.hpp"

namespace sqrtatlas {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIters = 60;  // per eigenvalue

double sign(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

// Householder reduction to upper Hessenberg form (similarity, orthogonal).
void hessenberg(Matrix& a) {
  const int n = a.order();
  for (int k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (int i = k + 1; i < n; ++i) xnorm += a(i, k) * a(i, k);
    xnorm = std::sqrt(xnorm);
    if (xnorm <= kEps * std::max(1.0, a.frobeniusNorm())) continue;
    const double alpha = -sign(xnorm, a(k + 1, k));
    std::vector<double> v(static_cast<size_t>(n), 0.0);
    for (int i = k + 1; i < n; ++i) v[static_cast<size_t>(i)] = a(i, k);
    v[static_cast<size_t>(k + 1)] -= alpha;
    double vnorm2 = 0.0;
    for (int i = k + 1; i < n; ++i) vnorm2 += v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    // A <- P A, P = I - beta v v^T
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int i = k + 1; i < n; ++i) s += v[static_cast<size_t>(i)] * a(i, j);
      s *= beta;
      for (int i = k + 1; i < n; ++i) a(i, j) -= s * v[static_cast<size_t>(i)];
    }
    // A <- A P
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = k + 1; j < n; ++j) s += a(i, j) * v[static_cast<size_t>(j)];
      s *= beta;
      for (int j = k + 1; j < n; ++j) a(i, j) -= s * v[static_cast<size_t>(j)];
    }
  }
}

// Francis double-shift QR on an upper Hessenberg matrix. Classic hqr; the
// 1-based indexing of the reference formulation is kept via the accessor.
void hqr(Matrix& mat, std::vector<double>& wr, std::vector<double>& wi) {
  const int n = mat.order();
  wr.assign(static_cast<size_t>(n), 0.0);
  wi.assign(static_cast<size_t>(n), 0.0);
  auto a = [&](int i, int j) -> double& { return mat(i - 1, j - 1); };
  auto setr = [&](int i, double v) { wr[static_cast<size_t>(i - 1)] = v; };
  auto seti = [&](int i, double v) { wi[static_cast<size_t>(i - 1)] = v; };

  double anorm = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::abs(a(i, j));
  if (anorm == 0.0) return;  // zero matrix

  int nn = n;
  double t = 0.0;
  while (nn >= 1) {
    int its = 0;
    int l;
    do {
      for (l = nn; l >= 2; --l) {
        double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) <= kEps * s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      double x = a(nn, nn);
      if (l == nn) {
        setr(nn, x + t);
        seti(nn, 0.0);
        --nn;
      } else {
        double y = a(nn - 1, nn - 1);
        double w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          double p = 0.5 * (y - x);
          double q = p * p + w;
          double z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign(z, p);
            setr(nn - 1, x + z);
            setr(nn, x + z);
            if (z != 0.0) setr(nn, x - w / z);
            seti(nn - 1, 0.0);
            seti(nn, 0.0);
          } else {
            setr(nn - 1, x + p);
            setr(nn, x + p);
            seti(nn, z);
            seti(nn - 1, -z);
          }
          nn -= 2;
        } else {
          if (its == kMaxIters)
            throw NonConvergence("QR iteration exceeded the iteration cap");
          if (its != 0 && its % 10 == 0) {
            // exceptional shift
            t += x;
            for (int i = 1; i <= nn; ++i) a(i, i) -= x;
            double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int m;
          double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
          for (m = nn - 2; m >= l; --m) {
            z = a(m, m);
            double rr = x - z;
            double s = y - z;
            p = (rr * s - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - rr - s;
            r = a(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v = std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) +
                                            std::abs(a(m + 1, m + 1)));
            if (u <= kEps * v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            a(i, i - 2) = 0.0;
            if (i != m + 2) a(i, i - 3) = 0.0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0.0;
              if (k != nn - 1) r = a(k + 2, k - 1);
              x = std::abs(p) + std::abs(q) + std::abs(r);
              if (x != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            double s = sign(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == m) {
              if (l != m) a(k, k - 1) = -a(k, k - 1);
            } else {
              a(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {
              p = a(k, j) + q * a(k + 1, j);
              if (k != nn - 1) {
                p += r * a(k + 2, j);
                a(k + 2, j) -= p * z;
              }
              a(k + 1, j) -= p * y;
              a(k, j) -= p * x;
            }
            const int mmin = nn < k + 3 ? nn : k + 3;
            for (int i = l; i <= mmin; ++i) {
              p = x * a(i, k) + y * a(i, k + 1);
              if (k != nn - 1) {
                p += z * a(i, k + 2);
                a(i, k + 2) -= p * r;
              }
              a(i, k + 1) -= p * q;
              a(i, k) -= p;
            }
          }
        }
      }
    } while (l < nn - 1 && nn >= 1);
  }
}

}  // namespace

std::vector<std::complex<double>> eigenvalues(const Matrix& a) {
  assert(a.isSquare());
  Matrix h = a;
  hessenberg(h);
  std::vector<double> wr, wi;
  hqr(h, wr, wi);
  std::vector<std::complex<double>> out(wr.size());
  for (size_t i = 0; i < wr.size(); ++i) out[i] = {wr[i], wi[i]};
  return out;
}

std::vector<EigenPair> eig(const Matrix& a, const Tolerances& tol) {
  const int n = a.order();
  const std::vector<std::complex<double>> vals = eigenvalues(a);
  const double radius = clusterRadius(tol, a.frobeniusNorm());

  // Single-linkage clustering in C.
  std::vector<int> label(static_cast<size_t>(n), -1);
  int nextLabel = 0;
  for (int i = 0; i < n; ++i) {
    if (label[static_cast<size_t>(i)] >= 0) continue;
    label[static_cast<size_t>(i)] = nextLabel;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int j = 0; j < n; ++j) {
        if (label[static_cast<size_t>(j)] >= 0) continue;
        for (int k = 0; k < n; ++k) {
          if (label[static_cast<size_t>(k)] != nextLabel) continue;
          if (std::abs(vals[static_cast<size_t>(j)] - vals[static_cast<size_t>(k)]) <= radius) {
            label[static_cast<size_t>(j)] = nextLabel;
            grew = true;
            break;
          }
        }
      }
    }
    ++nextLabel;
  }

  std::vector<EigenPair> pairs;
  pairs.reserve(static_cast<size_t>(n));
  const ComplexMatrix ac = complexify(a);
  for (int lab = 0; lab < nextLabel; ++lab) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (label[static_cast<size_t>(i)] == lab) members.push_back(i);
    std::complex<double> center{};
    for (int i : members) center += vals[static_cast<size_t>(i)];
    center /= static_cast<double>(members.size());

    ComplexMatrix shifted = ac;
    for (int i = 0; i < n; ++i) shifted(i, i) -= center;
    const ComplexMatrix basis = nullspace(shifted, tol, a.frobeniusNorm());
    const int found = basis.cols();
    for (size_t idx = 0; idx < members.size(); ++idx) {
      EigenPair p;
      p.value = vals[static_cast<size_t>(members[idx])];
      p.vector.resize(static_cast<size_t>(n));
      const int col = found > 0 ? static_cast<int>(idx % static_cast<size_t>(found)) : -1;
      if (col >= 0)
        for (int i = 0; i < n; ++i) p.vector[static_cast<size_t>(i)] = basis(i, col);
      pairs.push_back(std::move(p));
    }
  }

  // Stable reporting order: by real part, then imaginary part.
  std::sort(pairs.begin(), pairs.end(), [](const EigenPair& x, const EigenPair& y) {
    if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
    return x.value.imag() < y.value.imag();
  });
  return pairs;
}

}  // namespace sqrtatlas
