#include "sqrtatlas/rho.hpp"

namespace sqrtatlas {

Matrix rho(const ComplexMatrix& z) {
  assert(z.isSquare());
  const int h = z.order();
  Matrix out(2 * h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      const double re = z(i, j).real();
      const double im = z(i, j).imag();
      out(2 * i, 2 * j) = re;
      out(2 * i, 2 * j + 1) = -im;
      out(2 * i + 1, 2 * j) = im;
      out(2 * i + 1, 2 * j + 1) = re;
    }
  return out;
}

}  // namespace sqrtatlas
