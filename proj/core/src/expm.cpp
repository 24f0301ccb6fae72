#include "sqrtatlas/expm.hpp"

#include "sqrtatlas/linalg.hpp"

namespace sqrtatlas {

Matrix expm(const Matrix& a) {
  assert(a.isSquare());
  const int n = a.order();

  // Scale so ||A / 2^s|| <= 0.5, evaluate the (6,6) Pade approximant,
  // square back up.
  int s = 0;
  double norm = a.frobeniusNorm();
  while (norm > 0.5 && s < 60) {
    norm *= 0.5;
    ++s;
  }
  Matrix b = a;
  b *= std::ldexp(1.0, -s);

  // (6,6) Pade of exp around 0: N(b) (+-) with coefficients
  // c_k = (12-k)! 6! / (12! k! (6-k)!).
  const double c[7] = {1.0,
                       1.0 / 2.0,
                       5.0 / 44.0,
                       1.0 / 66.0,
                       1.0 / 792.0,
                       1.0 / 15840.0,
                       1.0 / 665280.0};
  const Matrix i = Matrix::identity(n);
  const Matrix b2 = b * b;
  const Matrix b4 = b2 * b2;
  const Matrix b6 = b4 * b2;
  // even part c0 I + c2 b^2 + c4 b^4 + c6 b^6, odd part b (c1 I + c3 b^2 + c5 b^4)
  Matrix even = c[0] * i + c[2] * b2 + c[4] * b4 + c[6] * b6;
  Matrix odd = b * (c[1] * i + c[3] * b2 + c[5] * b4);
  Matrix num = even + odd;
  Matrix den = even - odd;
  Matrix e = luSolve(den, num);

  for (int k = 0; k < s; ++k) e = e * e;
  return e;
}

}  // namespace sqrtatlas
