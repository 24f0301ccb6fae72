#include "sqrtatlas/matrix.hpp"

namespace sqrtatlas {

Matrix rotationBlock(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return Matrix::fromRowMajor(2, {c, -s, s, c});
}

namespace {

template <class Scalar>
DenseMatrix<Scalar> directSumImpl(const std::vector<DenseMatrix<Scalar>>& blocks) {
  int n = 0;
  for (const auto& b : blocks) {
    assert(b.isSquare());
    n += b.order();
  }
  DenseMatrix<Scalar> out(n);
  int off = 0;
  for (const auto& b : blocks) {
    if (b.order() == 0) continue;  // I_0 blocks are skipped
    out.setBlock(off, off, b);
    off += b.order();
  }
  return out;
}

}  // namespace

Matrix directSum(const std::vector<Matrix>& blocks) { return directSumImpl(blocks); }

ComplexMatrix directSum(const std::vector<ComplexMatrix>& blocks) {
  return directSumImpl(blocks);
}

}  // namespace sqrtatlas
