#pragma once

#include "sqrtatlas/matrix.hpp"

namespace sqrtatlas {

/// Real embedding of an h x h complex matrix into a 2h x 2h real matrix:
/// each entry z becomes Re(z) I_2 + Im(z) E_{pi/2}. Multiplicative, and
/// rho(Z^*) = rho(Z)^T.
Matrix rho(const ComplexMatrix& z);

}  // namespace sqrtatlas
