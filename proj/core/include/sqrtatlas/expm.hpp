#pragma once

#include "sqrtatlas/matrix.hpp"

namespace sqrtatlas {

/// Matrix exponential, Pade order 6 with scaling so ||A / 2^s||_F <= 0.5.
Matrix expm(const Matrix& a);

}  // namespace sqrtatlas
