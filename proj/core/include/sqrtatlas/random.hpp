#pragma once

#include <cstdint>

#include "sqrtatlas/matrix.hpp"

namespace sqrtatlas {

/// Seeded Gaussian matrices. Deterministic for a fixed seed.
Matrix randomGaussian(int rows, int cols, std::uint64_t seed);
ComplexMatrix randomComplexGaussian(int rows, int cols, std::uint64_t seed);

/// Haar-distributed orthogonal matrix: QR of a seeded Gaussian matrix with
/// the R diagonal sign absorbed into Q.
Matrix randomOrthogonal(int n, std::uint64_t seed);

/// Haar-distributed unitary matrix, same construction with phase correction.
ComplexMatrix randomUnitary(int m, std::uint64_t seed);

/// Seeded random element of GL_n: Gaussian entries, resampled (incremented
/// seed) while the condition estimate exceeds condCap.
Matrix randomInvertible(int n, std::uint64_t seed, double condCap = 1e8);
ComplexMatrix randomComplexInvertible(int n, std::uint64_t seed, double condCap = 1e8);

}  // namespace sqrtatlas
