#pragma once

#include <stdexcept>
#include <string>

namespace sqrtatlas {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SingularInput : Error {
  explicit SingularInput(const std::string& msg) : Error(msg) {}
};

struct DefectiveInput : Error {
  explicit DefectiveInput(const std::string& msg) : Error(msg) {}
};

struct NonConvergence : Error {
  explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

// A negative eigenvalue has odd multiplicity: no real square root exists.
struct ExistenceViolated : Error {
  explicit ExistenceViolated(const std::string& msg) : Error(msg) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

struct ResidualTooLarge : Error {
  explicit ResidualTooLarge(const std::string& msg) : Error(msg) {}
};

struct NotSpd : Error {
  explicit NotSpd(const std::string& msg) : Error(msg) {}
};

struct NotSpecialOrthogonal : Error {
  explicit NotSpecialOrthogonal(const std::string& msg) : Error(msg) {}
};

struct NotSkew : Error {
  explicit NotSkew(const std::string& msg) : Error(msg) {}
};

struct CountUndefined : Error {
  explicit CountUndefined(const std::string& msg) : Error(msg) {}
};

// Eigenvalue clusters mixing real and non-real values within tolerance.
struct AmbiguousSpectrum : Error {
  explicit AmbiguousSpectrum(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace sqrtatlas
