#pragma once

#include <string>

#include <json.hpp>

#include "sqrtatlas/matrix.hpp"

namespace sqrtatlas {

/// Parse a matrix file: JSON {"n": <int>, "rows": [[...], ...]} or
/// whitespace-delimited plain text (order inferred from the row count).
/// Throws ParseError.
Matrix readMatrixFile(const std::string& path);
Matrix parseMatrixText(const std::string& text);

/// Serialize with 17 significant digits so round-trips are bit-faithful.
nlohmann::json matrixToJson(const Matrix& m);
Matrix matrixFromJson(const nlohmann::json& j);

std::string formatDouble(double x);  // 17 significant digits

}  // namespace sqrtatlas
