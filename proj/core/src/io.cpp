#include "sqrtatlas/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sqrtatlas/errors.hpp"

namespace sqrtatlas {

std::string formatDouble(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

nlohmann::json matrixToJson(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"n", m.rows()}, {"rows", std::move(rows)}};
}

Matrix matrixFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
    throw ParseError("matrix JSON needs fields \"n\" and \"rows\"");
  const auto& jn = j.at("n");
  const auto& rows = j.at("rows");
  if (!jn.is_number_integer() || !rows.is_array())
    throw ParseError("matrix JSON: \"n\" must be an integer, \"rows\" an array");
  const int n = jn.get<int>();
  if (n <= 0) throw ParseError("matrix order must be positive");
  if (static_cast<int>(rows.size()) != n)
    throw ParseError("row count does not match \"n\"");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows.at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError("each row must hold exactly n numbers");
    for (int j2 = 0; j2 < n; ++j2) {
      const auto& v = row.at(static_cast<size_t>(j2));
      if (!v.is_number()) throw ParseError("matrix entries must be numbers");
      m(i, j2) = v.get<double>();
    }
  }
  if (!m.allFinite()) throw ParseError("matrix entries must be finite");
  return m;
}

Matrix parseMatrixText(const std::string& text) {
  // try JSON first, fall back to whitespace-delimited rows
  {
    const nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (!j.is_discarded()) return matrixFromJson(j);
  }
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::vector<double> row;
    std::string tok;
    while (fields >> tok) {
      try {
        size_t used = 0;
        row.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw ParseError("bad number: " + tok);
      } catch (const std::invalid_argument&) {
        throw ParseError("bad number: " + tok);
      } catch (const std::out_of_range&) {
        throw ParseError("number out of range: " + tok);
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix file");
  const int n = static_cast<int>(rows.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
      throw ParseError("matrix must be square: row length mismatch");
    for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  if (!m.allFinite()) throw ParseError("matrix entries must be finite");
  return m;
}

Matrix readMatrixFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parseMatrixText(buf.str());
}

}  // namespace sqrtatlas
