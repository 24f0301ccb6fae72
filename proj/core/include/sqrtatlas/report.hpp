#pragma once

#include <json.hpp>

#include "sqrtatlas/branches.hpp"

namespace sqrtatlas {

enum class AnalysisMode { Auto, General, Symmetric, Orthogonal };

struct AnalysisOptions {
  Tolerances tol;
  std::uint64_t seed = 0;
  AnalysisMode mode = AnalysisMode::Auto;
  std::vector<double> geodesicGrid = {-1.0, -0.5, 0.25, 0.5, 1.0};
  int certifySeeds = 3;
};

/// Full analysis: classification, existence, branch table with the SSR/OSR
/// specialization auto-selected for SPD/SO input. Every representative is
/// re-verified against Y^2 = M at emission time.
nlohmann::json analyzeReport(const Matrix& m, const AnalysisOptions& opt);

struct SqrtRequest {
  enum class Kind { Principal, Branch, Sample };
  Kind kind = Kind::Principal;
  BranchIndex index;
  std::uint64_t seed = 0;
};

/// One square root plus its residual ||Y^2 - M||_F.
std::pair<Matrix, double> computeSqrt(const Matrix& m, const SqrtRequest& req,
                                      const AnalysisOptions& opt);

struct CertifyResult {
  nlohmann::json report;
  bool ok = false;
};

/// Fixed-point, oracle-dimension, and totally-geodesic certifications.
CertifyResult certifyReport(const Matrix& m, const AnalysisOptions& opt);

/// Human-readable rendering of a report.
std::string prettyReport(const nlohmann::json& report);

}  // namespace sqrtatlas
