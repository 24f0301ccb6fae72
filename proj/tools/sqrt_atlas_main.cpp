#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sqrtatlas/io.hpp"
#include "sqrtatlas/report.hpp"

namespace {

using namespace sqrtatlas;

struct CommonFlags {
  std::string path;
  double tol = -1.0;
  std::uint64_t seed = 0;
  std::string mode = "auto";
  bool pretty = false;
};

void addCommon(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("matrix", flags.path, "matrix file (JSON or whitespace text)")
      ->required();
  cmd->add_option("--tol", flags.tol, "residual tolerance (cluster/rank scale with it)");
  cmd->add_option("--seed", flags.seed, "random seed");
  cmd->add_option("--mode", flags.mode, "auto|general|symmetric|orthogonal")
      ->check(CLI::IsMember({"auto", "general", "symmetric", "orthogonal"}));
  cmd->add_flag("--pretty", flags.pretty, "human-readable output");
}

AnalysisOptions makeOptions(const CommonFlags& flags) {
  AnalysisOptions opt;
  double tol = -1.0;
  if (const char* env = std::getenv("SQRT_ATLAS_TOL")) {
    try {
      tol = std::stod(env);
    } catch (const std::exception&) {
      throw ParseError("SQRT_ATLAS_TOL is not a number");
    }
  }
  if (flags.tol > 0.0) tol = flags.tol;  // flag wins over the env var
  if (tol > 0.0) {
    opt.tol.residTol = tol;
    opt.tol.clusterTol = tol;
    opt.tol.rankTol = tol;
  }
  opt.seed = flags.seed;
  if (flags.mode == "general")
    opt.mode = AnalysisMode::General;
  else if (flags.mode == "symmetric")
    opt.mode = AnalysisMode::Symmetric;
  else if (flags.mode == "orthogonal")
    opt.mode = AnalysisMode::Orthogonal;
  else
    opt.mode = AnalysisMode::Auto;
  return opt;
}

BranchIndex parseIndex(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw IndexOutOfRange("branch index must be JSON like {\"u\":[...],\"mu\":[[...]]}");
  BranchIndex idx;
  try {
    if (j.contains("u")) idx.u = j.at("u").get<std::vector<int>>();
    if (j.contains("mu")) idx.mu = j.at("mu").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw IndexOutOfRange("malformed branch index");
  }
  return idx;
}

int failureExit(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 2;
  if (dynamic_cast<const SingularInput*>(&e)) return 3;
  if (dynamic_cast<const DefectiveInput*>(&e)) return 4;
  if (dynamic_cast<const AmbiguousSpectrum*>(&e)) return 4;
  if (dynamic_cast<const ExistenceViolated*>(&e)) return 5;
  if (dynamic_cast<const IndexOutOfRange*>(&e)) return 6;
  if (dynamic_cast<const ResidualTooLarge*>(&e)) return 7;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"square-root atlas: classify, enumerate and certify real matrix square roots"};
  app.require_subcommand(1);

  CommonFlags analyzeFlags, sqrtFlags, certifyFlags;
  CLI::App* analyze = app.add_subcommand("analyze", "spectral classification and branch table");
  addCommon(analyze, analyzeFlags);

  CLI::App* sqrtCmd = app.add_subcommand("sqrt", "emit one square root");
  addCommon(sqrtCmd, sqrtFlags);
  bool principal = false, wantSample = false;
  std::string indexText;
  sqrtCmd->add_flag("--principal", principal, "principal branch representative (default)");
  sqrtCmd->add_option("--branch", indexText,
                      "branch index JSON, e.g. {\"u\":[0,1],\"mu\":[]}");
  sqrtCmd->add_flag("--sample", wantSample, "random element of the chosen branch");

  CLI::App* certify = app.add_subcommand("certify", "fixed-point, dimension and geodesic checks");
  addCommon(certify, certifyFlags);
  std::vector<double> grid;
  int seeds = -1;
  certify->add_option("--geodesic-grid", grid, "geodesic parameter values t");
  certify->add_option("--seeds", seeds, "tangent samples per branch");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      const AnalysisOptions opt = makeOptions(analyzeFlags);
      const Matrix m = readMatrixFile(analyzeFlags.path);
      const nlohmann::json report = analyzeReport(m, opt);
      if (analyzeFlags.pretty)
        std::cout << prettyReport(report);
      else
        std::cout << report.dump() << "\n";
      return 0;
    }
    if (sqrtCmd->parsed()) {
      const AnalysisOptions opt = makeOptions(sqrtFlags);
      const Matrix m = readMatrixFile(sqrtFlags.path);
      SqrtRequest req;
      req.seed = opt.seed;
      if (!indexText.empty()) {
        req.kind = wantSample ? SqrtRequest::Kind::Sample : SqrtRequest::Kind::Branch;
        req.index = parseIndex(indexText);
      } else if (wantSample) {
        throw IndexOutOfRange("--sample needs --branch <index>");
      } else {
        req.kind = SqrtRequest::Kind::Principal;
      }
      const auto [y, residual] = computeSqrt(m, req, opt);
      if (sqrtFlags.pretty) {
        for (int i = 0; i < y.rows(); ++i) {
          for (int j = 0; j < y.cols(); ++j)
            std::cout << (j ? " " : "") << formatDouble(y(i, j));
          std::cout << "\n";
        }
        std::cout << "residual " << formatDouble(residual) << "\n";
      } else {
        nlohmann::json out = matrixToJson(y);
        out["residual"] = residual;
        std::cout << out.dump() << "\n";
      }
      return 0;
    }
    // certify
    AnalysisOptions opt = makeOptions(certifyFlags);
    if (!grid.empty()) opt.geodesicGrid = grid;
    if (seeds > 0) opt.certifySeeds = seeds;
    const Matrix m = readMatrixFile(certifyFlags.path);
    const CertifyResult result = certifyReport(m, opt);
    if (certifyFlags.pretty)
      std::cout << prettyReport(result.report);
    else
      std::cout << result.report.dump() << "\n";
    if (!result.ok) {
      std::cerr << "certification failed: "
                << result.report["worstOffender"]["what"].get<std::string>() << "\n";
      return 7;
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failureExit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
