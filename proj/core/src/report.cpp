#include "sqrtatlas/report.hpp"

#include <sstream>

#include "sqrtatlas/geometry.hpp"
#include "sqrtatlas/io.hpp"
#include "sqrtatlas/linalg.hpp"
#include "sqrtatlas/orthogonal.hpp"
#include "sqrtatlas/symmetric.hpp"

namespace sqrtatlas {

namespace {

nlohmann::json profileJson(const SpectralProfile& p) {
  nlohmann::json out;
  out["positive"] = nlohmann::json::array();
  for (const auto& c : p.positive)
    out["positive"].push_back({{"lambda", c.lambda}, {"mult", c.mult}});
  out["complex"] = nlohmann::json::array();
  for (const auto& g : p.complexGroups) {
    nlohmann::json moduli = nlohmann::json::array();
    for (const auto& m : g.moduli)
      moduli.push_back({{"rho", m.rho}, {"mult", m.mult}});
    out["complex"].push_back({{"theta", g.theta}, {"moduli", std::move(moduli)}});
  }
  out["negative"] = nlohmann::json::array();
  for (const auto& c : p.negative)
    out["negative"].push_back({{"zeta", c.zeta}, {"mult", c.mult}});
  return out;
}

nlohmann::json indexJson(const BranchIndex& idx) {
  return {{"u", idx.u}, {"mu", idx.mu}};
}

const char* modeName(AnalysisMode m) {
  switch (m) {
    case AnalysisMode::Auto: return "auto";
    case AnalysisMode::General: return "general";
    case AnalysisMode::Symmetric: return "symmetric";
    case AnalysisMode::Orthogonal: return "orthogonal";
  }
  return "general";
}

bool isSpd(const RjsDecomposition& dec, const Tolerances& tol) {
  try {
    requireSpd(dec, tol);
    return true;
  } catch (const NotSpd&) {
    return false;
  }
}

bool isSo(const Matrix& m, const RjsDecomposition& dec, const Tolerances& tol) {
  if (!dec.conjugatorIsOrthogonal) return false;
  try {
    osrProfile(m, tol);
    return true;
  } catch (const NotSpecialOrthogonal&) {
    return false;
  }
}

AnalysisMode resolveMode(const Matrix& m, const RjsDecomposition& dec,
                         const AnalysisOptions& opt) {
  switch (opt.mode) {
    case AnalysisMode::General:
      return AnalysisMode::General;
    case AnalysisMode::Symmetric:
      requireSpd(dec, opt.tol);  // throws NotSpd when forced on a non-SPD input
      return AnalysisMode::Symmetric;
    case AnalysisMode::Orthogonal:
      osrProfile(m, opt.tol);
      return AnalysisMode::Orthogonal;
    case AnalysisMode::Auto:
      break;
  }
  if (isSpd(dec, opt.tol)) return AnalysisMode::Symmetric;
  if (isSo(m, dec, opt.tol)) return AnalysisMode::Orthogonal;
  return AnalysisMode::General;
}

// Flatten a general branch index to the per-angle mu of an OSR profile.
std::vector<int> flattenMu(const BranchIndex& idx) {
  std::vector<int> mu;
  for (const auto& group : idx.mu) {
    int total = 0;
    for (int v : group) total += v;
    mu.push_back(total);
  }
  return mu;
}

}  // namespace

nlohmann::json analyzeReport(const Matrix& m, const AnalysisOptions& opt) {
  const RjsDecomposition dec = rjsDecompose(m, opt.tol);
  if (!hasRealSqrt(dec.profile))
    throw ExistenceViolated("negative eigenvalue of odd multiplicity");
  const AnalysisMode mode = resolveMode(m, dec, opt);

  nlohmann::json report;
  report["input"] = {{"order", m.order()},
                     {"frobeniusNorm", m.frobeniusNorm()},
                     {"determinant", determinant(m)}};
  report["tolerances"] = {{"clusterTol", opt.tol.clusterTol},
                          {"residTol", opt.tol.residTol},
                          {"rankTol", opt.tol.rankTol}};
  report["seed"] = opt.seed;
  report["mode"] = modeName(mode);
  report["profile"] = profileJson(dec.profile);
  report["existence"] = true;
  report["decompositionResidual"] = dec.residual;
  report["finite"] = isFinite(dec.profile);
  if (report["finite"].get<bool>())
    report["count"] = countIfFinite(dec.profile);

  bool allFixed = true;
  nlohmann::json branches = nlohmann::json::array();
  const int q = static_cast<int>(dec.profile.negative.size());

  if (mode == AnalysisMode::Symmetric) {
    report["componentCountTotal"] = ssrComponentCount(dec.profile);
    for (const auto& b : enumerateSsrBranches(dec, opt.tol)) {
      nlohmann::json e;
      e["index"] = {{"u", b.u}};
      e["dimension"] = b.dimension;
      int ambient = 0;
      for (size_t i = 0; i < b.u.size(); ++i)
        ambient += 2 * b.u[i] * (dec.profile.positive[i].mult - b.u[i]);
      e["ambientDimension"] = ambient;
      e["signature"] = {b.signatureU, m.order() - b.signatureU};
      e["componentCount"] = 1;
      e["representative"] = matrixToJson(b.representative);
      e["residual"] = b.residual;
      const bool fixed = verifyFixedPoint(m, b.representative, opt.tol);
      e["fixedPoint"] = fixed;
      allFixed = allFixed && fixed;
      branches.push_back(std::move(e));
    }
  } else if (mode == AnalysisMode::Orthogonal) {
    const OsrProfile osr = osrProfile(m, opt.tol);
    for (const auto& b : enumerateOsrBranches(dec, osr, opt.tol)) {
      nlohmann::json e;
      e["index"] = {{"u", b.u}, {"mu", b.mu}};
      e["dimension"] = b.dimension;
      int ambient = 2 * b.u * (osr.h - b.u) + 2 * osr.k * osr.k;
      for (size_t j = 0; j < b.mu.size(); ++j)
        ambient += 4 * b.mu[j] * (osr.angles[j].mult - b.mu[j]);
      e["ambientDimension"] = ambient;
      e["detSign"] = b.detSign;
      e["componentCount"] = b.componentCount;
      e["representative"] = matrixToJson(b.representative);
      e["residual"] = b.residual;
      const bool fixed = verifyFixedPoint(m, b.representative, opt.tol);
      e["fixedPoint"] = fixed;
      allFixed = allFixed && fixed;
      branches.push_back(std::move(e));
    }
  } else {
    const BranchIndex principal = principalBranchIndex(dec.profile);
    for (const auto& idx : enumerateBranches(dec.profile)) {
      const SqrtBranch b = representative(dec, idx, opt.tol);
      nlohmann::json e;
      e["index"] = indexJson(idx);
      e["dimension"] = b.dimension;
      if (idx == principal) {
        e["principal"] = true;
        e["componentCount"] = 1L << q;
      } else {
        e["componentCount"] = nullptr;  // not established for non-principal branches
      }
      e["representative"] = matrixToJson(b.representative);
      e["residual"] = b.residual;
      const bool fixed = verifyFixedPoint(m, b.representative, opt.tol);
      e["fixedPoint"] = fixed;
      allFixed = allFixed && fixed;
      branches.push_back(std::move(e));
    }
  }
  report["branches"] = std::move(branches);
  report["certifications"] = {{"fixedPoint", allFixed}};
  return report;
}

std::pair<Matrix, double> computeSqrt(const Matrix& m, const SqrtRequest& req,
                                      const AnalysisOptions& opt) {
  const RjsDecomposition dec = rjsDecompose(m, opt.tol);
  if (!hasRealSqrt(dec.profile))
    throw ExistenceViolated("negative eigenvalue of odd multiplicity");
  const AnalysisMode mode = resolveMode(m, dec, opt);

  Matrix y(m.order());
  switch (req.kind) {
    case SqrtRequest::Kind::Principal: {
      if (mode == AnalysisMode::Symmetric) {
        y = principalSpdSqrt(dec, opt.tol);
      } else {
        const BranchIndex idx = principalBranchIndex(dec.profile);
        y = representative(dec, idx, opt.tol).representative;
      }
      break;
    }
    case SqrtRequest::Kind::Branch:
      y = representative(dec, req.index, opt.tol).representative;
      break;
    case SqrtRequest::Kind::Sample: {
      if (mode == AnalysisMode::Symmetric) {
        validateIndex(dec.profile, req.index);
        y = sampleSsrBranch(dec, req.index.u, req.seed, opt.tol);
      } else if (mode == AnalysisMode::Orthogonal) {
        validateIndex(dec.profile, req.index);
        const OsrProfile osr = osrProfileOf(dec.profile, opt.tol);
        int u = 0;
        for (int v : req.index.u) u += v;
        y = sampleOsrBranch(dec, osr, u, flattenMu(req.index), req.seed, opt.tol);
      } else {
        y = sampleBranch(dec, req.index, req.seed, opt.tol);
      }
      break;
    }
  }
  const double residual = (y * y - m).frobeniusNorm();
  return {y, residual};
}

CertifyResult certifyReport(const Matrix& m, const AnalysisOptions& opt) {
  const RjsDecomposition dec = rjsDecompose(m, opt.tol);
  if (!hasRealSqrt(dec.profile))
    throw ExistenceViolated("negative eigenvalue of odd multiplicity");
  const AnalysisMode mode = resolveMode(m, dec, opt);
  const double budget = residualBudget(opt.tol, m.frobeniusNorm());

  CertifyResult result;
  result.ok = true;
  nlohmann::json& report = result.report;
  report["input"] = {{"order", m.order()},
                     {"frobeniusNorm", m.frobeniusNorm()},
                     {"determinant", determinant(m)}};
  report["tolerances"] = {{"clusterTol", opt.tol.clusterTol},
                          {"residTol", opt.tol.residTol},
                          {"rankTol", opt.tol.rankTol}};
  report["seed"] = opt.seed;
  report["mode"] = modeName(mode);

  struct Entry {
    nlohmann::json index;
    Matrix rep;
    int dimension;
    TangentRestriction restriction;
  };
  std::vector<Entry> entries;
  if (mode == AnalysisMode::Symmetric) {
    for (const auto& b : enumerateSsrBranches(dec, opt.tol))
      entries.push_back({nlohmann::json{{"u", b.u}}, b.representative,
                         b.dimension, TangentRestriction::Symmetric});
  } else if (mode == AnalysisMode::Orthogonal) {
    const OsrProfile osr = osrProfile(m, opt.tol);
    for (const auto& b : enumerateOsrBranches(dec, osr, opt.tol))
      entries.push_back({nlohmann::json{{"u", b.u}, {"mu", b.mu}},
                         b.representative, b.dimension,
                         TangentRestriction::Orthogonal});
  } else {
    for (const auto& idx : enumerateBranches(dec.profile)) {
      const SqrtBranch b = representative(dec, idx, opt.tol);
      entries.push_back({indexJson(idx), b.representative, b.dimension,
                         TangentRestriction::None});
    }
  }

  double worst = 0.0;
  std::string worstWhat = "none";
  auto noteWorst = [&](double value, const std::string& what) {
    if (value > worst) {
      worst = value;
      worstWhat = what;
    }
  };

  nlohmann::json branches = nlohmann::json::array();
  for (const auto& entry : entries) {
    nlohmann::json e;
    e["index"] = entry.index;
    e["dimension"] = entry.dimension;

    const bool fixed = verifyFixedPoint(m, entry.rep, opt.tol);
    e["fixedPoint"] = fixed;
    if (!fixed) {
      result.ok = false;
      noteWorst((m * inverse(entry.rep) - entry.rep).frobeniusNorm(),
                "fixed-point residual at " + entry.index.dump());
    }

    const int oracle =
        tangentRankDimension(dec, entry.rep, entry.restriction, opt.tol);
    e["oracleDimension"] = oracle;
    e["dimensionMatch"] = oracle == entry.dimension;
    if (oracle != entry.dimension) {
      result.ok = false;
      noteWorst(std::abs(oracle - entry.dimension),
                "dimension mismatch at " + entry.index.dump());
    }

    double maxGeo = 0.0;
    for (int s = 0; s < opt.certifySeeds; ++s) {
      const GeodesicCertificate cert =
          certifyTotallyGeodesic(dec, entry.rep, opt.seed + static_cast<std::uint64_t>(s),
                                 opt.geodesicGrid);
      maxGeo = std::max(maxGeo, cert.maxResidual);
    }
    e["geodesicMaxResidual"] = maxGeo;
    if (maxGeo > budget) {
      result.ok = false;
      noteWorst(maxGeo, "geodesic residual at " + entry.index.dump());
    }
    branches.push_back(std::move(e));
  }
  report["branches"] = std::move(branches);

  // skew roots carry a pfaffian sign separating the two components
  if (mode == AnalysisMode::Orthogonal) {
    const OsrProfile osr = osrProfile(m, opt.tol);
    if (osr.k > 0 && osr.h == 0 && osr.angles.empty()) {
      nlohmann::json pfaff;
      for (OsrComponent comp : {OsrComponent::Plus, OsrComponent::Minus}) {
        const Matrix y = sampleOsrBranch(dec, osr, 0, {}, opt.seed, opt.tol, comp);
        const char* name = comp == OsrComponent::Plus ? "plus" : "minus";
        try {
          pfaff[name] = pfaffianSign(y, opt.tol);
        } catch (const NotSkew&) {
          pfaff[name] = nullptr;
        }
      }
      report["pfaffianSigns"] = std::move(pfaff);
    }
  }

  report["ok"] = result.ok;
  if (!result.ok)
    report["worstOffender"] = {{"value", worst}, {"what", worstWhat}};
  return result;
}

std::string prettyReport(const nlohmann::json& report) {
  std::ostringstream out;
  if (report.contains("input")) {
    const auto& in = report["input"];
    out << "input: order " << in["order"].get<int>() << ", |M|_F "
        << formatDouble(in["frobeniusNorm"].get<double>()) << ", det "
        << formatDouble(in["determinant"].get<double>()) << "\n";
  }
  if (report.contains("mode"))
    out << "mode: " << report["mode"].get<std::string>() << "\n";
  if (report.contains("profile")) {
    const auto& p = report["profile"];
    out << "spectrum:";
    for (const auto& c : p["positive"])
      out << " " << formatDouble(c["lambda"].get<double>()) << "^"
          << c["mult"].get<int>();
    for (const auto& g : p["complex"])
      for (const auto& m : g["moduli"])
        out << " (" << formatDouble(m["rho"].get<double>()) << ", theta "
            << formatDouble(g["theta"].get<double>()) << ")^" << m["mult"].get<int>();
    for (const auto& c : p["negative"])
      out << " -" << formatDouble(c["zeta"].get<double>()) << "^"
          << c["mult"].get<int>();
    out << "\n";
  }
  if (report.contains("finite")) {
    if (report["finite"].get<bool>())
      out << "finite: " << report["count"].get<long>() << " roots\n";
    else
      out << "finite: no (positive-dimensional branches)\n";
  }
  if (report.contains("branches")) {
    out << "branches (" << report["branches"].size() << "):\n";
    for (const auto& b : report["branches"]) {
      out << "  index " << b["index"].dump() << "  dim " << b["dimension"].get<int>();
      if (b.contains("detSign")) out << "  det " << (b["detSign"].get<int>() > 0 ? "+1" : "-1");
      if (b.contains("signature"))
        out << "  signature (" << b["signature"][0].get<int>() << ","
            << b["signature"][1].get<int>() << ")";
      if (b.contains("componentCount") && !b["componentCount"].is_null())
        out << "  components " << b["componentCount"].get<long>();
      if (b.contains("residual"))
        out << "  residual " << formatDouble(b["residual"].get<double>());
      if (b.contains("oracleDimension"))
        out << "  oracle " << b["oracleDimension"].get<int>()
            << (b["dimensionMatch"].get<bool>() ? " (match)" : " (MISMATCH)");
      if (b.contains("geodesicMaxResidual"))
        out << "  geodesic " << formatDouble(b["geodesicMaxResidual"].get<double>());
      if (b.contains("fixedPoint"))
        out << (b["fixedPoint"].get<bool>() ? "" : "  FIXED-POINT FAIL");
      out << "\n";
    }
  }
  if (report.contains("pfaffianSigns"))
    out << "pfaffian signs: plus-component " << report["pfaffianSigns"]["plus"].dump()
        << ", minus-component " << report["pfaffianSigns"]["minus"].dump() << "\n";
  if (report.contains("ok"))
    out << "certification: " << (report["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
  if (report.contains("worstOffender"))
    out << "worst offender: " << report["worstOffender"]["what"].get<std::string>()
        << " (" << formatDouble(report["worstOffender"]["value"].get<double>()) << ")\n";
  return out.str();
}

}  // namespace sqrtatlas
