#include "json_io.hpp"

#include <cstdio>
#include <iomanip>
#include <map>
#include <sstream>

namespace jetcoh::pipeline {
namespace io {

Json weight_json(const liealg::FiniteWeight& w) {
  Json a = Json::array();
  for (const auto& c : w.coords()) a.push_back(jetcoh::to_string(c));
  return a;
}

liealg::FiniteWeight weight_from(const Json& j) {
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(parse_rational(c.get<std::string>()));
  return liealg::FiniteWeight(std::move(coords));
}

Json summand_json(const reptheory::IrrepSummand& s) {
  return Json{{"lowestWeight", weight_json(s.lowest_weight)}, {"dim", s.dimension}, {"multiplicity", s.multiplicity}};
}

reptheory::IrrepSummand summand_from(const Json& j) {
  reptheory::IrrepSummand s;
  s.lowest_weight = weight_from(j.at("lowestWeight"));
  s.dimension = j.at("dim").get<std::int64_t>();
  s.multiplicity = j.at("multiplicity").get<std::int64_t>();
  return s;
}

namespace {

Json checks_json(const CellChecks& c) {
  return Json{{"ddZero", c.ddZero},         {"hodge", c.hodge},
              {"selfAdjoint", c.selfAdjoint}, {"closedCoclosed", c.closedCoclosed},
              {"weylSymmetric", c.weylSymmetric}, {"roundTrip", c.roundTrip},
              {"commutes", c.commutes},     {"eigenvalues", c.eigenvalues},
              {"creme", c.creme}};
}

CellChecks checks_from(const Json& j) {
  CellChecks c;
  c.ddZero = j.at("ddZero").get<bool>();
  c.hodge = j.at("hodge").get<bool>();
  c.selfAdjoint = j.at("selfAdjoint").get<bool>();
  c.closedCoclosed = j.at("closedCoclosed").get<bool>();
  c.weylSymmetric = j.at("weylSymmetric").get<bool>();
  c.roundTrip = j.at("roundTrip").get<bool>();
  c.commutes = j.at("commutes").get<bool>();
  c.eigenvalues = j.at("eigenvalues").get<bool>();
  c.creme = j.at("creme").get<bool>();
  return c;
}

}  // namespace

Json cell_json(const CellRecord& c) {
  Json j{{"p", c.p}, {"k", c.k}, {"computed", c.computed}};
  if (!c.computed) {
    j["skipReason"] = c.skipReason;
    return j;
  }
  j["dimA"] = c.dimA;
  j["rankD"] = c.rankD;
  j["rankDPrev"] = c.rankDPrev;
  j["dimH"] = c.dimH;
  Json h = Json::array();
  for (const auto& s : c.harmonic) h.push_back(summand_json(s));
  j["harmonic"] = std::move(h);
  Json comps = Json::array();
  for (const auto& x : c.components)
    comps.push_back(Json{{"lowestWeight", weight_json(x.lowestWeight)},
                         {"multiplicity", x.multiplicity},
                         {"mu", jetcoh::to_string(x.mu)},
                         {"laplacianScalar", jetcoh::to_string(x.laplacianScalar)},
                         {"creme", jetcoh::to_string(x.creme)}});
  j["components"] = std::move(comps);
  j["checks"] = checks_json(c.checks);
  j["pass"] = c.checks.all();
  if (!c.failure.empty()) j["failure"] = c.failure;
  return j;
}

CellRecord cell_from(const Json& j) {
  CellRecord c;
  c.p = j.at("p").get<int>();
  c.k = j.at("k").get<int>();
  c.computed = j.at("computed").get<bool>();
  if (!c.computed) {
    c.skipReason = j.value("skipReason", "");
    return c;
  }
  c.dimA = j.at("dimA").get<std::size_t>();
  c.rankD = j.at("rankD").get<std::size_t>();
  c.rankDPrev = j.at("rankDPrev").get<std::size_t>();
  c.dimH = j.at("dimH").get<std::size_t>();
  for (const auto& s : j.at("harmonic")) c.harmonic.push_back(summand_from(s));
  for (const auto& x : j.at("components")) {
    ComponentRecord r;
    r.lowestWeight = weight_from(x.at("lowestWeight"));
    r.multiplicity = x.at("multiplicity").get<std::size_t>();
    r.mu = parse_rational(x.at("mu").get<std::string>());
    r.laplacianScalar = parse_rational(x.at("laplacianScalar").get<std::string>());
    r.creme = parse_rational(x.at("creme").get<std::string>());
    c.components.push_back(std::move(r));
  }
  c.checks = checks_from(j.at("checks"));
  c.failure = j.value("failure", "");
  return c;
}

Json config_json(const RunConfig& c) {
  // threads and timing do not change results and are left out.
  return Json{{"algebra", c.algebra.name()},
              {"maxDegree", c.maxDegree},
              {"maxEnergy", c.maxEnergy},
              {"window", Json{{"kMin", c.window.kMin}, {"kMax", c.window.kMax}, {"guard", c.window.guard}}},
              {"tolerance", c.tolerance},
              {"maxShift", c.maxShift},
              {"cacheDir", c.cacheDir},
              {"maxCellDim", c.maxCellDim}};
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace io

namespace {

using io::Json;

Json prediction_json(const affine::PredictedIrrep& pr) {
  return Json{{"energy", pr.energy},
              {"lowestWeight", io::weight_json(pr.lowest_weight.finite)},
              {"dim", pr.finite_dim},
              {"weylElement", pr.source.to_string()}};
}

Json identity_json(const fock::IdentityVerdict& v) {
  Json j{{"identity", v.identity}};
  j["shift"] = v.shift ? Json(*v.shift) : Json(nullptr);
  j["window"] = v.window;
  j["status"] = v.skipped ? "skipped" : (v.pass ? "pass" : "fail");
  j["maxAbsError"] = v.maxAbsError;
  if (v.measured) j["measured"] = *v.measured;
  if (v.expected) j["expected"] = *v.expected;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

std::string status_word(bool ok) { return ok ? "pass" : "FAIL"; }

std::string summands_text(const std::vector<reptheory::IrrepSummand>& ss) {
  if (ss.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    if (i) os << " + ";
    if (ss[i].multiplicity != 1) os << ss[i].multiplicity << "x";
    os << "V" << ss[i].lowest_weight.to_string() << "(" << ss[i].dimension << ")";
  }
  return os.str();
}

// Left-aligned columns.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << x;
  return os.str();
}

}  // namespace

std::string render_json(const CohomologyReport& r) {
  Json j;
  j["schema"] = "jetcoh.report/1";
  j["command"] = r.command;
  j["weightConvention"] = "simple-root coordinates; irreducibles are labelled by lowest weight";
  j["config"] = io::config_json(r.config);
  j["algebra"] = Json{{"name", r.config.algebra.name()},
                      {"dim", r.algebraDim},
                      {"rank", r.config.algebra.rank},
                      {"coxeter", r.coxeter},
                      {"contentHash", r.algebraHash}};
  if (r.command == "compute") {
    j["complete"] = r.complete;
    Json cells = Json::array();
    for (const auto& c : r.cells) cells.push_back(io::cell_json(c));
    j["cells"] = std::move(cells);
  }
  if (r.command == "compute" || r.command == "predict") {
    Json preds = Json::array();
    for (std::size_t p = 0; p < r.predictions.size(); ++p) {
      Json irreps = Json::array();
      for (const auto& pr : r.predictions[p]) irreps.push_back(prediction_json(pr));
      preds.push_back(Json{{"p", p}, {"irreps", std::move(irreps)}});
    }
    j["predictions"] = std::move(preds);
  }
  if (r.command == "compute") {
    Json m = Json::array();
    for (const auto& v : r.match) {
      Json e{{"p", v.p}, {"match", v.match}, {"complete", v.complete}};
      if (!v.detail.empty()) e["detail"] = v.detail;
      m.push_back(std::move(e));
    }
    j["match"] = std::move(m);
    if (r.audit) {
      Json lw = Json::array();
      for (const auto& w : r.audit->lowest_weights) lw.push_back(io::weight_json(w));
      j["audit"] = Json{{"pass", r.audit->pass}, {"violations", r.audit->violations}, {"lowestWeights", std::move(lw)}};
    }
  }
  if (r.command == "verify-identities") {
    Json ids = Json::array();
    for (const auto& v : r.identities) ids.push_back(identity_json(v));
    j["identities"] = std::move(ids);
  }
  j["warnings"] = r.warnings;
  const int code = exit_code(r);
  j["verdict"] = Json{{"pass", code == 0}, {"exitCode", code}};
  if (r.timing) j["timing"] = Json{{"seconds", r.timing->seconds}};
  return j.dump(2) + "\n";
}

std::string render_csv(const CohomologyReport& r) {
  std::ostringstream os;
  if (r.command == "compute") {
    os << "p,k,betti\n";
    for (const auto& c : r.cells) {
      os << c.p << ',' << c.k << ',';
      if (c.computed) os << c.dimH;
      os << '\n';
    }
  } else if (r.command == "predict") {
    // Predicted betti numbers: summand dimensions added up per (p, k).
    os << "p,k,betti\n";
    for (std::size_t p = 0; p < r.predictions.size(); ++p) {
      std::map<std::int64_t, std::int64_t> by_energy;
      for (const auto& pr : r.predictions[p]) by_energy[pr.energy] += pr.finite_dim;
      for (const auto& [k, b] : by_energy) os << p << ',' << k << ',' << b << '\n';
    }
  } else {
    os << "identity,shift,maxAbsError,status\n";
    for (const auto& v : r.identities) {
      os << v.identity << ',';
      if (v.shift) os << *v.shift;
      os << ',' << std::setprecision(17) << v.maxAbsError << ',' << (v.skipped ? "skipped" : v.pass ? "pass" : "fail")
         << '\n';
    }
  }
  return os.str();
}

std::string render_text(const CohomologyReport& r) {
  std::ostringstream os;
  os << r.command << ": " << r.config.algebra.name() << " (dim " << r.algebraDim << ", c = " << r.coxeter
     << ", hash " << r.algebraHash << ")\n";
  if (r.command == "compute") {
    std::vector<std::vector<std::string>> rows{{"p", "k", "dimA", "rankD", "dimH", "harmonic", "checks"}};
    for (const auto& c : r.cells) {
      if (!c.computed) {
        rows.push_back({std::to_string(c.p), std::to_string(c.k), "-", "-", "-", "skipped: " + c.skipReason, "-"});
        continue;
      }
      if (c.dimH == 0 && c.checks.all()) continue;
      rows.push_back({std::to_string(c.p), std::to_string(c.k), std::to_string(c.dimA), std::to_string(c.rankD),
                      std::to_string(c.dimH), summands_text(c.harmonic),
                      c.checks.all() ? "pass" : "FAIL " + c.failure});
    }
    os << "\nnonzero cohomology (other cells vanish):\n" << table(rows);
    std::vector<std::vector<std::string>> m{{"p", "match", "complete"}};
    for (const auto& v : r.match) m.push_back({std::to_string(v.p), status_word(v.match), v.complete ? "yes" : "no"});
    os << "\ncomputed vs predicted:\n" << table(m);
    for (const auto& v : r.match)
      if (!v.detail.empty()) os << "  p=" << v.p << ": " << v.detail << '\n';
    if (r.audit) {
      os << "\nmultiplicity-one audit: " << status_word(r.audit->pass) << '\n';
      for (const auto& s : r.audit->violations) os << "  " << s << '\n';
    }
  } else if (r.command == "predict") {
    std::vector<std::vector<std::string>> rows{{"p", "energy", "lowest weight", "dim", "w"}};
    for (std::size_t p = 0; p < r.predictions.size(); ++p)
      for (const auto& pr : r.predictions[p])
        rows.push_back({std::to_string(p), std::to_string(pr.energy), pr.lowest_weight.finite.to_string(),
                        std::to_string(pr.finite_dim), pr.source.to_string()});
    os << '\n' << table(rows);
  } else {
    std::vector<std::vector<std::string>> rows{{"identity", "shift", "maxAbsError", "status", "note"}};
    for (const auto& v : r.identities)
      rows.push_back({v.identity, v.shift ? std::to_string(*v.shift) : "", fmt_double(v.maxAbsError),
                      v.skipped ? "skipped" : status_word(v.pass), v.reason});
    os << "window " << r.config.window.to_string() << ", tolerance " << r.config.tolerance << "\n\n" << table(rows);
  }
  for (const auto& w : r.warnings) os << "warning: " << w << '\n';
  if (r.timing) os << "elapsed " << std::fixed << std::setprecision(3) << r.timing->seconds << " s\n";
  os << "verdict: exit " << exit_code(r) << '\n';
  return os.str();
}

}  // namespace jetcoh::pipeline
