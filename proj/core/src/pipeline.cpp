#include "jetcoh/pipeline.hpp"

#include "json_io.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace jetcoh::pipeline {

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "json";
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw ConfigError("unknown output format '" + s + "' (json, csv, text)");
}

void RunConfig::validate() const {
  try {
    algebra.validate();
    window.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (maxDegree < 0) throw ConfigError("maxDegree must be >= 0");
  if (maxEnergy < 0) throw ConfigError("maxEnergy must be >= 0");
  if (maxShift < 0) throw ConfigError("maxShift must be >= 0");
  if (!(tolerance > 0)) throw ConfigError("tolerance must be positive");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_int(const std::string& key, const std::string& value) {
  T out{};
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) throw ConfigError(key + ": expected an integer, got '" + value + "'");
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double d = std::stod(value, &used);
    if (used == value.size()) return d;
  } catch (const std::exception&) {
  }
  throw ConfigError(key + ": expected a number, got '" + value + "'");
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(key + ": expected true or false, got '" + value + "'");
}

}  // namespace

void apply_setting(RunConfig& c, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "algebra") {
    try {
      c.algebra = liealg::AlgebraSpec::parse(value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("algebra: ") + e.what());
    }
  } else if (key == "maxDegree") {
    c.maxDegree = parse_int<int>(key, value);
  } else if (key == "maxEnergy") {
    c.maxEnergy = parse_int<int>(key, value);
  } else if (key == "kMin") {
    c.window.kMin = parse_int<int>(key, value);
  } else if (key == "kMax") {
    c.window.kMax = parse_int<int>(key, value);
  } else if (key == "guard") {
    c.window.guard = parse_int<int>(key, value);
  } else if (key == "tolerance") {
    c.tolerance = parse_double(key, value);
  } else if (key == "maxShift") {
    c.maxShift = parse_int<int>(key, value);
  } else if (key == "cacheDir") {
    c.cacheDir = value;
  } else if (key == "outputFormat") {
    c.outputFormat = parse_output_format(value);
  } else if (key == "maxCellDim") {
    c.maxCellDim = parse_int<std::size_t>(key, value);
  } else if (key == "threads") {
    c.threads = parse_int<unsigned>(key, value);
  } else if (key == "timing") {
    c.timing = parse_bool(key, value);
  } else {
    throw ConfigError("unknown setting '" + key + "'");
  }
}

void load_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    try {
      apply_setting(config, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

std::string effective_cache_dir(const RunConfig& config) {
  if (const char* env = std::getenv(kCacheEnv); env != nullptr && *env != '\0') return env;
  return config.cacheDir;
}

bool CellChecks::all() const {
  return ddZero && hodge && selfAdjoint && closedCoclosed && weylSymmetric && roundTrip && commutes && eigenvalues &&
         creme;
}

namespace {

void note_failure(CellRecord& r, bool ok, const std::string& what) {
  if (!ok && r.failure.empty()) r.failure = what;
}

reptheory::WeightMultiset multiset_of(const std::vector<liealg::FiniteWeight>& weights) {
  reptheory::WeightMultiset out;
  for (const auto& w : weights) ++out[w];
  return out;
}

CellRecord compute_cell_impl(const liealg::AlgebraData& data, const reptheory::CharacterTable& table, int p, int k,
                             cochain::CellData& cell) {
  CellRecord r;
  r.p = p;
  r.k = k;
  r.computed = true;
  cell = cochain::build_cell(data, p, k);
  r.dimA = cell.dim;
  r.rankD = cell.rank_d;
  r.rankDPrev = cell.rank_d_prev;
  r.checks.ddZero = cell.dd_zero;
  r.checks.selfAdjoint = cell.self_adjoint;
  note_failure(r, cell.dd_zero, "d o d != 0");
  note_failure(r, cell.self_adjoint, "Laplacian is not self-adjoint");

  const cochain::HarmonicSpace h = cochain::harmonic_space(data, cell);
  r.dimH = h.dim();
  r.checks.hodge = h.hodge_consistent && r.dimH + r.rankD + r.rankDPrev == r.dimA;
  r.checks.closedCoclosed = h.closed_and_coclosed;
  note_failure(r, r.checks.hodge, "Hodge dimension count failed");
  note_failure(r, r.checks.closedCoclosed, "harmonic vector is not closed and coclosed");

  const reptheory::WeightMultiset full = reptheory::weights_of_basis(data, cell.basis);
  const reptheory::WeightMultiset harmonic = multiset_of(h.weights);
  r.checks.weylSymmetric = reptheory::is_weyl_symmetric(data, full) && reptheory::is_weyl_symmetric(data, harmonic);
  note_failure(r, r.checks.weylSymmetric, "weight multiset is not Weyl symmetric");
  try {
    const auto full_summands = reptheory::decompose(table, full);
    r.harmonic = reptheory::decompose(table, harmonic);
    r.checks.roundTrip = reptheory::expand(table, full_summands) == full && reptheory::expand(table, r.harmonic) == harmonic;
  } catch (const std::domain_error& e) {
    r.checks.roundTrip = false;
    note_failure(r, false, e.what());
  }
  note_failure(r, r.checks.roundTrip, "character round trip failed");

  const cochain::IsotypicVerdict iso = cochain::isotypic_eigen_check(data, cell);
  r.checks.commutes = iso.commutes;
  r.checks.eigenvalues = iso.pass;
  note_failure(r, iso.pass, iso.failure);
  for (const auto& comp : iso.components) {
    ComponentRecord c;
    c.lowestWeight = comp.lowest_weight;
    c.multiplicity = comp.multiplicity;
    c.mu = comp.mu;
    c.laplacianScalar = comp.laplacian_scalar;
    c.creme = affine::zero_locus_polynomial(data, affine::AffineWeight{k, comp.lowest_weight, 0});
    if (c.creme != c.mu) {
      r.checks.creme = false;
      note_failure(r, false, "eigenvalue formula differs from the affine formula at " + c.lowestWeight.to_string());
    }
    r.components.push_back(std::move(c));
  }
  return r;
}

}  // namespace

CellRecord compute_cell(const liealg::AlgebraData& data, const reptheory::CharacterTable& table, int p, int k) {
  cochain::CellData cell;
  return compute_cell_impl(data, table, p, k, cell);
}

namespace {

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned t = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(jobs, 1)));
}

template <class F>
void parallel_for(std::size_t jobs, unsigned threads, F&& body) {
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t j = next++; j < jobs; j = next++) body(j);
  };
  const unsigned t = worker_count(threads, jobs);
  if (t <= 1) {
    run();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned i = 0; i < t; ++i) pool.emplace_back(run);
}

CohomologyReport start(const std::string& command, const RunConfig& config, const liealg::AlgebraData& data) {
  CohomologyReport r;
  r.command = command;
  r.config = config;
  r.config.cacheDir = effective_cache_dir(config);
  r.algebraHash = liealg::content_hash(data);
  r.algebraDim = data.dim();
  r.coxeter = data.coxeter();
  return r;
}

using Clock = std::chrono::steady_clock;

void finish_timing(CohomologyReport& r, Clock::time_point t0) {
  if (r.config.timing) r.timing = Timing{std::chrono::duration<double>(Clock::now() - t0).count()};
}

using Key = std::tuple<std::int64_t, liealg::FiniteWeight, std::int64_t>;  // (energy, lowest weight, dim)

std::string describe(const std::vector<Key>& keys) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i) os << ", ";
    os << '(' << std::get<0>(keys[i]) << ',' << std::get<1>(keys[i]).to_string() << ')';
  }
  os << '}';
  return os.str();
}

}  // namespace

CohomologyReport cmd_compute(const RunConfig& config) {
  config.validate();
  const auto t0 = Clock::now();
  const liealg::AlgebraData data = liealg::build_algebra(config.algebra);
  const reptheory::CharacterTable table(data);
  CohomologyReport r = start("compute", config, data);
  const std::string cache = r.config.cacheDir;

  for (int p = 0; p <= config.maxDegree; ++p)
    for (int k = 0; k <= config.maxEnergy; ++k) {
      CellRecord c;
      c.p = p;
      c.k = k;
      r.cells.push_back(c);
    }
  std::vector<std::vector<std::string>> cell_warnings(r.cells.size());
  const std::size_t n = data.dim();

  parallel_for(r.cells.size(), config.threads, [&](std::size_t j) {
    CellRecord& slot = r.cells[j];
    auto& warn = cell_warnings[j];
    const int p = slot.p, k = slot.k;
    if (config.maxCellDim != 0) {
      const std::size_t big = std::max({cochain::count_basis(n, p, k), cochain::count_basis(n, p + 1, k),
                                        p > 0 ? cochain::count_basis(n, p - 1, k) : 0});
      if (big > config.maxCellDim) {
        slot.skipReason = "cell dimension " + std::to_string(big) + " exceeds maxCellDim " +
                          std::to_string(config.maxCellDim);
        return;
      }
    }
    if (!cache.empty())
      if (auto hit = io::cache_load(cache, data, r.algebraHash, p, k, warn)) {
        slot = std::move(*hit);
        return;
      }
    cochain::CellData cell;
    try {
      slot = compute_cell_impl(data, table, p, k, cell);
    } catch (const std::exception& e) {
      slot.computed = false;
      slot.skipReason = std::string("computation failed: ") + e.what();
      return;
    }
    if (!cache.empty()) io::cache_store(cache, data, r.algebraHash, slot, cell, warn);
  });
  for (auto& w : cell_warnings) r.warnings.insert(r.warnings.end(), w.begin(), w.end());

  r.predictions = affine::predict_cohomology(data, config.maxDegree);
  std::vector<reptheory::CellDecomposition> audit_cells;
  for (int p = 0; p <= config.maxDegree; ++p) {
    MatchVerdict v;
    v.p = p;
    std::vector<Key> computed, predicted;
    for (const auto& c : r.cells) {
      if (c.p != p) continue;
      if (!c.computed) {
        v.complete = false;
        continue;
      }
      for (const auto& s : c.harmonic)
        for (std::int64_t m = 0; m < s.multiplicity; ++m) computed.emplace_back(c.k, s.lowest_weight, s.dimension);
      audit_cells.push_back({c.p, c.k, c.harmonic});
    }
    for (const auto& pr : r.predictions[static_cast<std::size_t>(p)])
      if (pr.energy <= config.maxEnergy) predicted.emplace_back(pr.energy, pr.lowest_weight.finite, pr.finite_dim);
    std::sort(computed.begin(), computed.end());
    std::sort(predicted.begin(), predicted.end());
    v.match = computed == predicted;
    if (!v.complete) r.complete = false;
    if (!v.match) v.detail = "computed " + describe(computed) + " predicted " + describe(predicted);
    else if (!v.complete) v.detail = "agrees on the computed cells only";
    r.match.push_back(std::move(v));
  }
  r.audit = reptheory::multiplicity_one_audit(audit_cells);
  finish_timing(r, t0);
  return r;
}

CohomologyReport cmd_predict(const RunConfig& config) {
  config.validate();
  const auto t0 = Clock::now();
  const liealg::AlgebraData data = liealg::build_algebra(config.algebra);
  CohomologyReport r = start("predict", config, data);
  r.predictions = affine::predict_cohomology(data, config.maxDegree);
  finish_timing(r, t0);
  return r;
}

CohomologyReport cmd_verify_identities(const RunConfig& config) {
  config.validate();
  const auto t0 = Clock::now();
  const liealg::AlgebraData data = liealg::build_algebra(config.algebra);
  CohomologyReport r = start("verify-identities", config, data);
  const fock::FockModel model(data);
  fock::SuiteOptions opt;
  opt.window = config.window;
  opt.tolerance = config.tolerance;
  opt.maxShift = config.maxShift;
  opt.threads = config.threads;
  r.identities = fock::run_identity_suite(model, opt);
  finish_timing(r, t0);
  return r;
}

int exit_code(const CohomologyReport& r) {
  for (const auto& v : r.identities)
    if (!v.skipped && !v.pass) return 3;
  if (r.command != "compute") return 0;
  if (!r.complete) return 2;
  for (const auto& m : r.match)
    if (!m.match) return 2;
  for (const auto& c : r.cells)
    if (c.computed && !c.checks.all()) return 2;
  if (r.audit && !r.audit->pass) return 2;
  return 0;
}

std::string render(const CohomologyReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return render_json(report);
    case OutputFormat::Csv: return render_csv(report);
    case OutputFormat::Text: return render_text(report);
  }
  return render_json(report);
}

}  // namespace jetcoh::pipeline
