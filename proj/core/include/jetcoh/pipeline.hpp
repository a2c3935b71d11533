#pragma once

#include "jetcoh/affine.hpp"
#include "jetcoh/fock.hpp"
#include "jetcoh/liealg.hpp"
#include "jetcoh/reptheory.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jetcoh::pipeline {

/// Environment variable that overrides RunConfig::cacheDir.
inline constexpr const char* kCacheEnv = "JETCOH_CACHE_DIR";

enum class OutputFormat { Json, Csv, Text };

std::string to_string(OutputFormat f);
OutputFormat parse_output_format(const std::string& s);

/// Usage or configuration problem (exit code 1).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  liealg::AlgebraSpec algebra;
  int maxDegree = 3;
  int maxEnergy = 6;
  fock::EnergyWindow window;
  double tolerance = 1e-9;
  int maxShift = 2;               // largest |k| tried by the identity suite
  std::string cacheDir;           // empty: no cache
  OutputFormat outputFormat = OutputFormat::Json;
  std::size_t maxCellDim = 0;     // 0: unlimited; larger cells are skipped
  unsigned threads = 0;           // 0: hardware concurrency
  bool timing = false;            // timing breaks byte-identical reports, so it is opt-in

  /// Throws ConfigError.
  void validate() const;
};

/// Sets one field from its key (the field name, e.g. "maxEnergy", "kMin").
/// Throws ConfigError for unknown keys or malformed values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Reads "key = value" lines; '#' starts a comment. Throws ConfigError.
void load_config_file(RunConfig& config, const std::string& path);

/// cacheDir after the environment override.
std::string effective_cache_dir(const RunConfig& config);

struct ComponentRecord {
  liealg::FiniteWeight lowestWeight;
  std::size_t multiplicity = 0;
  Rational mu;               // eigenvalue formula at (lowestWeight, k)
  Rational laplacianScalar;  // exact action of L on the component
  Rational creme;            // 1/2 (|lambda_hat - rho_hat|^2 - |rho_hat|^2)
};

struct CellChecks {
  bool ddZero = true;
  bool hodge = true;
  bool selfAdjoint = true;
  bool closedCoclosed = true;
  bool weylSymmetric = true;
  bool roundTrip = true;
  bool commutes = true;     // L commutes with the coadjoint action
  bool eigenvalues = true;  // L acts by -mu on every component
  bool creme = true;        // mu equals the affine formula
  bool all() const;
};

struct CellRecord {
  int p = 0;
  int k = 0;
  bool computed = false;
  std::string skipReason;
  std::size_t dimA = 0;
  std::size_t rankD = 0;
  std::size_t rankDPrev = 0;
  std::size_t dimH = 0;
  std::vector<reptheory::IrrepSummand> harmonic;
  std::vector<ComponentRecord> components;
  CellChecks checks;
  std::string failure;  // first structural failure, if any
};

/// Computes one cell and all of its structural checks.
CellRecord compute_cell(const liealg::AlgebraData& data, const reptheory::CharacterTable& table, int p, int k);

struct MatchVerdict {
  int p = 0;
  bool match = false;
  bool complete = true;  // every cell of this degree was computed
  std::string detail;
};

struct Timing {
  double seconds = 0;
};

struct CohomologyReport {
  std::string command;
  RunConfig config;
  std::string algebraHash;
  std::size_t algebraDim = 0;
  std::int64_t coxeter = 0;
  bool complete = true;
  std::vector<CellRecord> cells;  // ordered by (p, k)
  std::vector<std::vector<affine::PredictedIrrep>> predictions;
  std::vector<MatchVerdict> match;
  std::optional<reptheory::AuditVerdict> audit;
  std::vector<fock::IdentityVerdict> identities;
  std::vector<std::string> warnings;
  std::optional<Timing> timing;
};

CohomologyReport cmd_compute(const RunConfig& config);
CohomologyReport cmd_predict(const RunConfig& config);
CohomologyReport cmd_verify_identities(const RunConfig& config);

/// 0 all verdicts pass; 2 computed/predicted mismatch, failed structural check
/// or incomplete compute; 3 identity-suite failure.
int exit_code(const CohomologyReport& report);

std::string render(const CohomologyReport& report, OutputFormat format);
std::string render_json(const CohomologyReport& report);
std::string render_csv(const CohomologyReport& report);
std::string render_text(const CohomologyReport& report);

struct CacheEntry {
  std::string file;
  std::string algebra;
  std::string algebraHash;
  int p = 0;
  int k = 0;
  bool valid = false;
  std::string problem;
  std::size_t dimA = 0;
  std::size_t dimH = 0;
};

/// Every cell file under the cache directory, sorted by file name.
std::vector<CacheEntry> list_cache(const std::string& dir);
std::string render_cache_listing(const std::vector<CacheEntry>& entries, OutputFormat format);

}  // namespace jetcoh::pipeline
