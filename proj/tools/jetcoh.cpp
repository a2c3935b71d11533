// jetcoh: command line front end for the cohomology pipeline.

#include "jetcoh/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace jp = jetcoh::pipeline;

namespace {

struct Flag {
  const char* names;
  const char* key;
  const char* help;
};

// Every RunConfig field, under its own name and a kebab-case alias.
const Flag kFlags[] = {
    {"--algebra", "algebra", "Cartan type, e.g. A1, B2, G2"},
    {"--maxDegree,--max-degree", "maxDegree", "largest cochain degree p"},
    {"--maxEnergy,--max-energy", "maxEnergy", "largest energy k"},
    {"--kMin,--k-min", "kMin", "lowest mode degree of the Fock window"},
    {"--kMax,--k-max", "kMax", "highest mode degree of the Fock window"},
    {"--guard", "guard", "guard band of the Fock window"},
    {"--tolerance", "tolerance", "absolute tolerance of the identity suite"},
    {"--maxShift,--max-shift", "maxShift", "largest operator shift tried by the identity suite"},
    {"--cacheDir,--cache-dir", "cacheDir", "cell cache directory (overridden by JETCOH_CACHE_DIR)"},
    {"--outputFormat,--format", "outputFormat", "json, csv or text"},
    {"--maxCellDim,--max-cell-dim", "maxCellDim", "skip cells larger than this (0: no limit)"},
    {"--threads", "threads", "worker threads (0: all cores)"},
};

struct Options {
  std::string configFile;
  std::string outputFile;
  std::map<std::string, std::string> values;
  bool timing = false;
};

void add_run_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.configFile, "key = value file with RunConfig fields");
  cmd->add_option("-o,--output", opt.outputFile, "write the report here instead of stdout");
  for (const Flag& f : kFlags) cmd->add_option(f.names, opt.values[f.key], f.help);
  cmd->add_flag("--timing", opt.timing, "record wall time in the report");
}

jp::RunConfig resolve(const Options& opt, CLI::App* cmd) {
  jp::RunConfig config;
  if (!opt.configFile.empty()) jp::load_config_file(config, opt.configFile);
  for (const Flag& f : kFlags) {
    const std::string first = std::string(f.names).substr(0, std::string(f.names).find(','));
    if (cmd->count(first) > 0) jp::apply_setting(config, f.key, opt.values.at(f.key));
  }
  if (opt.timing) config.timing = true;
  config.validate();
  return config;
}

int emit(const std::string& text, const std::string& file) {
  if (file.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(file);
  out << text;
  if (!out) {
    std::cerr << "jetcoh: cannot write " << file << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology of jet algebras z*g[[z]]"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* compute = app.add_subcommand("compute", "compute every cell and compare with the prediction");
  CLI::App* predict = app.add_subcommand("predict", "list predicted summands per degree");
  CLI::App* verify = app.add_subcommand("verify-identities", "run the Fock space operator identity suite");
  CLI::App* show = app.add_subcommand("show-cache", "list cached cells");
  for (CLI::App* cmd : {compute, predict, verify, show}) add_run_flags(cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    const jp::RunConfig config = resolve(opt, cmd);
    if (cmd == show) {
      const auto entries = jp::list_cache(jp::effective_cache_dir(config));
      return emit(jp::render_cache_listing(entries, config.outputFormat), opt.outputFile);
    }
    jp::CohomologyReport report;
    if (cmd == compute) report = jp::cmd_compute(config);
    else if (cmd == predict) report = jp::cmd_predict(config);
    else report = jp::cmd_verify_identities(config);
    if (emit(jp::render(report, config.outputFormat), opt.outputFile) != 0) return 1;
    return jp::exit_code(report);
  } catch (const jp::ConfigError& e) {
    std::cerr << "jetcoh: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "jetcoh: error: " << e.what() << "\n";
    return 1;
  }
}
