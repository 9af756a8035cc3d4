#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "semiclass/experiments.hpp"
#include "semiclass/symbol.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitVerdictFailure = 2;
constexpr int kExitConfigError = 3;

int cmd_run(const std::string& config_path, const std::string& experiment,
            const std::string& out_dir) {
  semiclass::ExperimentConfig cfg = semiclass::parse_config_file(config_path);
  if (!experiment.empty()) cfg.experiment = experiment;
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  if (cfg.out_dir.empty())
    throw semiclass::ConfigError("no output directory (pass --out or set 'out')");

  const semiclass::ConvergenceReport report = semiclass::run_experiment(cfg);
  semiclass::print_report(report);
  semiclass::emit_report(report, cfg.out_dir);
  std::printf("wrote %s/%s.{csv,json}\n", cfg.out_dir.c_str(), report.experiment.c_str());
  return report.all_pass() ? kExitOk : kExitVerdictFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semiclass: operator-norm convergence experiments for scaled\n"
               "truncated convolution operators on the half-space"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run one experiment from a config file");
  std::string config_path, experiment, out_dir;
  run->add_option("--config", config_path, "config file (key = value lines)")
      ->required();
  run->add_option("--experiment", experiment,
                  "experiment id (overrides the config's 'experiment')");
  run->add_option("--out", out_dir, "output directory for the CSV/JSON report");

  auto* list = app.add_subcommand("list", "list experiment ids");
  auto* catalog = app.add_subcommand("catalog", "describe the symbol/kernel catalogue");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (*list) {
      for (const auto& id : semiclass::experiment_ids())
        std::printf("%-28s %s\n", id.c_str(), semiclass::experiment_summary(id).c_str());
      return kExitOk;
    }
    if (*catalog) {
      std::fputs(semiclass::catalog_help().c_str(), stdout);
      return kExitOk;
    }
    return cmd_run(config_path, experiment, out_dir);
  } catch (const semiclass::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const semiclass::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUnexpected;
  }
}
