#pragma once

#include <string>
#include <vector>

#include "semiclass/config.hpp"
#include "semiclass/grid.hpp"

namespace semiclass {

struct ReportRow {
  std::string series;
  Real hbar = 0.0;
  Real value = 0.0;
  bool has_reference = false;
  Real reference = 0.0;
  long wall_ms = 0;
  bool failed = false;
  std::string note;

  Real defect() const { return has_reference ? std::abs(value - reference) : 0.0; }
};

struct Verdict {
  std::string name;
  bool pass = false;
  Real observed = 0.0;
  Real threshold = 0.0;
  std::string detail;
};

struct ConvergenceReport {
  std::string experiment;
  std::vector<ReportRow> rows;
  std::vector<Verdict> verdicts;
  std::vector<std::pair<std::string, std::string>> config_echo;
  bool degraded = false;  // at least one row failed and was skipped

  bool all_pass() const;
  /// Stable sort by decreasing hbar; companion series stay adjacent.
  void sort_rows();
};

std::vector<std::string> experiment_ids();
std::string experiment_summary(const std::string& id);

ConvergenceReport run_experiment(const ExperimentConfig& cfg);

ConvergenceReport run_norm_limit_interior(const ExperimentConfig& cfg);
ConvergenceReport run_norm_limit_boundary(const ExperimentConfig& cfg);
ConvergenceReport run_green_defect(const ExperimentConfig& cfg);
ConvergenceReport run_interior_multiplicativity(const ExperimentConfig& cfg);
ConvergenceReport run_boundary_compression(const ExperimentConfig& cfg);
ConvergenceReport run_quotient_bound(const ExperimentConfig& cfg);

/// Writes <out_dir>/<experiment>.csv and .json. Both files are byte-stable
/// for identical configs; the CSV wall_ms column is emitted as 0 for that
/// reason and measured times only reach the console.
void emit_report(const ConvergenceReport& report, const std::string& out_dir);

/// Human-readable row/verdict dump with measured wall times.
void print_report(const ConvergenceReport& report);

/// Geometric schedule hbar_k = start * 2^-k, k = 0..halvings.
std::vector<Real> hbar_schedule(Real start, int halvings);

/// Grid for one sweep row: fixed points when configured, otherwise the
/// spacing is tied to hbar (largest power of two <= hbar*radius/8).
HalfSpaceGrid sweep_grid(const ExperimentConfig& cfg, Real hbar, Real radius,
                         bool interior);

}  // namespace semiclass
