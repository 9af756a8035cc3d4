#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semiclass/norms.hpp"
#include "semiclass/types.hpp"

namespace semiclass {

/// Parsed experiment configuration. File format: one `key = value` per
/// line, `#` comments; keys follow the dotted tree documented in the
/// README (grid.*, hbar.*, norm.*, symbols.*, kernel.*, verdict.*, ...).
struct ExperimentConfig {
  std::string experiment;

  std::string symbol_f = "zero";
  std::string symbol_g = "zero";
  std::string kernel_k = "zero";
  /// Optional pair list for the quotient-bound run: "f|K;f|K;...".
  std::vector<std::pair<std::string, std::string>> pairs;

  int dim = 1;
  Real normal_extent = 32.0;
  Real tangential_extent = 0.0;
  Index points_normal = 0;  // 0: spacing tied to hbar per row
  Index points_tangential = 0;
  int refine = 0;  // extra dyadic halvings on top of the tied spacing
  std::optional<bool> interior;

  Real hbar_start = 1.0;
  int halvings = 6;

  NormMethod norm_method = NormMethod::kAuto;
  Real norm_tol = 1e-8;
  int norm_max_iterations = 5000;

  Real beta = 0.5;

  // Verdict thresholds; engineering defaults, the limits themselves are
  // rate-free.
  Real final_rel_err = 0.05;
  Real compression_factor = 0.95;
  Real rank_one_tol = 1e-3;
  Real residual_factor = 1e-2;
  Real decay_ratio = 0.1;
  Real trend_slack = 0.1;
  Real quotient_tol = 1e-3;

  // Reference-operator grid (half-line) and reference spectrum.
  Real ref_extent = 64.0;
  Real ref_spacing = 1.0 / 32.0;
  Real sigma_max = 16.0;
  Index sigma_points = 513;
  Index base_points = 129;

  // Frozen tangential frequencies for dim-2 boundary assemblies.
  Real family_sigma_max = 8.0;
  Index family_sigma_points = 33;

  std::string out_dir;

  /// Raw key/value pairs as parsed, for the deterministic config echo.
  std::vector<std::pair<std::string, std::string>> echo;
};

ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_map(const std::map<std::string, std::string>& kv);

}  // namespace semiclass
