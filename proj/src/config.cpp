#include "semiclass/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "semiclass/symbol.hpp"

namespace semiclass {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Real to_real(const std::string& key, const std::string& val) {
  char* end = nullptr;
  const Real x = std::strtod(val.c_str(), &end);
  if (end == val.c_str() || *end != '\0')
    throw ConfigError("config key '" + key + "': bad numeric value '" + val + "'");
  return x;
}

Index to_index(const std::string& key, const std::string& val) {
  const Real x = to_real(key, val);
  if (x < 0 || x != Real(Index(x)))
    throw ConfigError("config key '" + key + "': expected a nonnegative integer");
  return Index(x);
}

bool to_bool(const std::string& key, const std::string& val) {
  if (val == "true" || val == "1" || val == "yes") return true;
  if (val == "false" || val == "0" || val == "no") return false;
  throw ConfigError("config key '" + key + "': expected true/false");
}

NormMethod to_method(const std::string& val) {
  if (val == "auto") return NormMethod::kAuto;
  if (val == "svd") return NormMethod::kSvd;
  if (val == "power") return NormMethod::kPower;
  throw ConfigError("norm.method must be auto, svd or power");
}

std::vector<std::pair<std::string, std::string>> parse_pairs(const std::string& val) {
  std::vector<std::pair<std::string, std::string>> out;
  std::stringstream ss(val);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto bar = item.find('|');
    if (bar == std::string::npos)
      throw ConfigError("quotient.pairs entries must look like '<symbol>|<kernel>'");
    out.emplace_back(trim(item.substr(0, bar)), trim(item.substr(bar + 1)));
  }
  if (out.empty()) throw ConfigError("quotient.pairs: no pairs given");
  return out;
}

}  // namespace

ExperimentConfig parse_config_map(const std::map<std::string, std::string>& kv) {
  ExperimentConfig cfg;
  for (const auto& [key, val] : kv) {
    if (key == "experiment") cfg.experiment = val;
    else if (key == "symbols.f") cfg.symbol_f = val;
    else if (key == "symbols.g") cfg.symbol_g = val;
    else if (key == "kernel.K") cfg.kernel_k = val;
    else if (key == "quotient.pairs") cfg.pairs = parse_pairs(val);
    else if (key == "grid.dim") cfg.dim = int(to_index(key, val));
    else if (key == "grid.normal_extent") cfg.normal_extent = to_real(key, val);
    else if (key == "grid.tangential_extent") cfg.tangential_extent = to_real(key, val);
    else if (key == "grid.points_normal") cfg.points_normal = to_index(key, val);
    else if (key == "grid.points_tangential") cfg.points_tangential = to_index(key, val);
    else if (key == "grid.refine") cfg.refine = int(to_index(key, val));
    else if (key == "grid.interior") cfg.interior = to_bool(key, val);
    else if (key == "hbar.start") cfg.hbar_start = to_real(key, val);
    else if (key == "hbar.halvings") cfg.halvings = int(to_index(key, val));
    else if (key == "norm.method") cfg.norm_method = to_method(val);
    else if (key == "norm.tolerance") cfg.norm_tol = to_real(key, val);
    else if (key == "norm.max_iterations") cfg.norm_max_iterations = int(to_index(key, val));
    else if (key == "beta") cfg.beta = to_real(key, val);
    else if (key == "verdict.final_rel_err") cfg.final_rel_err = to_real(key, val);
    else if (key == "verdict.compression_factor") cfg.compression_factor = to_real(key, val);
    else if (key == "verdict.rank_one_tol") cfg.rank_one_tol = to_real(key, val);
    else if (key == "verdict.residual_factor") cfg.residual_factor = to_real(key, val);
    else if (key == "verdict.decay_ratio") cfg.decay_ratio = to_real(key, val);
    else if (key == "verdict.trend_slack") cfg.trend_slack = to_real(key, val);
    else if (key == "verdict.quotient_tol") cfg.quotient_tol = to_real(key, val);
    else if (key == "reference.extent") cfg.ref_extent = to_real(key, val);
    else if (key == "reference.spacing") cfg.ref_spacing = to_real(key, val);
    else if (key == "sigma.max") cfg.sigma_max = to_real(key, val);
    else if (key == "sigma.points") cfg.sigma_points = to_index(key, val);
    else if (key == "sigma.base_points") cfg.base_points = to_index(key, val);
    else if (key == "family.sigma_max") cfg.family_sigma_max = to_real(key, val);
    else if (key == "family.sigma_points") cfg.family_sigma_points = to_index(key, val);
    else if (key == "out") cfg.out_dir = val;
    else throw ConfigError("unknown config key '" + key + "'");
    cfg.echo.emplace_back(key, val);
  }

  if (cfg.experiment.empty()) throw ConfigError("config: missing 'experiment'");
  if (!(cfg.hbar_start > 0.0) || cfg.hbar_start > 1.0)
    throw ConfigError("hbar.start must lie in (0, 1]");
  if (cfg.halvings < 0) throw ConfigError("hbar.halvings must be >= 0");
  if (cfg.dim != 1 && cfg.dim != 2) throw ConfigError("grid.dim must be 1 or 2");
  if (!(cfg.beta > 0.0) || cfg.beta >= 1.0) throw ConfigError("beta must lie in (0, 1)");

  // Referenced catalogue ids must resolve now, not at row time.
  make_symbol(cfg.symbol_f);
  make_symbol(cfg.symbol_g);
  make_kernel(cfg.kernel_k);
  for (const auto& [fid, kid] : cfg.pairs) {
    make_symbol(fid);
    make_kernel(kid);
  }
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key or value");
    if (!kv.emplace(key, val).second)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
  }
  return parse_config_map(kv);
}

}  // namespace semiclass
