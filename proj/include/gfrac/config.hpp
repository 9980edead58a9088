#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "gfrac/verification.hpp"

namespace gfrac {

/// Invalid configuration value or malformed config file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  int quad_order = 16;
  int time_nodes = 400;
  double t_min = 1e-6;
  double t_max = 40.0;
  double tolerance = 1e-6;
  std::uint64_t seed = 42;
  std::optional<std::filesystem::path> report_path;

  /// quad_order >= 1, time_nodes >= 16, 0 < t_min < t_max, tolerance > 0.
  void validate() const;

  /// Applies one key=value setting. Keys: quad_order, time_nodes, t_min, t_max,
  /// tol (or tolerance), seed, report.
  void set(std::string_view key, std::string_view value);

  /// Flat key=value text; '#' starts a comment, blank lines are ignored.
  void merge_text(std::string_view text);
  void merge_file(const std::filesystem::path& path);

  VerificationConfig verification() const { return {quad_order, time_nodes, t_min, t_max, tolerance, seed}; }
  TimeGrid time_grid() const { return {t_min, t_max, time_nodes}; }
};

/// Built-in defaults overlaid with the file named by GFRAC_CONFIG, if set.
CliConfig load_cli_config();

}  // namespace gfrac
