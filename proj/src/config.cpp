#include "gfrac/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace gfrac {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size())
    throw ConfigError("config: invalid value for " + std::string(key) + ": '" + std::string(value) + "'");
  return out;
}

}  // namespace

void CliConfig::validate() const {
  if (quad_order < 1) throw ConfigError("config: quad_order must be >= 1");
  if (time_nodes < 16) throw ConfigError("config: time_nodes must be >= 16");
  if (!(t_min > 0.0 && t_min < t_max)) throw ConfigError("config: need 0 < t_min < t_max");
  if (!(tolerance > 0.0)) throw ConfigError("config: tol must be positive");
}

void CliConfig::set(std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "quad_order") quad_order = parse_number<int>(key, value);
  else if (key == "time_nodes") time_nodes = parse_number<int>(key, value);
  else if (key == "t_min") t_min = parse_number<double>(key, value);
  else if (key == "t_max") t_max = parse_number<double>(key, value);
  else if (key == "tol" || key == "tolerance") tolerance = parse_number<double>(key, value);
  else if (key == "seed") seed = parse_number<std::uint64_t>(key, value);
  else if (key == "report" || key == "report_path") report_path = std::filesystem::path(std::string(value));
  else throw ConfigError("config: unknown key '" + std::string(key) + "'");
}

void CliConfig::merge_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config: line " + std::to_string(number) + ": expected key=value");
    set(trim(view.substr(0, eq)), view.substr(eq + 1));
  }
}

void CliConfig::merge_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  merge_text(buffer.str());
}

CliConfig load_cli_config() {
  CliConfig cfg;
  if (const char* path = std::getenv("GFRAC_CONFIG"); path && *path) cfg.merge_file(path);
  return cfg;
}

}  // namespace gfrac
