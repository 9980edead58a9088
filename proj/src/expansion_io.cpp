#include "gfrac/expansion_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gfrac {

std::string format_real(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_json(const HermiteExpansion& f) {
  std::ostringstream out;
  out << "{\n  \"dimension\": " << f.dim() << ",\n  \"terms\": [";
  bool first = true;
  for (const auto& [nu, c] : f.terms()) {
    if (!std::isfinite(c)) throw std::invalid_argument("to_json: non-finite coefficient");
    out << (first ? "\n" : ",\n") << "    { \"nu\": [";
    for (std::size_t i = 0; i < nu.dim(); ++i) out << (i ? ", " : "") << nu[i];
    out << "], \"c\": " << format_real(c) << " }";
    first = false;
  }
  out << (first ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

HermiteExpansion expansion_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("expansion: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("terms"))
    throw ParseError("expansion: expected an object with \"dimension\" and \"terms\"");
  const auto& dim_node = doc["dimension"];
  if (!dim_node.is_number_integer() || dim_node.get<long long>() < 1)
    throw ParseError("expansion: \"dimension\" must be a positive integer");
  const auto dim = static_cast<std::size_t>(dim_node.get<long long>());
  if (!doc["terms"].is_array()) throw ParseError("expansion: \"terms\" must be an array");

  HermiteExpansion f(dim);
  for (const auto& term : doc["terms"]) {
    if (!term.is_object() || !term.contains("nu") || !term.contains("c"))
      throw ParseError("expansion: each term needs \"nu\" and \"c\"");
    const auto& nu_node = term["nu"];
    if (!nu_node.is_array() || nu_node.size() != dim) throw ParseError("expansion: \"nu\" length must equal dimension");
    std::vector<int> components;
    for (const auto& c : nu_node) {
      if (!c.is_number_integer() || c.get<long long>() < 0) throw ParseError("expansion: \"nu\" entries must be nonnegative integers");
      components.push_back(static_cast<int>(c.get<long long>()));
    }
    if (!term["c"].is_number()) throw ParseError("expansion: \"c\" must be a number");
    const MultiIndex nu(std::move(components));
    if (f.terms().contains(nu)) throw ParseError("expansion: duplicate multi-index");
    f.set(nu, term["c"].get<double>());
  }
  return f;
}

void write_expansion(const std::filesystem::path& path, const HermiteExpansion& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << to_json(f);
}

HermiteExpansion read_expansion(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return expansion_from_json(buffer.str());
}

}  // namespace gfrac
