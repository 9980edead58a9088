#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gfrac/expansion.hpp"

namespace gfrac {

/// Malformed input data (the CLI maps this to exit status 3).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "%.17g" formatting used by every numeric output.
std::string format_real(double x);

/// { "dimension": d, "terms": [ { "nu": [..], "c": .. }, ... ] } with keys in
/// lexicographic order and 17 significant digits.
std::string to_json(const HermiteExpansion& f);
HermiteExpansion expansion_from_json(std::string_view text);

void write_expansion(const std::filesystem::path& path, const HermiteExpansion& f);
HermiteExpansion read_expansion(const std::filesystem::path& path);

}  // namespace gfrac
