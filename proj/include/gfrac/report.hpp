#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gfrac {

/// How a case decides pass/fail.
enum class CheckKind {
  Agreement,  ///< rel_err <= tolerance
  Bound,      ///< observed <= bound_or_expected * (1 + tolerance)
  Finite,     ///< observed is finite
};

using ParamValue = std::variant<double, std::string>;
using Parameters = std::vector<std::pair<std::string, ParamValue>>;

struct CaseRecord {
  std::string name;
  Parameters parameters;
  CheckKind kind = CheckKind::Agreement;
  double observed = 0.0;
  double bound_or_expected = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// rel_err is abs_err / |expected|, or abs_err itself when expected == 0.
CaseRecord agreement_case(std::string name, Parameters params, double observed, double expected, double tolerance);
CaseRecord bound_case(std::string name, Parameters params, double observed, double bound, double tolerance);
CaseRecord finite_case(std::string name, Parameters params, double observed);

struct ReportSummary {
  int total = 0;
  int passed = 0;
  double max_rel_err = 0.0;
  double wall_time_seconds = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseRecord> cases;
  ReportSummary summary;

  void add(CaseRecord record) { cases.push_back(std::move(record)); }
  /// Sorts cases by name and recomputes the summary (wall time is kept).
  void finalize();
  bool all_passed() const { return summary.passed == summary.total; }
};

/// Merges suite reports; case names are prefixed with "<suite>/".
VerificationReport merge_reports(std::string suite, const std::vector<VerificationReport>& parts);

/// JSON with 17 significant digits; wall time omitted when include_timing is false,
/// which makes repeated runs byte-identical.
std::string to_json(const VerificationReport& report, bool include_timing = true);

}  // namespace gfrac
