#include "gfrac/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gfrac/expansion_io.hpp"

namespace gfrac {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

// JSON has no inf/nan literals.
std::string number(double x) { return std::isfinite(x) ? format_real(x) : "null"; }

std::string_view kind_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::Agreement: return "agreement";
    case CheckKind::Bound: return "bound";
    case CheckKind::Finite: return "finite";
  }
  return "agreement";
}

}  // namespace

CaseRecord agreement_case(std::string name, Parameters params, double observed, double expected, double tolerance) {
  CaseRecord r{std::move(name), std::move(params), CheckKind::Agreement, observed, expected};
  r.abs_err = std::abs(observed - expected);
  r.rel_err = expected == 0.0 ? r.abs_err : r.abs_err / std::abs(expected);
  r.tolerance = tolerance;
  r.pass = std::isfinite(observed) && r.rel_err <= tolerance;
  return r;
}

CaseRecord bound_case(std::string name, Parameters params, double observed, double bound, double tolerance) {
  CaseRecord r{std::move(name), std::move(params), CheckKind::Bound, observed, bound};
  r.abs_err = std::max(observed - bound, 0.0);
  r.rel_err = bound == 0.0 ? r.abs_err : r.abs_err / std::abs(bound);
  r.tolerance = tolerance;
  r.pass = std::isfinite(observed) && observed <= bound + std::abs(bound) * tolerance;
  return r;
}

CaseRecord finite_case(std::string name, Parameters params, double observed) {
  CaseRecord r{std::move(name), std::move(params), CheckKind::Finite, observed, observed};
  r.pass = std::isfinite(observed);
  return r;
}

void VerificationReport::finalize() {
  std::stable_sort(cases.begin(), cases.end(), [](const CaseRecord& a, const CaseRecord& b) { return a.name < b.name; });
  summary.total = static_cast<int>(cases.size());
  summary.passed = static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.pass; }));
  summary.max_rel_err = 0.0;
  for (const auto& c : cases)
    if (c.kind != CheckKind::Finite) summary.max_rel_err = std::max(summary.max_rel_err, c.rel_err);
}

VerificationReport merge_reports(std::string suite, const std::vector<VerificationReport>& parts) {
  VerificationReport merged{std::move(suite), {}, {}};
  for (const auto& part : parts) {
    for (CaseRecord c : part.cases) {
      c.name = part.suite + "/" + c.name;
      merged.cases.push_back(std::move(c));
    }
    merged.summary.wall_time_seconds += part.summary.wall_time_seconds;
  }
  merged.finalize();
  return merged;
}

std::string to_json(const VerificationReport& report, bool include_timing) {
  std::ostringstream out;
  out << "{\n  \"suite\": " << quoted(report.suite) << ",\n  \"cases\": [";
  bool first = true;
  for (const auto& c : report.cases) {
    out << (first ? "\n" : ",\n") << "    {\n      \"name\": " << quoted(c.name) << ",\n      \"parameters\": {";
    bool first_param = true;
    for (const auto& [key, value] : c.parameters) {
      out << (first_param ? "" : ", ") << quoted(key) << ": ";
      if (const double* d = std::get_if<double>(&value))
        out << number(*d);
      else
        out << quoted(std::get<std::string>(value));
      first_param = false;
    }
    out << "},\n      \"kind\": " << quoted(std::string(kind_name(c.kind)))
        << ",\n      \"observed\": " << number(c.observed)
        << ",\n      \"bound_or_expected\": " << number(c.bound_or_expected)
        << ",\n      \"abs_err\": " << number(c.abs_err) << ",\n      \"rel_err\": " << number(c.rel_err)
        << ",\n      \"tolerance\": " << number(c.tolerance)
        << ",\n      \"pass\": " << (c.pass ? "true" : "false") << "\n    }";
    first = false;
  }
  out << (first ? "]" : "\n  ]") << ",\n  \"summary\": {\n    \"total\": " << report.summary.total
      << ",\n    \"passed\": " << report.summary.passed << ",\n    \"max_rel_err\": " << number(report.summary.max_rel_err);
  if (include_timing) out << ",\n    \"wall_time_seconds\": " << number(report.summary.wall_time_seconds);
  out << "\n  }\n}\n";
  return out.str();
}

}  // namespace gfrac
