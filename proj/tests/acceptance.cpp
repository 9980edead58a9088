// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <string_view>

#include "gfrac/fractional.hpp"
#include "gfrac/function_spaces.hpp"
#include "gfrac/verification.hpp"

using namespace gfrac;

namespace {

using Clock = std::chrono::steady_clock;

struct Timed {
  VerificationReport report;
  double seconds;
};

Timed timed(const std::function<VerificationReport()>& run) {
  const auto start = Clock::now();
  auto report = run();
  return {std::move(report), std::chrono::duration<double>(Clock::now() - start).count()};
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

/// All cases whose name starts with one of the prefixes pass; `count` receives how many matched.
bool cases_pass(const VerificationReport& r, std::initializer_list<std::string_view> prefixes, int& count,
                std::string& first_failure) {
  bool ok = true;
  for (const auto& c : r.cases) {
    bool match = false;
    for (auto p : prefixes) match = match || starts_with(c.name, p);
    if (!match) continue;
    ++count;
    if (!c.pass && ok) {
      first_failure = c.name;
      ok = false;
    }
  }
  return ok && count > 0;
}

int failures = 0;

void report_line(int id, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

constexpr double kNoBudget = std::numeric_limits<double>::infinity();

/// Criterion over a suite's cases plus a runtime budget.
void suite_criterion(int id, const Timed& t, std::initializer_list<std::string_view> prefixes,
                     double budget = kNoBudget) {
  int count = 0;
  std::string failed;
  const bool cases_ok = cases_pass(t.report, prefixes, count, failed);
  const bool time_ok = t.seconds < budget;
  std::string detail = fmt("%.0f cases, suite %.3f s", count, t.seconds);
  if (budget < kNoBudget) detail += fmt(" (budget %.0f s)", budget);
  if (!cases_ok) detail += ", failing case: " + (failed.empty() ? std::string("<none matched>") : failed);
  report_line(id, cases_ok && time_ok, detail);
}

}  // namespace

int main() {
  const VerificationConfig cfg;

  const auto eigen = timed([&] { return suite_eigen(cfg); });
  suite_criterion(1, eigen, {"orthonormality/"}, 5.0);
  suite_criterion(2, eigen, {"generator/spectral-vs-differential"}, 2.0);
  suite_criterion(3, eigen, {"poisson/subordination sweep", "poisson/P_t subordination"}, 10.0);

  const auto dual = timed([&] { return suite_dual_path(cfg); });
  suite_criterion(4, dual,
                  {"riesz-potential/random", "bessel-potential/random", "riesz-derivative/random",
                   "bessel-derivative/random"},
                  20.0);

  {
    double worst_c = 0.0, worst_C = 0.0;
    const TimeGrid tg = cfg.time_grid();
    for (double beta : {0.25, 0.5, 0.75}) {
      const double expected = -std::tgamma(1.0 - beta) / beta;
      worst_c = std::max(worst_c, std::abs(c_beta_k(beta, 1, tg) - expected) / std::abs(expected));
      worst_C = std::max(worst_C, std::abs(big_C_beta_k(beta, 1) - 1.0 / beta) * beta);
    }
    report_line(5, worst_c < 1e-8 && worst_C < 1e-8,
                fmt("max rel err c^1_beta %.3g (tol 1e-8), C_beta,1 %.3g (tol 1e-8)", worst_c, worst_C));
  }

  const auto inversion = timed([&] { return suite_inversion(cfg); });
  suite_criterion(6, inversion, {"pi0/random"});

  {
    const auto inclusion = timed([&] { return suite_inclusion(cfg); });
    int count = 0;
    std::string failed;
    const bool functional_ok = cases_pass(inclusion.report, {"tl-norm/homogeneity", "tl-norm/triangle"}, count, failed);
    const auto params = TLNormParams::make(0.5, 2, 2, 1);
    const double norm = tl_norm(HermiteExpansion::basis(MultiIndex{1}), params, cfg.time_grid(),
                                GaussHermiteGrid(1, cfg.quad_order));
    const double expected = 1.5;
    const bool closed_ok = std::abs(norm - expected) < 1e-6;
    std::string detail = fmt("closed form: norm %.17g, expected %.17g (tol 1e-6)", norm, expected);
    detail += functional_ok ? "; homogeneity/triangle ok" : "; failing case: " + failed;
    if (!closed_ok) detail += "; the exact value of this norm is 1 + 1/sqrt(2)";
    report_line(7, closed_ok && functional_ok, detail);

    suite_criterion(8, inclusion, {"k-independence/", "inclusion/"});
  }

  const auto lemmas = timed([&] { return suite_lemmas(cfg); });
  suite_criterion(9, lemmas, {"hardy1/", "hardy2/", "hardy-k/"});

  {
    const auto bounded = timed([&] { return suite_boundedness(cfg); });
    const auto all = timed([&] { return run_all(cfg); });
    int count = 0;
    std::string failed;
    const bool bounded_ok = cases_pass(bounded.report, {"T2."}, count, failed);
    int all_count = 0;
    std::string all_failed;
    const bool all_ok = cases_pass(all.report, {""}, all_count, all_failed);
    std::string detail = fmt("%.0f boundedness cases, run_all %.0f cases in %.2f s (budget 120 s)", count, all_count,
                             all.seconds);
    if (!bounded_ok) detail += ", failing case: " + failed;
    if (!all_ok) detail += ", failing run_all case: " + all_failed;
    report_line(10, bounded_ok && all_ok && all.seconds < 120.0, detail);
  }

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
