#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gfrac/verification.hpp"

using namespace gfrac;

namespace {

void require_all_pass(const VerificationReport& r) {
  for (const auto& c : r.cases) {
    INFO(r.suite << "/" << c.name << " observed=" << c.observed << " expected=" << c.bound_or_expected);
    CHECK(c.pass);
  }
  CHECK(r.summary.total == static_cast<int>(r.cases.size()));
  CHECK(r.all_passed());
}

}  // namespace

TEST_CASE("random families are deterministic and normalized") {
  const auto a = random_family(42, 3, 10, 2, 8);
  const auto b = random_family(42, 3, 10, 2, 8);
  CHECK(a == b);
  CHECK(a != random_family(43, 3, 10, 2, 8));
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].degree() == 1 + static_cast<int>(i % 8));
    CHECK(l2_coefficient_norm(a[i]) == doctest::Approx(1.0));
  }
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = uniform_pm1(rng);
    CHECK(u >= -1.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("theorem parameter ranges") {
  CHECK(parse_theorem("T2.4") == Theorem::T24);
  CHECK_FALSE(parse_theorem("T3.1").has_value());
  CHECK_THROWS_AS(BoundednessParams({0.5, 0.7}).validate(Theorem::T23), std::invalid_argument);
  CHECK_THROWS_AS(BoundednessParams({1.2, 0.5}).validate(Theorem::T24), std::invalid_argument);
  CHECK_NOTHROW(BoundednessParams({1.2, 0.5}).validate(Theorem::T25));
  CHECK_THROWS_AS(BoundednessParams({-0.1, 1.0}).validate(Theorem::T21), std::invalid_argument);
  CHECK_THROWS_AS(suite_boundedness(Theorem::T26, {}, BoundednessParams{1.0, 2.0}), std::invalid_argument);
  for (Theorem t : {Theorem::T21, Theorem::T22, Theorem::T23, Theorem::T24, Theorem::T25, Theorem::T26})
    CHECK_NOTHROW(BoundednessParams::defaults(t).validate(t));
}

TEST_CASE("suites pass on the default configuration") {
  require_all_pass(suite_eigen());
  require_all_pass(suite_dual_path());
  require_all_pass(suite_inversion());
  require_all_pass(suite_lemmas());
  require_all_pass(suite_decay());
}

TEST_CASE("single boundedness theorem with custom parameters") {
  const auto r = suite_boundedness(Theorem::T25, {}, BoundednessParams{1.8, 0.9});
  require_all_pass(r);
  CHECK(r.suite == "boundedness");
}

TEST_CASE("reports are byte-identical across runs without timing") {
  CHECK(to_json(suite_inversion(), false) == to_json(suite_inversion(), false));
  CHECK(to_json(suite_eigen(), false) == to_json(suite_eigen(), false));
}

TEST_CASE("run_suite dispatch") {
  CHECK_FALSE(run_suite("nosuch").has_value());
  CHECK(suite_names().size() == 8);
  const auto r = run_suite("inversion");
  REQUIRE(r.has_value());
  CHECK(r->suite == "inversion");
}
