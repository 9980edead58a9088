#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gfrac/hardy.hpp"

using namespace gfrac;

namespace {

double exp_neg(double y) { return std::exp(-y); }

}  // namespace

TEST_CASE("hardy1 exponential, p = r = 1: equality on the truncated span") {
  const auto s = hardy_check_1(exp_neg, 1, 1);
  // both sides equal int_a^b e^{-y}/y dy for a = 1e-8, b = 50
  CHECK(s.rhs == doctest::Approx(17.843465089050832587).epsilon(1e-9));
  CHECK(s.holds(1e-8));
  CHECK(s.gap() < 1e-4);
}

TEST_CASE("hardy1 documented families") {
  const auto zero = hardy_check_1([](double) { return 0.0; }, 2, 1);
  CHECK(zero.lhs == 0.0);
  CHECK(zero.rhs == 0.0);
  CHECK(zero.gap() == 0.0);
  const auto s = hardy_check_1([](double y) { return y * std::exp(-y); }, 2, 1);
  CHECK(s.rhs == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(s.lhs == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(s.holds(1e-8));
}

TEST_CASE("hardy1 printed factor p/r versus the classical (p/r)^p") {
  const auto s = hardy_check_1(exp_neg, 3, 2);
  // int (1 - e^{-x})^3 x^{-3} dx = 0.78487221564682...
  CHECK(s.lhs == doctest::Approx(0.78487221564682175).epsilon(1e-5));
  CHECK(s.rhs == doctest::Approx(0.5).epsilon(1e-7));
  CHECK_FALSE(s.holds(1e-8));
  CHECK(s.lhs <= s.rhs * std::pow(1.5, 2.0));
}

TEST_CASE("hardy2 documented families") {
  const auto s = hardy_check_2(exp_neg, 1, 1);
  CHECK(s.lhs == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(s.rhs == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(s.holds(1e-8));
  const auto zero = hardy_check_2([](double) { return 0.0; }, 1, 1);
  CHECK(zero.lhs == 0.0);
  CHECK(zero.rhs == 0.0);
  const auto bump = hardy_check_2([](double y) { return std::exp(-std::pow(2.0 * (y - 2.0), 4)); }, 2, 0.5);
  CHECK(bump.holds(1e-8));
}

TEST_CASE("hardy_k") {
  const auto k1 = hardy_check_k([](const Eigen::VectorXd& v) { return std::exp(-v(0)); }, 2, 1, 1);
  // lhs^p equals the hardy1 left side; int (1 - e^{-x})^2 x^{-2} dx = 2 ln 2
  CHECK(k1.lhs * k1.lhs == doctest::Approx(2 * std::log(2.0)).epsilon(1e-8));
  CHECK(k1.holds(1e-8));
  const auto k2 = hardy_check_k([](const Eigen::VectorXd& v) { return std::exp(-v.sum()); }, 1, 1, 2);
  CHECK(k2.lhs == doctest::Approx(2 * std::log(2.0)).epsilon(1e-8));
  CHECK(k2.holds(1e-8));
  const auto zero = hardy_check_k([](const Eigen::VectorXd&) { return 0.0; }, 1, 1, 3);
  CHECK(zero.lhs == 0.0);
  CHECK(zero.rhs == 0.0);
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(hardy_check_1([](double) { return -1.0; }, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(hardy_check_2(exp_neg, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(hardy_check_1(exp_neg, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(hardy_check_k([](const Eigen::VectorXd&) { return -0.5; }, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(hardy_check_k([](const Eigen::VectorXd&) { return 1.0; }, 1, 2, 2), std::invalid_argument);
}
