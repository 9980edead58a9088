#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gfrac/function_spaces.hpp"
#include "gfrac/quadrature.hpp"
#include "gfrac/verification.hpp"

using namespace gfrac;

namespace {

const TimeGrid kTg = TimeGrid::standard();
const GaussHermiteGrid kXg(2, 16);

// n^{alpha/2} Gamma((k-alpha) q)^{1/q} q^{-(k-alpha)}: seminorm of h_nu over ||h_nu||_p
double closed_form(int n, double alpha, double q, int k) {
  return std::pow(n, alpha / 2) * std::pow(std::tgamma((k - alpha) * q), 1 / q) * std::pow(q, -(k - alpha));
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK(TLNormParams::make(0.5, 2, 2).k == 1);
  CHECK(TLNormParams::make(1.0, 2, 2).k == 2);
  CHECK(TLNormParams::make(2.5, 2, 2).k == 3);
  CHECK_THROWS_AS(TLNormParams::make(-0.1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(TLNormParams::make(1.5, 2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(TLNormParams::make(0.5, 0.5, 2), std::invalid_argument);
  CHECK_THROWS_AS(TLNormParams::make(0.5, 2, 0.9), std::invalid_argument);
}

TEST_CASE("L^p(gamma) norms") {
  const auto h1 = HermiteExpansion::basis(MultiIndex{1, 0});
  CHECK(lp_gamma_norm(h1, 2, kXg) == doctest::Approx(1.0).epsilon(1e-13));
  // ||sqrt(2) x||_4^4 = 4 E[x^4] = 3
  CHECK(lp_gamma_norm(h1, 4, kXg) == doctest::Approx(std::pow(3.0, 0.25)).epsilon(1e-12));
  CHECK(lp_gamma_norm([](const Point&) { return -2.0; }, 3, kXg) == doctest::Approx(2.0));
}

TEST_CASE("norm of h_0 and of a first-chaos function") {
  const auto p = TLNormParams::make(0.5, 2, 2, 1);
  CHECK(tl_norm(HermiteExpansion::basis(MultiIndex{0, 0}), p, kTg, kXg) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tl_norm(2.0 * HermiteExpansion::basis(MultiIndex{0, 0}), p, kTg, kXg) == doctest::Approx(2.0).epsilon(1e-12));
  // (int_0^inf (t^{1/2} e^{-t})^2 dt/t)^{1/2} = 1/sqrt(2), so the norm is 1 + 1/sqrt(2)
  CHECK(tl_norm(HermiteExpansion::basis(MultiIndex{1, 0}), p, kTg, kXg) ==
        doctest::Approx(1.7071067811865475244).epsilon(1e-10));
}

TEST_CASE("single-chaos seminorms match the closed form") {
  struct Case {
    int n;
    double alpha, p, q;
    int k;
  };
  for (const Case& c : {Case{1, 0.5, 2, 2, 1}, Case{4, 0.5, 2, 1, 1}, Case{2, 1.5, 2, 2, 2}, Case{3, 0.8, 3, 2, 1},
                        Case{5, 2.5, 2, 1.5, 3}, Case{1, 0.0, 2, 2, 1}}) {
    const MultiIndex nu = c.n % 2 ? MultiIndex{c.n, 0} : MultiIndex{c.n / 2, c.n / 2};
    const auto h = HermiteExpansion::basis(nu);
    const auto params = TLNormParams::make(c.alpha, c.p, c.q, c.k);
    const double expected = closed_form(c.n, c.alpha, c.q, c.k) * lp_gamma_norm(h, c.p, kXg);
    CHECK(tl_seminorm(h, params, kTg, kXg) == doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("homogeneity and triangle inequality") {
  const auto family = random_family(42, 200, 10, 2, 6);
  for (double alpha : {0.5, 1.5})
    for (auto [p, q] : {std::pair{2.0, 2.0}, std::pair{2.0, 1.0}, std::pair{3.0, 2.0}}) {
      const auto params = TLNormParams::make(alpha, p, q);
      for (std::size_t i = 0; i + 1 < family.size(); i += 2) {
        const auto& f = family[i];
        const auto& g = family[i + 1];
        const double nf = tl_norm(f, params, kTg, kXg), ng = tl_norm(g, params, kTg, kXg);
        for (double c : {-3.0, 0.5, 7.0})
          CHECK(tl_norm(c * f, params, kTg, kXg) == doctest::Approx(std::abs(c) * nf).epsilon(1e-10));
        CHECK(tl_norm(f + g, params, kTg, kXg) <= nf + ng * (1 + 1e-10));
      }
    }
}

TEST_CASE("seminorm ignores the mean") {
  const auto f = random_family(42, 201, 1, 2, 5).front();
  const auto params = TLNormParams::make(0.7, 2, 2);
  CHECK(tl_seminorm(f, params, kTg, kXg) == doctest::Approx(tl_seminorm(pi0(f), params, kTg, kXg)).epsilon(1e-13));
}

TEST_CASE("dimension mismatch is an argument error") {
  const auto params = TLNormParams::make(0.5, 2, 2);
  CHECK_THROWS_AS(tl_norm(HermiteExpansion::basis(MultiIndex{1}), params, kTg, kXg), std::invalid_argument);
}
