#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gfrac/fractional.hpp"
#include "gfrac/verification.hpp"

using namespace gfrac;

namespace {

double coefficient_after(FracKind kind, double beta, ComputationPath path, const MultiIndex& nu) {
  const auto spec = FracOperatorSpec::make(kind, beta, path);
  return apply(spec, HermiteExpansion::basis(nu)).coefficient(nu);
}

const MultiIndex kNu1{1, 0}, kNu4{2, 2}, kNu9{4, 5}, kNu0{0, 0};

}  // namespace

TEST_CASE("names round-trip") {
  for (auto kind : {FracKind::RieszPotential, FracKind::BesselPotential, FracKind::RieszDerivative,
                    FracKind::BesselDerivative})
    CHECK(parse_frac_kind(to_string(kind)) == kind);
  CHECK_FALSE(parse_frac_kind("laplacian").has_value());
  CHECK(parse_path("integral") == ComputationPath::Integral);
  CHECK_FALSE(parse_path("pointwise").has_value());
}

TEST_CASE("operator spec validation") {
  CHECK_THROWS_AS(FracOperatorSpec::make(FracKind::RieszPotential, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(FracOperatorSpec::make(FracKind::RieszDerivative, 1.5, ComputationPath::Integral, 1),
                  std::invalid_argument);
  CHECK(FracOperatorSpec::make(FracKind::RieszDerivative, 1.0).k == 2);
  CHECK(FracOperatorSpec::make(FracKind::BesselDerivative, 2.5).k == 3);
  CHECK(FracOperatorSpec::make(FracKind::BesselDerivative, 0.5, ComputationPath::Integral, 3).k == 3);
  CHECK(default_difference_order(2.0) == 3);
}

TEST_CASE("spectral multipliers") {
  CHECK(coefficient_after(FracKind::RieszPotential, 2.0, ComputationPath::Spectral, kNu4) == doctest::Approx(0.25));
  CHECK(apply_spectral(FracOperatorSpec::make(FracKind::RieszPotential, 1.3), HermiteExpansion::basis(kNu0)).empty());
  CHECK(coefficient_after(FracKind::BesselPotential, 1.0, ComputationPath::Spectral, kNu4) == doctest::Approx(1.0 / 3));
  CHECK(coefficient_after(FracKind::RieszDerivative, 2.0, ComputationPath::Spectral, kNu9) == doctest::Approx(9.0));
  CHECK(coefficient_after(FracKind::BesselDerivative, 1.5, ComputationPath::Spectral, kNu4) ==
        doctest::Approx(std::pow(3.0, 1.5)));
  CHECK(spectral_multiplier(FracKind::RieszDerivative, 0.7, 0) == 0.0);
  CHECK(spectral_multiplier(FracKind::BesselPotential, 1.0, 2) == doctest::Approx(1.0 / (1.0 + std::sqrt(2.0))));
}

TEST_CASE("integral representations: documented examples") {
  const auto I = ComputationPath::Integral;
  CHECK(apply(FracOperatorSpec::make(FracKind::RieszPotential, 0.8, I), HermiteExpansion::basis(kNu0)).empty());
  CHECK(coefficient_after(FracKind::RieszPotential, 1.0, I, kNu1) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(coefficient_after(FracKind::RieszPotential, 0.5, I, kNu4) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-6));
  CHECK(coefficient_after(FracKind::BesselPotential, 1.0, I, kNu0) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(coefficient_after(FracKind::BesselPotential, 1.0, I, kNu4) == doctest::Approx(1.0 / 3).epsilon(1e-8));
  CHECK(coefficient_after(FracKind::BesselPotential, 2.0, I, kNu1) == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(apply(FracOperatorSpec::make(FracKind::RieszDerivative, 1.2, I), HermiteExpansion::basis(kNu0)).empty());
  CHECK(coefficient_after(FracKind::RieszDerivative, 0.5, I, kNu1) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(coefficient_after(FracKind::RieszDerivative, 1.5, I, kNu4) == doctest::Approx(2.82842712474619).epsilon(1e-6));
  CHECK(coefficient_after(FracKind::BesselDerivative, 0.5, I, kNu0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(coefficient_after(FracKind::BesselDerivative, 0.5, I, kNu1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  CHECK(coefficient_after(FracKind::BesselDerivative, 1.5, I, kNu4) == doctest::Approx(5.196152422706632).epsilon(1e-6));
}

TEST_CASE("dual-path equivalence on random expansions") {
  const auto family = random_family(42, 100, 8, 2, 6);
  for (auto kind : {FracKind::RieszPotential, FracKind::BesselPotential, FracKind::RieszDerivative,
                    FracKind::BesselDerivative})
    for (double beta : {0.5, 1.0, 1.5, 2.5})
      for (const auto& f : family) {
        const auto spectral = apply_spectral(FracOperatorSpec::make(kind, beta), f);
        const auto integral = apply(FracOperatorSpec::make(kind, beta, ComputationPath::Integral), f);
        CHECK(max_relative_difference(integral, spectral) < 1e-6);
      }
}

TEST_CASE("derivative multiplier does not depend on the difference order") {
  const auto f = random_family(42, 101, 1, 2, 5).front();
  const auto k2 = apply(FracOperatorSpec::make(FracKind::RieszDerivative, 0.6, ComputationPath::Integral, 2), f);
  const auto k3 = apply(FracOperatorSpec::make(FracKind::RieszDerivative, 0.6, ComputationPath::Integral, 3), f);
  CHECK(max_relative_difference(k2, k3) < 1e-6);
}

TEST_CASE("forward differences") {
  auto g = [](double t) { return std::sin(t) + t * t; };
  CHECK(forward_difference(g, 1, 0.3, 1.0) == doctest::Approx(g(1.3) - g(1.0)));
  CHECK(forward_difference([](double t) { return 3 * t - 1; }, 2, 0.7, 2.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(forward_difference([](double t) { return std::exp(-t); }, 2, std::log(2.0), 0.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(forward_difference(g, 0, 0.1, 0.0), std::invalid_argument);
}

TEST_CASE("constants c^k_beta") {
  CHECK(c_beta_k(0.5, 1) == doctest::Approx(-3.5449077018110320546).epsilon(1e-8));
  for (double beta : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    CHECK(c_beta_k(beta, 1) < 0.0);
    CHECK(c_beta_k(beta, 1) == doctest::Approx(-std::tgamma(1 - beta) / beta).epsilon(1e-8));
  }
  // independent high-precision quadrature
  CHECK(c_beta_k(1.5, 2) == doctest::Approx(1.9577984632679585862).epsilon(1e-8));
  CHECK(c_beta_k(2.5, 3) == doctest::Approx(-1.5294097982398566482).epsilon(1e-8));
  CHECK(c_beta_k_closed_form(1.5, 2) == doctest::Approx(1.9577984632679585862).epsilon(1e-12));
  CHECK_THROWS_AS(c_beta_k(1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(c_beta_k_closed_form(1.0, 2), std::invalid_argument);
  // cached value is reused
  CHECK(c_beta_k(1.5, 2) == c_beta_k(1.5, 2));
}

TEST_CASE("constants C_{beta,k}") {
  CHECK(big_C_beta_k(0.5, 1) == 2.0);
  CHECK(big_C_beta_k(1.7, 1) == doctest::Approx(1 / 1.7));
  CHECK(big_C_beta_k(1.5, 2) == doctest::Approx(1.1045694996615867968).epsilon(1e-10));
  CHECK(big_C_beta_k(2.5, 3) == doctest::Approx(0.86287707714280269660).epsilon(1e-10));
}

TEST_CASE("C_{1.5,2} against Monte Carlo with 1e7 samples") {
  std::mt19937_64 rng(2024);
  const std::size_t n = 10'000'000;
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = 0.5 * (uniform_pm1(rng) + 1.0) + 0.5 * (uniform_pm1(rng) + 1.0);
    const double x = 1.0 / std::sqrt(v);
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum_sq / n - mean * mean) / n);
  CHECK(std::abs(big_C_beta_k(1.5, 2) - mean) < 3 * se);
}

TEST_CASE("inversion identity") {
  const MultiIndex nu{1, 2};
  const auto h = HermiteExpansion::basis(nu);
  const auto h0 = HermiteExpansion::basis(kNu0);
  auto [a, b] = inversion_check(h0 + h, 1.1);
  CHECK(max_abs_difference(a, h) < 1e-14);
  CHECK(max_abs_difference(b, h) < 1e-14);
  auto [c, d] = inversion_check(h0, 0.9);
  CHECK(c.empty());
  CHECK(d.empty());

  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_expansion(rng, static_cast<std::size_t>(1 + i % 3), 1 + i % 8);
    const double beta = 3.0 * (1.0 - 0.5 * (uniform_pm1(rng) + 1.0));
    const auto [x, y] = inversion_check(f, beta);
    CHECK(max_abs_difference(x, pi0(f)) < 1e-12);
    CHECK(max_abs_difference(y, pi0(f)) < 1e-12);
  }
}

TEST_CASE("potential/derivative duality") {
  const auto f = random_family(42, 102, 1, 3, 6).front();
  for (double beta : {0.3, 1.0, 2.7}) {
    const auto J = FracOperatorSpec::make(FracKind::BesselPotential, beta);
    const auto D = FracOperatorSpec::make(FracKind::BesselDerivative, beta);
    CHECK(max_abs_difference(apply_spectral(D, apply_spectral(J, f)), f) < 1e-13);
  }
}

TEST_CASE("monotonicity in beta") {
  for (int n : {2, 5, 9}) {
    double prev_I = spectral_multiplier(FracKind::RieszPotential, 0.1, n);
    double prev_D = spectral_multiplier(FracKind::RieszDerivative, 0.1, n);
    for (double beta = 0.2; beta < 3.0; beta += 0.1) {
      const double I = spectral_multiplier(FracKind::RieszPotential, beta, n);
      const double D = spectral_multiplier(FracKind::RieszDerivative, beta, n);
      CHECK(I < prev_I);
      CHECK(D > prev_D);
      prev_I = I;
      prev_D = D;
    }
  }
  CHECK(spectral_multiplier(FracKind::RieszPotential, 2.3, 1) == 1.0);
  CHECK(spectral_multiplier(FracKind::RieszDerivative, 2.3, 1) == 1.0);
}
