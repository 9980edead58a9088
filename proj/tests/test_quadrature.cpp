#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gfrac/quadrature.hpp"
#include "gfrac/verification.hpp"

using namespace gfrac;

TEST_CASE("gauss-hermite weights and moments") {
  for (int m : {1, 2, 5, 16, 40}) {
    const auto rule = gauss_hermite_rule(m);
    CHECK(rule.weights.sum() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((rule.weights.array() > 0).all());
    for (Eigen::Index i = 1; i < rule.nodes.size(); ++i) CHECK(rule.nodes(i) > rule.nodes(i - 1));
  }
  // E[x^{2j}] = (2j-1)!! / 2^j for the density exp(-x^2)/sqrt(pi)
  const auto rule = gauss_hermite_rule(10);
  double fact = 1.0;
  for (int j = 1; j <= 9; ++j) {
    fact *= (2 * j - 1) / 2.0;
    const double moment = (rule.weights.array() * rule.nodes.array().pow(2 * j)).sum();
    CHECK(moment == doctest::Approx(fact).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gauss_hermite_rule(0), std::invalid_argument);
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  const auto rule = gauss_legendre_rule(6, 0.0, 2.0);
  CHECK(rule.weights.sum() == doctest::Approx(2.0));
  const double integral = (rule.weights.array() * rule.nodes.array().pow(11)).sum();
  CHECK(integral == doctest::Approx(std::pow(2.0, 12) / 12).epsilon(1e-13));
}

TEST_CASE("tensor grid layout") {
  const GaussHermiteGrid grid(3, 4);
  CHECK(grid.size() == 64);
  CHECK(grid.weights().sum() == doctest::Approx(1.0));
  for (Eigen::Index j = 0; j < grid.size(); ++j)
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(grid.points()(static_cast<Eigen::Index>(i), j) == grid.axis_nodes()(grid.axis_index(j, i)));
  // E[x1^2 x2^2 x3^2] = 1/8
  CHECK(grid.integrate([](const Point& x) { return (x.array() * x.array()).prod(); }) == doctest::Approx(0.125));
}

TEST_CASE("grid evaluation and chaos components agree with direct evaluation") {
  std::mt19937_64 rng(5);
  const auto f = random_expansion(rng, 2, 5);
  const GaussHermiteGrid grid(2, 7);
  const Eigen::VectorXd values = evaluate_on_grid(f, grid);
  const Eigen::MatrixXd comps = chaos_components_on_grid(f, grid);
  CHECK(comps.cols() == 6);
  for (Eigen::Index j = 0; j < grid.size(); ++j) {
    const double direct = expansion_eval(f, grid.points().col(j));
    CHECK(values(j) == doctest::Approx(direct).epsilon(1e-13));
    CHECK(comps.row(j).sum() == doctest::Approx(direct).epsilon(1e-13));
  }
}
