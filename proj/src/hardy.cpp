#include "gfrac/hardy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gfrac/quadrature.hpp"

namespace gfrac {

namespace {

void require_exponents(double p, double r) {
  if (!(p >= 1.0)) throw std::invalid_argument("hardy: p must be >= 1");
  if (!(r > 0.0)) throw std::invalid_argument("hardy: r must be positive");
}

Eigen::ArrayXd sample_nonnegative(const std::function<double(double)>& g, const TimeGrid& grid) {
  Eigen::ArrayXd values = grid.nodes().unaryExpr(g);
  if ((values < 0.0).any()) throw std::invalid_argument("hardy: g must be nonnegative");
  return values;
}

// Visits the tensor Gauss-Legendre points of [0,1]^dim.
template <typename Visit>
void for_each_cube_point(int dim, const QuadratureRule& rule, Visit&& visit) {
  const int m = static_cast<int>(rule.nodes.size());
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  Eigen::VectorXd v(dim);
  while (true) {
    double w = 1.0;
    for (int i = 0; i < dim; ++i) {
      v(i) = rule.nodes(idx[static_cast<std::size_t>(i)]);
      w *= rule.weights(idx[static_cast<std::size_t>(i)]);
    }
    visit(v, w);
    int i = 0;
    while (i < dim && ++idx[static_cast<std::size_t>(i)] == m) idx[static_cast<std::size_t>(i++)] = 0;
    if (i == dim) break;
  }
}

}  // namespace

double HardySides::gap() const {
  if (lhs == 0.0 && rhs == 0.0) return 0.0;
  return std::abs(lhs - rhs) / std::abs(rhs);
}

HardySides hardy_check_1(const std::function<double(double)>& g, double p, double r, const TimeGrid& grid) {
  require_exponents(p, r);
  const Eigen::ArrayXd values = sample_nonnegative(g, grid);
  const Eigen::ArrayXd& x = grid.nodes();
  const Eigen::ArrayXd inner = cumulative_integral(grid, values).max(0.0);
  const double b = grid.t_max();
  const double inner_total = inner(inner.size() - 1);

  const double lhs = grid.integrate_values(inner.pow(p) * x.pow(-r - 1.0)) + std::pow(inner_total, p) * std::pow(b, -r) / r;
  const double rhs = p / r * grid.integrate_values((x * values).pow(p) * x.pow(-r - 1.0));
  return {lhs, rhs};
}

HardySides hardy_check_2(const std::function<double(double)>& g, double p, double r, const TimeGrid& grid) {
  require_exponents(p, r);
  const Eigen::ArrayXd values = sample_nonnegative(g, grid);
  const Eigen::ArrayXd& x = grid.nodes();
  const Eigen::ArrayXd running = cumulative_integral(grid, values);
  const Eigen::ArrayXd inner = (running(running.size() - 1) - running).max(0.0);
  const double a = grid.t_min();

  const double lhs = grid.integrate_values(inner.pow(p) * x.pow(r - 1.0)) + std::pow(inner(0), p) * std::pow(a, r) / r;
  const double rhs = p / r * grid.integrate_values((x * values).pow(p) * x.pow(r - 1.0));
  return {lhs, rhs};
}

HardySides hardy_check_k(const std::function<double(const Eigen::VectorXd&)>& g, double p, double r, int k,
                         const TimeGrid& grid, int cube_nodes) {
  require_exponents(p, r);
  if (k < 1) throw std::invalid_argument("hardy_check_k: k must be positive");
  if (!(k * p > r)) throw std::invalid_argument("hardy_check_k: need k p > r for the left side to converge");
  const QuadratureRule rule = gauss_legendre_rule(cube_nodes, 0.0, 1.0);
  const Eigen::ArrayXd& x = grid.nodes();
  const PowerTails tails{k * p - r - 1.0, -r - 1.0};

  auto checked = [&](const Eigen::VectorXd& point) {
    const double value = g(point);
    if (value < 0.0) throw std::invalid_argument("hardy_check_k: g must be nonnegative");
    return value;
  };

  // lhs: inner integral over [0,x]^k = x^k * int_{[0,1]^k} g(x v) dv
  Eigen::ArrayXd lhs_values(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    double cube = 0.0;
    for_each_cube_point(k, rule, [&](const Eigen::VectorXd& v, double w) { cube += w * checked(x(j) * v); });
    lhs_values(j) = std::pow(std::pow(x(j), k) * cube, p) * std::pow(x(j), -r - 1.0);
  }
  const double lhs = std::pow(std::max(grid.integrate_values(lhs_values, tails), 0.0), 1.0 / p);

  // rhs: one face per axis where that coordinate is the maximum
  auto ray_integral = [&](const Eigen::VectorXd& direction) {
    Eigen::ArrayXd values(x.size());
    for (Eigen::Index j = 0; j < x.size(); ++j)
      values(j) = std::pow(std::pow(x(j), k) * checked(x(j) * direction), p) * std::pow(x(j), -r - 1.0);
    return std::max(grid.integrate_values(values, PowerTails{k * p - r - 1.0, std::nullopt}), 0.0);
  };
  double faces = 0.0;
  Eigen::VectorXd direction(k);
  for (int axis = 0; axis < k; ++axis) {
    if (k == 1) {
      direction(0) = 1.0;
      faces += std::pow(ray_integral(direction), 1.0 / p);
      continue;
    }
    for_each_cube_point(k - 1, rule, [&](const Eigen::VectorXd& w_face, double w) {
      for (int i = 0, f = 0; i < k; ++i) direction(i) = (i == axis) ? 1.0 : w_face(f++);
      faces += w * std::pow(ray_integral(direction), 1.0 / p);
    });
  }
  return {lhs, p / r * faces};
}

}  // namespace gfrac
