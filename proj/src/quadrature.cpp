#include "gfrac/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "gfrac/hermite.hpp"

namespace gfrac {

namespace {

// Symmetric tridiagonal Jacobi matrix -> nodes and weights (zeroth moment mu0).
QuadratureRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag, double mu0) {
  const Eigen::Index m = diag.size();
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(m, m);
  jacobi.diagonal() = diag;
  if (m > 1) {
    jacobi.diagonal(1) = offdiag;
    jacobi.diagonal(-1) = offdiag;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  if (solver.info() != Eigen::Success) throw std::runtime_error("golub_welsch: eigen decomposition failed");
  QuadratureRule rule;
  rule.nodes = solver.eigenvalues();
  rule.weights = mu0 * solver.eigenvectors().row(0).transpose().array().square();
  return rule;
}

}  // namespace

QuadratureRule gauss_hermite_rule(int m) {
  if (m < 1) throw std::invalid_argument("gauss_hermite_rule: need at least one node");
  Eigen::VectorXd offdiag(std::max(m - 1, 0));
  for (int n = 1; n < m; ++n) offdiag(n - 1) = std::sqrt(n / 2.0);
  QuadratureRule rule = golub_welsch(Eigen::VectorXd::Zero(m), offdiag, 1.0);

  // Enforce the symmetry of the density exactly and renormalize the mass.
  for (int i = 0; i < m / 2; ++i) {
    const double x = 0.5 * (rule.nodes(m - 1 - i) - rule.nodes(i));
    const double w = 0.5 * (rule.weights(i) + rule.weights(m - 1 - i));
    rule.nodes(i) = -x;
    rule.nodes(m - 1 - i) = x;
    rule.weights(i) = rule.weights(m - 1 - i) = w;
  }
  if (m % 2 == 1) rule.nodes(m / 2) = 0.0;
  rule.weights /= rule.weights.sum();
  return rule;
}

QuadratureRule gauss_legendre_rule(int m, double a, double b) {
  if (m < 1) throw std::invalid_argument("gauss_legendre_rule: need at least one node");
  Eigen::VectorXd offdiag(std::max(m - 1, 0));
  for (int n = 1; n < m; ++n) offdiag(n - 1) = n / std::sqrt(4.0 * n * n - 1.0);
  QuadratureRule rule = golub_welsch(Eigen::VectorXd::Zero(m), offdiag, 2.0);
  rule.nodes = (0.5 * (b - a)) * (rule.nodes.array() + 1.0) + a;
  rule.weights *= 0.5 * (b - a);
  return rule;
}

GaussHermiteGrid::GaussHermiteGrid(std::size_t dim, int nodes_per_axis)
    : dim_(dim), rule_(gauss_hermite_rule(nodes_per_axis)) {
  if (dim == 0) throw std::invalid_argument("GaussHermiteGrid: dimension must be positive");
  const Eigen::Index m = nodes_per_axis;
  Eigen::Index total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= m;

  points_.resize(static_cast<Eigen::Index>(dim), total);
  weights_.resize(total);
  axis_index_.resize(static_cast<Eigen::Index>(dim), total);
  for (Eigen::Index j = 0; j < total; ++j) {
    Eigen::Index rest = j;
    double w = 1.0;
    for (Eigen::Index i = static_cast<Eigen::Index>(dim) - 1; i >= 0; --i) {
      const Eigen::Index k = rest % m;
      rest /= m;
      axis_index_(i, j) = static_cast<int>(k);
      points_(i, j) = rule_.nodes(k);
      w *= rule_.weights(k);
    }
    weights_(j) = w;
  }
}

double GaussHermiteGrid::integrate(const std::function<double(const Point&)>& f) const {
  double sum = 0.0;
  Point x(static_cast<Eigen::Index>(dim_));
  for (Eigen::Index j = 0; j < size(); ++j) {
    x = points_.col(j);
    sum += weights_(j) * f(x);
  }
  return sum;
}

GaussHermiteGrid gauss_hermite_grid(std::size_t dim, int nodes_per_axis) { return {dim, nodes_per_axis}; }

double project_coefficient(const std::function<double(const Point&)>& sampler, const MultiIndex& nu,
                           const GaussHermiteGrid& grid) {
  if (nu.dim() != grid.dim()) throw std::invalid_argument("project_coefficient: dimension mismatch");
  return grid.integrate([&](const Point& x) { return sampler(x) * hermite_eval(nu, x); });
}

namespace {

// table(n, k) = h_n(axis node k)
Eigen::MatrixXd axis_table(const GaussHermiteGrid& grid, int degree) {
  const int m = grid.nodes_per_axis();
  Eigen::MatrixXd table(degree + 1, m);
  for (int k = 0; k < m; ++k) {
    auto col = table.col(k);
    hermite_1d_all(grid.axis_nodes()(k), col);
  }
  return table;
}

}  // namespace

Eigen::VectorXd evaluate_on_grid(const HermiteExpansion& f, const GaussHermiteGrid& grid) {
  if (f.dim() != grid.dim()) throw std::invalid_argument("evaluate_on_grid: dimension mismatch");
  const Eigen::MatrixXd table = axis_table(grid, f.degree());
  Eigen::VectorXd values = Eigen::VectorXd::Zero(grid.size());
  for (Eigen::Index j = 0; j < grid.size(); ++j) {
    double sum = 0.0;
    for (const auto& [nu, c] : f.terms()) {
      double h = 1.0;
      for (std::size_t i = 0; i < nu.dim(); ++i) h *= table(nu[i], grid.axis_index(j, i));
      sum += c * h;
    }
    values(j) = sum;
  }
  return values;
}

Eigen::MatrixXd chaos_components_on_grid(const HermiteExpansion& f, const GaussHermiteGrid& grid) {
  if (f.dim() != grid.dim()) throw std::invalid_argument("chaos_components_on_grid: dimension mismatch");
  const int deg = f.degree();
  const Eigen::MatrixXd table = axis_table(grid, deg);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(grid.size(), deg + 1);
  for (Eigen::Index j = 0; j < grid.size(); ++j) {
    for (const auto& [nu, c] : f.terms()) {
      double h = 1.0;
      for (std::size_t i = 0; i < nu.dim(); ++i) h *= table(nu[i], grid.axis_index(j, i));
      out(j, nu.order()) += c * h;
    }
  }
  return out;
}

}  // namespace gfrac
