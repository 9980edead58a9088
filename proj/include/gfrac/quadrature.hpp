#pragma once

#include <cstddef>
#include <functional>

#include <Eigen/Core>

#include "gfrac/expansion.hpp"

namespace gfrac {

/// One-dimensional rule: nodes ascending, weights summing to the measure's mass.
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Golub-Welsch for the Gaussian density exp(-x^2)/sqrt(pi); weights sum to 1.
QuadratureRule gauss_hermite_rule(int m);

/// Gauss-Legendre on [a, b].
QuadratureRule gauss_legendre_rule(int m, double a = -1.0, double b = 1.0);

/// Tensor-product Gauss-Hermite rule for integrals against gamma_d. Exact for
/// polynomials of per-axis degree <= 2m-1.
class GaussHermiteGrid {
 public:
  GaussHermiteGrid(std::size_t dim, int nodes_per_axis);

  std::size_t dim() const { return dim_; }
  int nodes_per_axis() const { return static_cast<int>(rule_.nodes.size()); }
  const Eigen::VectorXd& axis_nodes() const { return rule_.nodes; }
  const Eigen::VectorXd& axis_weights() const { return rule_.weights; }

  /// Number of tensor points m^d.
  Eigen::Index size() const { return points_.cols(); }

  /// Tensor points as columns (d x m^d) and their weights (m^d).
  const Eigen::MatrixXd& points() const { return points_; }
  const Eigen::VectorXd& weights() const { return weights_; }

  /// Per-axis node index of tensor point j on axis i.
  int axis_index(Eigen::Index j, std::size_t i) const { return axis_index_(static_cast<Eigen::Index>(i), j); }

  double integrate(const std::function<double(const Point&)>& f) const;

 private:
  std::size_t dim_;
  QuadratureRule rule_;
  Eigen::MatrixXd points_;
  Eigen::VectorXd weights_;
  Eigen::MatrixXi axis_index_;
};

GaussHermiteGrid gauss_hermite_grid(std::size_t dim, int nodes_per_axis);

/// Default per-axis order for an expansion of the given degree.
inline int default_quad_order(int degree) { return degree + 2; }

/// <f, h_nu>_{gamma_d} by quadrature.
double project_coefficient(const std::function<double(const Point&)>& sampler, const MultiIndex& nu,
                           const GaussHermiteGrid& grid);

/// Values of f at every grid point, using per-axis Hermite tables.
Eigen::VectorXd evaluate_on_grid(const HermiteExpansion& f, const GaussHermiteGrid& grid);

/// Chaos components A_n(x_j) = (J_n f)(x_j); row j is a grid point, column n a chaos level 0..degree.
Eigen::MatrixXd chaos_components_on_grid(const HermiteExpansion& f, const GaussHermiteGrid& grid);

}  // namespace gfrac
