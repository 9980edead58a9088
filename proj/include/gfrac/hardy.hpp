#pragma once

#include <functional>

#include <Eigen/Core>

#include "gfrac/time_grid.hpp"

namespace gfrac {

struct HardySides {
  double lhs;
  double rhs;

  bool holds(double tol) const { return lhs <= rhs * (1.0 + tol); }
  /// |lhs - rhs| / rhs, 0 when both vanish.
  double gap() const;
};

/// Log grid for Hardy checks: 2000 nodes on [1e-8, 50].
inline TimeGrid hardy_grid() { return {1e-8, 50.0, 2000}; }

/// int (int_0^x g)^p x^{-r-1} dx  vs  (p/r) int (y g(y))^p y^{-r-1} dy.
///
/// Both sides are evaluated for g restricted to the grid span [a, b]. That is
/// itself an admissible nonnegative function, so the inequality must hold
/// exactly; outside [a, b] the inner integral is constant and the outer tails
/// are added in closed form.
HardySides hardy_check_1(const std::function<double(double)>& g, double p, double r, const TimeGrid& grid = hardy_grid());

/// int (int_x^inf g)^p x^{r-1} dx  vs  (p/r) int (y g(y))^p y^{r-1} dy, same truncation.
HardySides hardy_check_2(const std::function<double(double)>& g, double p, double r, const TimeGrid& grid = hardy_grid());

/// k-fold form:
///   ( int (int_{[0,x]^k} g)^p x^{-r-1} dx )^{1/p}
///     <= int_{(0,1)^k} ( int (x^k g(x v))^p x^{-r-1} dx )^{1/p} dv.
/// Requires kp > r so the lhs converges at 0 and g decaying along every ray.
/// The right side is split into cube faces v = rho * w (max_i w_i = 1); the
/// radial integral is exactly p/r and the face integrals use Gauss-Legendre.
HardySides hardy_check_k(const std::function<double(const Eigen::VectorXd&)>& g, double p, double r, int k,
                         const TimeGrid& grid = hardy_grid(), int cube_nodes = 32);

}  // namespace gfrac
