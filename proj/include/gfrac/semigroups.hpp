#pragma once

#include <functional>

#include <Eigen/Core>

#include "gfrac/expansion.hpp"
#include "gfrac/quadrature.hpp"
#include "gfrac/time_grid.hpp"

namespace gfrac {

/// Density of the one-sided 1/2-stable law mu_t(ds) = t/(2 sqrt(pi)) e^{-t^2/4s} s^{-3/2}.
double stable_half_density(double t, double s);

/// mu_t discretized on a log grid in s. `tail_mass` is the exact mass of
/// (s_max, inf); `mass_deficit` is 1 minus the discrete mass including that tail.
class SubordinatorGrid {
 public:
  SubordinatorGrid(double t, TimeGrid s_grid);

  /// 400 log-spaced s-nodes on [1e-8, 1e4].
  static SubordinatorGrid standard(double t);

  double t() const { return t_; }
  const TimeGrid& s_grid() const { return s_grid_; }
  const Eigen::ArrayXd& density() const { return density_; }
  double tail_mass() const { return tail_mass_; }
  double mass_deficit() const { return mass_deficit_; }

  /// int phi(s) mu_t(ds); phi is assumed to settle to phi(s_max) beyond the grid.
  double integrate(const std::function<double(double)>& phi) const;

 private:
  double t_;
  TimeGrid s_grid_;
  Eigen::ArrayXd density_;
  double tail_mass_;
  double mass_deficit_;
};

/// Below this t the subordinated path defers to the spectral one.
inline constexpr double kSubordinationSmallTime = 0.05;

/// T_t f: c_nu <- e^{-t|nu|} c_nu.
HermiteExpansion ou_apply_spectral(const HermiteExpansion& f, double t);

/// T_t f(x) = int f(sqrt(1 - e^{-2t}) u + e^{-t} x) gamma_d(du) by quadrature.
double ou_apply_pointwise(const std::function<double(const Point&)>& f, double t, const Point& x,
                          const GaussHermiteGrid& grid);

/// Mehler kernel of T_t with respect to Lebesgue measure dy.
double mehler_kernel(double t, const Point& x, const Point& y);

/// P_t f: c_nu <- e^{-t sqrt|nu|} c_nu.
HermiteExpansion poisson_apply_spectral(const HermiteExpansion& f, double t);

/// P_t f = int T_s f mu_t(ds), quadrature over s of the spectral OU multipliers.
HermiteExpansion poisson_apply_subordinated(const HermiteExpansion& f, double t, const SubordinatorGrid& sub);
HermiteExpansion poisson_apply_subordinated(const HermiteExpansion& f, double t);

/// Poisson-Hermite kernel p(t,x,y) from its r-integral, evaluated with
/// r = e^{-sigma} on the log-spaced sigma grid carried by `sub` (sub.t() must equal t).
double poisson_kernel(double t, const Point& x, const Point& y, const SubordinatorGrid& sub);

/// u^{(k)}(., t): c_nu <- (-sqrt|nu|)^k e^{-t sqrt|nu|} c_nu.
HermiteExpansion poisson_time_derivative(const HermiteExpansion& f, int k, double t);

/// The scalar multiplier of poisson_time_derivative on chaos n.
double poisson_derivative_multiplier(int n, int k, double t);

/// P_inf f = int f dgamma_d, the nu = 0 coefficient.
double p_infinity(const HermiteExpansion& f);

}  // namespace gfrac
