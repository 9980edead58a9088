#include "gfrac/semigroups.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace gfrac {

double stable_half_density(double t, double s) {
  if (s <= 0.0) return 0.0;
  return t / (2.0 * std::sqrt(std::numbers::pi)) * std::exp(-t * t / (4.0 * s)) * std::pow(s, -1.5);
}

SubordinatorGrid::SubordinatorGrid(double t, TimeGrid s_grid) : t_(t), s_grid_(std::move(s_grid)) {
  if (!(t > 0.0)) throw std::invalid_argument("SubordinatorGrid: t must be positive");
  density_ = s_grid_.nodes().unaryExpr([t](double s) { return stable_half_density(t, s); });
  // mass of (s_max, inf) is erf(t / (2 sqrt(s_max)))
  tail_mass_ = std::erf(t / (2.0 * std::sqrt(s_grid_.t_max())));
  mass_deficit_ = 1.0 - (s_grid_.integrate_values(density_) + tail_mass_);
}

SubordinatorGrid SubordinatorGrid::standard(double t) { return {t, TimeGrid(1e-8, 1e4, 400)}; }

double SubordinatorGrid::integrate(const std::function<double(double)>& phi) const {
  const Eigen::ArrayXd& s = s_grid_.nodes();
  Eigen::ArrayXd values(s.size());
  for (Eigen::Index j = 0; j < s.size(); ++j) values(j) = density_(j) * phi(s(j));
  return s_grid_.integrate_values(values) + tail_mass_ * phi(s_grid_.t_max());
}

HermiteExpansion ou_apply_spectral(const HermiteExpansion& f, double t) {
  if (t < 0.0) throw std::invalid_argument("ou_apply_spectral: t must be nonnegative");
  return apply_chaos_multiplier(f, [t](int n) { return std::exp(-t * n); });
}

double ou_apply_pointwise(const std::function<double(const Point&)>& f, double t, const Point& x,
                          const GaussHermiteGrid& grid) {
  if (!(t > 0.0)) throw std::invalid_argument("ou_apply_pointwise: t must be positive (use the spectral path at t = 0)");
  if (static_cast<std::size_t>(x.size()) != grid.dim()) throw std::invalid_argument("ou_apply_pointwise: dimension mismatch");
  const double spread = std::sqrt(-std::expm1(-2.0 * t));
  const double shrink = std::exp(-t);
  return grid.integrate([&](const Point& u) { return f(spread * u + shrink * x); });
}

double mehler_kernel(double t, const Point& x, const Point& y) {
  if (!(t > 0.0)) throw std::invalid_argument("mehler_kernel: t must be positive");
  if (x.size() != y.size()) throw std::invalid_argument("mehler_kernel: dimension mismatch");
  const double d = static_cast<double>(x.size());
  const double v = -std::expm1(-2.0 * t);
  const double dist2 = (y - std::exp(-t) * x).squaredNorm();
  return std::pow(std::numbers::pi * v, -d / 2.0) * std::exp(-dist2 / v);
}

HermiteExpansion poisson_apply_spectral(const HermiteExpansion& f, double t) {
  if (t < 0.0) throw std::invalid_argument("poisson_apply_spectral: t must be nonnegative");
  return apply_chaos_multiplier(f, [t](int n) { return std::exp(-t * std::sqrt(double(n))); });
}

HermiteExpansion poisson_apply_subordinated(const HermiteExpansion& f, double t, const SubordinatorGrid& sub) {
  if (!(t > 0.0)) throw std::invalid_argument("poisson_apply_subordinated: t must be positive");
  if (sub.t() != t) throw std::invalid_argument("poisson_apply_subordinated: subordinator grid built for another t");
  if (t < kSubordinationSmallTime) return poisson_apply_spectral(f, t);

  std::vector<double> multiplier(static_cast<std::size_t>(f.degree()) + 1);
  for (std::size_t n = 0; n < multiplier.size(); ++n)
    multiplier[n] = sub.integrate([n](double s) { return std::exp(-s * double(n)); });
  return apply_chaos_multiplier(f, [&](int n) { return multiplier[static_cast<std::size_t>(n)]; });
}

HermiteExpansion poisson_apply_subordinated(const HermiteExpansion& f, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("poisson_apply_subordinated: t must be positive");
  return poisson_apply_subordinated(f, t, SubordinatorGrid::standard(t));
}

double poisson_kernel(double t, const Point& x, const Point& y, const SubordinatorGrid& sub) {
  if (!(t > 0.0)) throw std::invalid_argument("poisson_kernel: t must be positive");
  if (sub.t() != t) throw std::invalid_argument("poisson_kernel: subordinator grid built for another t");
  if (x.size() != y.size()) throw std::invalid_argument("poisson_kernel: dimension mismatch");
  const double d = static_cast<double>(x.size());
  const double prefactor = 1.0 / (2.0 * std::pow(std::numbers::pi, (d + 1.0) / 2.0));

  // Integrand of the r-integral times r (the dr/r measure), as a function of sigma = -log r.
  auto r_integrand = [&](double sigma) {
    const double r = std::exp(-sigma);
    const double one_minus_r2 = -std::expm1(-2.0 * sigma);
    const double log_r = -sigma;
    return prefactor * t * std::exp(t * t / (4.0 * log_r)) * std::pow(-log_r, -1.5) *
           std::exp(-(y - r * x).squaredNorm() / one_minus_r2) * std::pow(one_minus_r2, -d / 2.0);
  };

  const TimeGrid& grid = sub.s_grid();
  Eigen::ArrayXd values(grid.count());
  for (Eigen::Index j = 0; j < values.size(); ++j) values(j) = r_integrand(grid.nodes()(j));
  // Beyond sigma_max the Gaussian factor is frozen at its limit; the remaining
  // sigma-integral is the stable tail mass.
  const double sigma_max = grid.t_max();
  return grid.integrate_values(values) + sub.tail_mass() * mehler_kernel(sigma_max, x, y);
}

double poisson_derivative_multiplier(int n, int k, double t) {
  if (k < 0) throw std::invalid_argument("poisson_time_derivative: k must be nonnegative");
  if (n == 0) return k == 0 ? 1.0 : 0.0;
  const double root = std::sqrt(double(n));
  return std::pow(-root, k) * std::exp(-t * root);
}

HermiteExpansion poisson_time_derivative(const HermiteExpansion& f, int k, double t) {
  if (k < 0) throw std::invalid_argument("poisson_time_derivative: k must be nonnegative");
  return apply_chaos_multiplier(f, [k, t](int n) { return poisson_derivative_multiplier(n, k, t); });
}

double p_infinity(const HermiteExpansion& f) { return f.coefficient(MultiIndex(f.dim())); }

}  // namespace gfrac
