#include "gfrac/function_spaces.hpp"

#include <cmath>
#include <stdexcept>

#include "gfrac/semigroups.hpp"

namespace gfrac {

namespace {

Eigen::ArrayXd abs_pow(const Eigen::ArrayXd& v, double p) {
  if (p == 1.0) return v.abs();
  if (p == 2.0) return v.square();
  return v.abs().pow(p);
}

double root(double s, double p) {
  if (p == 1.0) return s;
  if (p == 2.0) return std::sqrt(s);
  return std::pow(s, 1.0 / p);
}

}  // namespace

TLNormParams TLNormParams::make(double alpha, double p, double q, std::optional<int> k) {
  TLNormParams params{alpha, p, q, k.value_or(static_cast<int>(std::floor(alpha)) + 1)};
  params.validate();
  return params;
}

void TLNormParams::validate() const {
  if (!(alpha >= 0.0)) throw std::invalid_argument("TLNormParams: alpha must be nonnegative");
  if (!(k > alpha)) throw std::invalid_argument("TLNormParams: k must exceed alpha");
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("TLNormParams: p must be in [1, inf)");
  if (!(q >= 1.0) || !std::isfinite(q)) throw std::invalid_argument("TLNormParams: q must be in [1, inf)");
}

double lp_gamma_norm(const std::function<double(const Point&)>& f, double p, const GaussHermiteGrid& grid) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_gamma_norm: p must be >= 1");
  return root(grid.integrate([&](const Point& x) { return std::pow(std::abs(f(x)), p); }), p);
}

double lp_gamma_norm(const HermiteExpansion& f, double p, const GaussHermiteGrid& grid) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_gamma_norm: p must be >= 1");
  const Eigen::ArrayXd values = evaluate_on_grid(f, grid).array();
  return root((grid.weights().array() * abs_pow(values, p)).sum(), p);
}

double tl_seminorm(const HermiteExpansion& f, const TLNormParams& params, const TimeGrid& tg,
                   const GaussHermiteGrid& xg) {
  params.validate();
  if (f.dim() != xg.dim()) throw std::invalid_argument("tl_seminorm: dimension mismatch");
  if (f.empty() || f.degree() == 0) return 0.0;

  const int levels = f.degree() + 1;
  const Eigen::ArrayXd& t = tg.nodes();
  const double lift = params.k - params.alpha;

  // multipliers(n, j) = t_j^{k-alpha} d^k/dt^k e^{-t sqrt n} at t_j
  Eigen::MatrixXd multipliers(levels, t.size());
  for (int n = 0; n < levels; ++n)
    for (Eigen::Index j = 0; j < t.size(); ++j)
      multipliers(n, j) = std::pow(t(j), lift) * poisson_derivative_multiplier(n, params.k, t(j));

  // u(x_i, t_j) weighted by t^{k-alpha}; one GEMM over all grid points.
  const Eigen::MatrixXd weighted = chaos_components_on_grid(f, xg) * multipliers;

  // Integrand of the inner integral against dt: |.|^q / t ~ t^{(k-alpha)q - 1} near 0.
  const PowerTails tails{lift * params.q - 1.0, std::nullopt};
  const Eigen::ArrayXd inv_t = t.inverse();
  Eigen::ArrayXd inner(xg.size());
  for (Eigen::Index i = 0; i < xg.size(); ++i) {
    const Eigen::ArrayXd row = weighted.row(i).transpose().array();
    inner(i) = tg.integrate_values(abs_pow(row, params.q) * inv_t, tails);
  }
  // inner^(p/q) then the outer L^p norm
  inner = inner.max(0.0);
  const Eigen::ArrayXd g = (params.p == params.q) ? inner : inner.pow(params.p / params.q);
  return root((xg.weights().array() * g).sum(), params.p);
}

double tl_norm(const HermiteExpansion& f, const TLNormParams& params, const TimeGrid& tg, const GaussHermiteGrid& xg) {
  return lp_gamma_norm(f, params.p, xg) + tl_seminorm(f, params, tg, xg);
}

}  // namespace gfrac
