#include "gfrac/time_grid.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace gfrac {

namespace {

// Gregory coefficients for the m-th difference, m = 1..6.
constexpr std::array<double, 6> kGregory = {1.0 / 12.0,       1.0 / 24.0,    19.0 / 720.0,
                                            3.0 / 160.0,      863.0 / 60480.0, 275.0 / 24192.0};

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Eigen::ArrayXd gregory_weights(int count) {
  const int order = static_cast<int>(kGregory.size());
  if (count < 2 * (order + 1)) throw std::invalid_argument("gregory_weights: too few nodes");
  Eigen::ArrayXd w = Eigen::ArrayXd::Ones(count);
  w(0) = w(count - 1) = 0.5;
  const int last = count - 1;
  for (int m = 1; m <= order; ++m) {
    const double g = kGregory[m - 1];
    const double sign0 = (m % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i <= m; ++i) {
      const double b = binomial(m, i);
      // nabla^m f_n = sum_i (-1)^i C(m,i) f_{n-i}
      w(last - i) -= g * ((i % 2 == 0) ? b : -b);
      // Delta^m f_0 = sum_i (-1)^(m-i) C(m,i) f_i
      w(i) -= g * sign0 * (((m - i) % 2 == 0) ? b : -b);
    }
  }
  return w;
}

TimeGrid::TimeGrid(double t_min, double t_max, int count) : t_min_(t_min), t_max_(t_max) {
  if (!(t_min > 0.0) || !(t_max > t_min)) throw std::invalid_argument("TimeGrid: need 0 < t_min < t_max");
  if (count < 16) throw std::invalid_argument("TimeGrid: need at least 16 nodes");
  const double lo = std::log(t_min);
  const double hi = std::log(t_max);
  log_step_ = (hi - lo) / (count - 1);
  nodes_.resize(count);
  for (int j = 0; j < count; ++j) nodes_(j) = std::exp(lo + j * log_step_);
  nodes_(0) = t_min;
  nodes_(count - 1) = t_max;
  weights_ = log_step_ * nodes_ * gregory_weights(count);
}

double TimeGrid::integrate_values(const Eigen::Ref<const Eigen::ArrayXd>& values, const PowerTails& tails) const {
  if (values.size() != nodes_.size()) throw std::invalid_argument("TimeGrid::integrate_values: size mismatch");
  double sum = (weights_ * values).sum();
  const Eigen::Index n = values.size();
  if (tails.lower) {
    // g(t) ~ t^a (c0 + c1 t), fitted on the first two nodes
    const double a = *tails.lower;
    if (!(a > -1.0)) throw std::invalid_argument("TimeGrid::integrate_values: lower tail exponent must exceed -1");
    const double t0 = nodes_(0), t1 = nodes_(1);
    const double r0 = values(0) / std::pow(t0, a), r1 = values(1) / std::pow(t1, a);
    const double c1 = (r1 - r0) / (t1 - t0);
    const double c0 = r0 - c1 * t0;
    sum += c0 * std::pow(t0, a + 1.0) / (a + 1.0) + c1 * std::pow(t0, a + 2.0) / (a + 2.0);
  }
  if (tails.upper) {
    // g(t) ~ t^b (c0 + c1 / t), fitted on the last two nodes
    const double b = *tails.upper;
    if (!(b < -1.0)) throw std::invalid_argument("TimeGrid::integrate_values: upper tail exponent must be below -1");
    const double t0 = nodes_(n - 1), t1 = nodes_(n - 2);
    const double r0 = values(n - 1) / std::pow(t0, b), r1 = values(n - 2) / std::pow(t1, b);
    const double c1 = (r1 - r0) / (1.0 / t1 - 1.0 / t0);
    const double c0 = r0 - c1 / t0;
    sum += -c0 * std::pow(t0, b + 1.0) / (b + 1.0) - c1 * std::pow(t0, b) / b;
  }
  return sum;
}

Eigen::ArrayXd cumulative_integral(const TimeGrid& grid, const Eigen::Ref<const Eigen::ArrayXd>& values) {
  const Eigen::Index n = values.size();
  if (n != grid.count()) throw std::invalid_argument("cumulative_integral: size mismatch");
  const double h = grid.log_step();
  // F(s) = t g(t) in s = log t
  const Eigen::ArrayXd f = grid.nodes() * values;
  Eigen::ArrayXd dfds(n);
  dfds(0) = (-3.0 * f(0) + 4.0 * f(1) - f(2)) / (2.0 * h);
  dfds(n - 1) = (3.0 * f(n - 1) - 4.0 * f(n - 2) + f(n - 3)) / (2.0 * h);
  for (Eigen::Index j = 1; j + 1 < n; ++j) dfds(j) = (f(j + 1) - f(j - 1)) / (2.0 * h);

  Eigen::ArrayXd out(n);
  out(0) = 0.0;
  double trap = 0.0;
  for (Eigen::Index j = 1; j < n; ++j) {
    trap += 0.5 * h * (f(j - 1) + f(j));
    out(j) = trap - h * h / 12.0 * (dfds(j) - dfds(0));
  }
  return out;
}

}  // namespace gfrac
