#pragma once

#include <optional>
#include <utility>

#include <Eigen/Core>

namespace gfrac {

/// Power-law behaviour of an integrand at the ends of a grid. When given, the
/// truncated tails (0, t_min) and (t_max, inf) are integrated analytically
/// from a two-term fit on the outermost nodes: g ~ t^a (c0 + c1 t) near 0 and
/// g ~ t^b (c0 + c1/t) near infinity. Requires a > -1 and b < -1.
struct PowerTails {
  std::optional<double> lower;
  std::optional<double> upper;
};

/// Log-spaced nodes on [t_min, t_max] with weights for int g(t) dt. In the
/// variable s = log t the rule is the trapezoid rule with Gregory end
/// corrections, so log-smooth integrands converge fast even when they do not
/// vanish at the truncation points.
class TimeGrid {
 public:
  TimeGrid(double t_min, double t_max, int count);

  /// Default grid for time integrals: 400 nodes on [1e-6, 40].
  static TimeGrid standard() { return {1e-6, 40.0, 400}; }

  double t_min() const { return t_min_; }
  double t_max() const { return t_max_; }
  int count() const { return static_cast<int>(nodes_.size()); }
  double log_step() const { return log_step_; }

  const Eigen::ArrayXd& nodes() const { return nodes_; }
  const Eigen::ArrayXd& weights() const { return weights_; }

  /// Same span with twice the number of intervals.
  TimeGrid refined() const { return {t_min_, t_max_, 2 * count() - 1}; }

  double integrate_values(const Eigen::Ref<const Eigen::ArrayXd>& values, const PowerTails& tails = {}) const;

  template <typename F>
  double integrate(F&& g, const PowerTails& tails = {}) const {
    Eigen::ArrayXd values(nodes_.size());
    for (Eigen::Index j = 0; j < nodes_.size(); ++j) values(j) = g(nodes_(j));
    return integrate_values(values, tails);
  }

  bool operator==(const TimeGrid& o) const {
    return t_min_ == o.t_min_ && t_max_ == o.t_max_ && nodes_.size() == o.nodes_.size();
  }

 private:
  double t_min_;
  double t_max_;
  double log_step_;
  Eigen::ArrayXd nodes_;
  Eigen::ArrayXd weights_;
};

/// Trapezoid rule in log coordinates with Gregory end corrections on a
/// uniform grid of `count` points: weights for sum_j w_j F(s_j) ~ int F ds / h.
Eigen::ArrayXd gregory_weights(int count);

/// Running integrals int_{t_0}^{t_j} g(t) dt at every node of the grid
/// (trapezoid in log t with the Euler-Maclaurin end-derivative correction).
Eigen::ArrayXd cumulative_integral(const TimeGrid& grid, const Eigen::Ref<const Eigen::ArrayXd>& values);

}  // namespace gfrac
