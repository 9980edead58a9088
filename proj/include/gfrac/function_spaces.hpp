#pragma once

#include <functional>
#include <optional>

#include "gfrac/expansion.hpp"
#include "gfrac/quadrature.hpp"
#include "gfrac/time_grid.hpp"

namespace gfrac {

/// Parameters of the Gaussian Triebel-Lizorkin norm F^alpha_{p,q}.
struct TLNormParams {
  double alpha;
  double p;
  double q;
  int k;

  /// k defaults to floor(alpha) + 1. Throws std::invalid_argument on invalid values.
  static TLNormParams make(double alpha, double p, double q, std::optional<int> k = std::nullopt);
  void validate() const;
};

double lp_gamma_norm(const std::function<double(const Point&)>& f, double p, const GaussHermiteGrid& grid);
double lp_gamma_norm(const HermiteExpansion& f, double p, const GaussHermiteGrid& grid);

/// || ( int (t^{k-alpha} |d^k/dt^k P_t f|)^q dt/t )^{1/q} ||_{p, gamma_d}
double tl_seminorm(const HermiteExpansion& f, const TLNormParams& params, const TimeGrid& tg,
                   const GaussHermiteGrid& xg);

/// ||f||_p + tl_seminorm.
double tl_norm(const HermiteExpansion& f, const TLNormParams& params, const TimeGrid& tg, const GaussHermiteGrid& xg);

}  // namespace gfrac
