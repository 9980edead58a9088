#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "gfrac/expansion.hpp"
#include "gfrac/time_grid.hpp"

namespace gfrac {

enum class FracKind { RieszPotential, BesselPotential, RieszDerivative, BesselDerivative };
enum class ComputationPath { Spectral, Integral };

/// CLI names: riesz-potential | bessel-potential | riesz-derivative | bessel-derivative.
std::string_view to_string(FracKind kind);
std::optional<FracKind> parse_frac_kind(std::string_view name);
std::string_view to_string(ComputationPath path);
std::optional<ComputationPath> parse_path(std::string_view name);

/// Smallest integer strictly greater than beta.
int default_difference_order(double beta);

struct FracOperatorSpec {
  FracKind kind;
  double beta;
  int k;
  ComputationPath path;

  /// Validates beta > 0 and, for derivative kinds, beta < k.
  static FracOperatorSpec make(FracKind kind, double beta, ComputationPath path = ComputationPath::Spectral,
                               std::optional<int> k = std::nullopt);

  bool is_derivative() const { return kind == FracKind::RieszDerivative || kind == FracKind::BesselDerivative; }
};

/// Spectral multiplier of the operator on chaos level n.
double spectral_multiplier(FracKind kind, double beta, int n);

HermiteExpansion apply_spectral(const FracOperatorSpec& spec, const HermiteExpansion& f);

/// Dispatches on spec.path; the integral path uses `tg`.
HermiteExpansion apply(const FracOperatorSpec& spec, const HermiteExpansion& f, const TimeGrid& tg = TimeGrid::standard());

/// (1/Gamma(beta)) int t^{beta-1} (P_t f - P_inf f) dt, coefficientwise.
HermiteExpansion riesz_potential_integral(const HermiteExpansion& f, double beta, const TimeGrid& tg);

/// (1/Gamma(beta)) int t^{beta} e^{-t} P_t f dt/t, coefficientwise.
HermiteExpansion bessel_potential_integral(const HermiteExpansion& f, double beta, const TimeGrid& tg);

/// (1/c^k_beta) int t^{-beta-1} (P_t - I)^k f dt, coefficientwise.
HermiteExpansion riesz_derivative_integral(const HermiteExpansion& f, double beta, int k, const TimeGrid& tg);

/// (1/c^k_beta) int t^{-beta-1} (e^{-t} P_t - I)^k f dt, coefficientwise.
HermiteExpansion bessel_derivative_integral(const HermiteExpansion& f, double beta, int k, const TimeGrid& tg);

/// k-th forward difference sum_j C(k,j) (-1)^j g(t + (k-j) s).
double forward_difference(const std::function<double(double)>& g, int k, double s, double t);

/// c^k_beta = int u^{-beta-1} (e^{-u} - 1)^k du on `tg`; cached per (beta, k, grid).
double c_beta_k(double beta, int k, const TimeGrid& tg = TimeGrid::standard());

/// Closed form of c^k_beta: Gamma(-beta) sum_j C(k,j) (-1)^j (k-j)^beta, non-integer beta only.
double c_beta_k_closed_form(double beta, int k);

/// C_{beta,k} = int_{(0,1)^k} (v_1 + ... + v_k)^{beta-k} dv.
double big_C_beta_k(double beta, int k);

/// Both spectral compositions I_beta(D^beta f) and D^beta(I_beta f).
std::pair<HermiteExpansion, HermiteExpansion> inversion_check(const HermiteExpansion& f, double beta);

}  // namespace gfrac
