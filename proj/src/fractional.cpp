#include "gfrac/fractional.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "gfrac/quadrature.hpp"

namespace gfrac {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_beta(double beta, const char* where) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument(std::string(where) + ": beta must be positive");
}

void require_integrable(double beta, int k, const char* where) {
  require_beta(beta, where);
  if (k < 1 || !(beta < k))
    throw std::invalid_argument(std::string(where) + ": difference order k must satisfy beta < k");
}

// Per-chaos scalar integrals: out(n) = integral for chaos n, reused across terms.
template <typename ScalarIntegral>
HermiteExpansion coefficientwise(const HermiteExpansion& f, ScalarIntegral&& integral) {
  std::map<int, double> cache;
  return apply_chaos_multiplier(f, [&](int n) {
    auto [it, inserted] = cache.try_emplace(n, 0.0);
    if (inserted) it->second = integral(n);
    return it->second;
  });
}

// int t^{-beta-1} (e^{-t rate} - 1)^k dt; the binomial form of the integrand is
// evaluated through expm1 to keep the small-t region free of cancellation.
double difference_power_integral(double beta, int k, double rate, const TimeGrid& tg) {
  return tg.integrate([&](double t) { return std::pow(t, -beta - 1.0) * std::pow(std::expm1(-t * rate), k); },
                      PowerTails{k - beta - 1.0, -beta - 1.0});
}

}  // namespace

std::string_view to_string(FracKind kind) {
  switch (kind) {
    case FracKind::RieszPotential: return "riesz-potential";
    case FracKind::BesselPotential: return "bessel-potential";
    case FracKind::RieszDerivative: return "riesz-derivative";
    case FracKind::BesselDerivative: return "bessel-derivative";
  }
  return "unknown";
}

std::optional<FracKind> parse_frac_kind(std::string_view name) {
  for (FracKind k : {FracKind::RieszPotential, FracKind::BesselPotential, FracKind::RieszDerivative,
                     FracKind::BesselDerivative})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::string_view to_string(ComputationPath path) { return path == ComputationPath::Spectral ? "spectral" : "integral"; }

std::optional<ComputationPath> parse_path(std::string_view name) {
  if (name == "spectral") return ComputationPath::Spectral;
  if (name == "integral") return ComputationPath::Integral;
  return std::nullopt;
}

int default_difference_order(double beta) { return static_cast<int>(std::floor(beta)) + 1; }

FracOperatorSpec FracOperatorSpec::make(FracKind kind, double beta, ComputationPath path, std::optional<int> k) {
  require_beta(beta, "FracOperatorSpec");
  FracOperatorSpec spec{kind, beta, k.value_or(default_difference_order(beta)), path};
  if (spec.is_derivative()) require_integrable(beta, spec.k, "FracOperatorSpec");
  return spec;
}

double spectral_multiplier(FracKind kind, double beta, int n) {
  const double root = std::sqrt(double(n));
  switch (kind) {
    case FracKind::RieszPotential: return n == 0 ? 0.0 : std::pow(double(n), -beta / 2.0);
    case FracKind::BesselPotential: return std::pow(1.0 + root, -beta);
    case FracKind::RieszDerivative: return n == 0 ? 0.0 : std::pow(double(n), beta / 2.0);
    case FracKind::BesselDerivative: return std::pow(1.0 + root, beta);
  }
  throw std::invalid_argument("spectral_multiplier: unknown kind");
}

HermiteExpansion apply_spectral(const FracOperatorSpec& spec, const HermiteExpansion& f) {
  return apply_chaos_multiplier(f, [&](int n) { return spectral_multiplier(spec.kind, spec.beta, n); });
}

HermiteExpansion apply(const FracOperatorSpec& spec, const HermiteExpansion& f, const TimeGrid& tg) {
  if (spec.path == ComputationPath::Spectral) return apply_spectral(spec, f);
  switch (spec.kind) {
    case FracKind::RieszPotential: return riesz_potential_integral(f, spec.beta, tg);
    case FracKind::BesselPotential: return bessel_potential_integral(f, spec.beta, tg);
    case FracKind::RieszDerivative: return riesz_derivative_integral(f, spec.beta, spec.k, tg);
    case FracKind::BesselDerivative: return bessel_derivative_integral(f, spec.beta, spec.k, tg);
  }
  throw std::invalid_argument("apply: unknown kind");
}

HermiteExpansion riesz_potential_integral(const HermiteExpansion& f, double beta, const TimeGrid& tg) {
  require_beta(beta, "riesz_potential_integral");
  const double norm = std::tgamma(beta);
  return coefficientwise(f, [&](int n) {
    // P_t h_nu - P_inf h_nu vanishes identically for nu = 0
    if (n == 0) return 0.0;
    const double root = std::sqrt(double(n));
    return tg.integrate([&](double t) { return std::pow(t, beta - 1.0) * std::exp(-t * root); },
                        PowerTails{beta - 1.0, std::nullopt}) /
           norm;
  });
}

HermiteExpansion bessel_potential_integral(const HermiteExpansion& f, double beta, const TimeGrid& tg) {
  require_beta(beta, "bessel_potential_integral");
  const double norm = std::tgamma(beta);
  return coefficientwise(f, [&](int n) {
    const double rate = 1.0 + std::sqrt(double(n));
    return tg.integrate([&](double t) { return std::pow(t, beta - 1.0) * std::exp(-t * rate); },
                        PowerTails{beta - 1.0, std::nullopt}) /
           norm;
  });
}

HermiteExpansion riesz_derivative_integral(const HermiteExpansion& f, double beta, int k, const TimeGrid& tg) {
  require_integrable(beta, k, "riesz_derivative_integral");
  const double c = c_beta_k(beta, k, tg);
  return coefficientwise(f, [&](int n) {
    if (n == 0) return 0.0;
    return difference_power_integral(beta, k, std::sqrt(double(n)), tg) / c;
  });
}

HermiteExpansion bessel_derivative_integral(const HermiteExpansion& f, double beta, int k, const TimeGrid& tg) {
  require_integrable(beta, k, "bessel_derivative_integral");
  const double c = c_beta_k(beta, k, tg);
  return coefficientwise(f, [&](int n) { return difference_power_integral(beta, k, 1.0 + std::sqrt(double(n)), tg) / c; });
}

double forward_difference(const std::function<double(double)>& g, int k, double s, double t) {
  if (k < 1) throw std::invalid_argument("forward_difference: k must be positive");
  if (!(s > 0.0)) throw std::invalid_argument("forward_difference: increment must be positive");
  double sum = 0.0;
  for (int j = 0; j <= k; ++j) sum += binomial(k, j) * ((j % 2 == 0) ? 1.0 : -1.0) * g(t + (k - j) * s);
  return sum;
}

double c_beta_k(double beta, int k, const TimeGrid& tg) {
  require_integrable(beta, k, "c_beta_k");
  using Key = std::tuple<double, int, double, double, int>;
  static std::mutex mutex;
  static std::map<Key, double> cache;
  const Key key{beta, k, tg.t_min(), tg.t_max(), tg.count()};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const double value = difference_power_integral(beta, k, 1.0, tg);
  std::lock_guard lock(mutex);
  cache.emplace(key, value);
  return value;
}

double c_beta_k_closed_form(double beta, int k) {
  require_integrable(beta, k, "c_beta_k_closed_form");
  if (beta == std::floor(beta)) throw std::invalid_argument("c_beta_k_closed_form: integer beta is a pole of Gamma(-beta)");
  double sum = 0.0;
  for (int j = 0; j < k; ++j) sum += binomial(k, j) * ((j % 2 == 0) ? 1.0 : -1.0) * std::pow(double(k - j), beta);
  return std::tgamma(-beta) * sum;
}

double big_C_beta_k(double beta, int k) {
  require_beta(beta, "big_C_beta_k");
  if (k < 1) throw std::invalid_argument("big_C_beta_k: k must be positive");
  if (k == 1) return 1.0 / beta;
  // v = rho * w with max_i w_i = 1: the radial factor integrates to 1/beta and by
  // symmetry the k faces contribute equally, leaving a smooth integral over the cube.
  const int dim = k - 1;
  const QuadratureRule rule = gauss_legendre_rule(24, 0.0, 1.0);
  const int m = static_cast<int>(rule.nodes.size());
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  double face = 0.0;
  while (true) {
    double sum = 1.0, w = 1.0;
    for (int i = 0; i < dim; ++i) {
      sum += rule.nodes(idx[static_cast<std::size_t>(i)]);
      w *= rule.weights(idx[static_cast<std::size_t>(i)]);
    }
    face += w * std::pow(sum, beta - k);
    int i = 0;
    while (i < dim && ++idx[static_cast<std::size_t>(i)] == m) idx[static_cast<std::size_t>(i++)] = 0;
    if (i == dim) break;
  }
  return k / beta * face;
}

std::pair<HermiteExpansion, HermiteExpansion> inversion_check(const HermiteExpansion& f, double beta) {
  const auto potential = FracOperatorSpec::make(FracKind::RieszPotential, beta);
  const auto derivative = FracOperatorSpec::make(FracKind::RieszDerivative, beta);
  return {apply_spectral(potential, apply_spectral(derivative, f)),
          apply_spectral(derivative, apply_spectral(potential, f))};
}

}  // namespace gfrac
