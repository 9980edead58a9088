#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "gfrac/expansion.hpp"
#include "gfrac/report.hpp"
#include "gfrac/time_grid.hpp"

namespace gfrac {

/// Grid and tolerance settings shared by every suite.
struct VerificationConfig {
  int quad_order = 16;     ///< Gauss-Hermite nodes per axis for x-space norms
  int time_nodes = 400;
  double t_min = 1e-6;
  double t_max = 40.0;
  double tolerance = 1e-6; ///< quadrature-agreement tolerance (subordination, dual paths, semigroup identities)
  std::uint64_t seed = 42;

  TimeGrid time_grid() const { return {t_min, t_max, time_nodes}; }
  void validate() const;
};

/// Uniform on [-1, 1) from the top 53 bits; portable across standard libraries.
double uniform_pm1(std::mt19937_64& rng);

/// All multi-indices up to `degree` with i.i.d. U[-1,1] coefficients, scaled to unit L^2 norm.
HermiteExpansion random_expansion(std::mt19937_64& rng, std::size_t dim, int degree);

/// `count` expansions with degrees cycling 1..max_degree; `tag` separates the streams of different families.
std::vector<HermiteExpansion> random_family(std::uint64_t seed, std::uint64_t tag, int count, std::size_t dim,
                                            int max_degree);

enum class Theorem { T21, T22, T23, T24, T25, T26 };

std::string_view to_string(Theorem theorem);
std::optional<Theorem> parse_theorem(std::string_view name);

/// Smoothness alpha of the source space and order beta of the operator.
struct BoundednessParams {
  double alpha;
  double beta;

  static BoundednessParams defaults(Theorem theorem);
  /// Throws std::invalid_argument outside the theorem's range.
  void validate(Theorem theorem) const;
};

VerificationReport suite_eigen(const VerificationConfig& cfg = {});
VerificationReport suite_dual_path(const VerificationConfig& cfg = {});
VerificationReport suite_inversion(const VerificationConfig& cfg = {});
VerificationReport suite_boundedness(Theorem theorem, const VerificationConfig& cfg = {},
                                     std::optional<BoundednessParams> params = std::nullopt);
/// All six theorems at their default parameters.
VerificationReport suite_boundedness(const VerificationConfig& cfg = {});
VerificationReport suite_inclusion(const VerificationConfig& cfg = {});
VerificationReport suite_lemmas(const VerificationConfig& cfg = {});
VerificationReport suite_decay(const VerificationConfig& cfg = {});

VerificationReport run_all(const VerificationConfig& cfg = {});

/// Suite names accepted by run_suite: eigen, dual-path, inversion, boundedness,
/// inclusion, lemmas, decay, all.
const std::vector<std::string_view>& suite_names();
std::optional<VerificationReport> run_suite(std::string_view name, const VerificationConfig& cfg = {});

}  // namespace gfrac
