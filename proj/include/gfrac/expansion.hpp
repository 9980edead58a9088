#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gfrac/multi_index.hpp"

namespace gfrac {

using Point = Eigen::VectorXd;

/// Finite Hermite expansion sum_nu c_nu h_nu in canonical form: keys sorted
/// lexicographically, exact zeros never stored.
class HermiteExpansion {
 public:
  using Terms = std::map<MultiIndex, double>;

  explicit HermiteExpansion(std::size_t dim = 1);
  HermiteExpansion(std::size_t dim, std::initializer_list<std::pair<MultiIndex, double>> terms);

  /// The single basis polynomial h_nu.
  static HermiteExpansion basis(const MultiIndex& nu);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Max order over stored keys; 0 for the empty expansion.
  int degree() const;

  /// Coefficient of nu (0 when absent).
  double coefficient(const MultiIndex& nu) const;

  /// Adds c to the coefficient of nu, dropping the term if it becomes exactly zero.
  void add(const MultiIndex& nu, double c);

  /// Overwrites the coefficient of nu (removes it when c == 0).
  void set(const MultiIndex& nu, double c);

  HermiteExpansion& operator+=(const HermiteExpansion& other);
  HermiteExpansion& operator-=(const HermiteExpansion& other);
  HermiteExpansion& operator*=(double s);

  bool operator==(const HermiteExpansion&) const = default;

 private:
  void check_key(const MultiIndex& nu) const;

  std::size_t dim_;
  Terms terms_;
};

HermiteExpansion operator+(HermiteExpansion a, const HermiteExpansion& b);
HermiteExpansion operator-(HermiteExpansion a, const HermiteExpansion& b);
HermiteExpansion operator*(double s, HermiteExpansion f);

/// Applies a diagonal operator: c_nu <- m(|nu|) c_nu.
HermiteExpansion apply_chaos_multiplier(const HermiteExpansion& f, const std::function<double(int)>& multiplier);

/// Maximum termwise |a_nu - b_nu|.
double max_abs_difference(const HermiteExpansion& a, const HermiteExpansion& b);

/// Maximum over keys of |a_nu - b_nu| / |b_nu| (absolute where b_nu == 0).
double max_relative_difference(const HermiteExpansion& a, const HermiteExpansion& b);

/// sqrt(sum c_nu^2), the L^2(gamma_d) norm.
double l2_coefficient_norm(const HermiteExpansion& f);

double expansion_eval(const HermiteExpansion& f, const Point& x);

/// J_n f: keeps the terms with |nu| = n.
HermiteExpansion chaos_projection(const HermiteExpansion& f, int n);

/// f minus its mean, i.e. removes the nu = 0 term.
HermiteExpansion pi0(const HermiteExpansion& f);

/// d/dx_axis using h_n' = sqrt(2n) h_{n-1}.
HermiteExpansion differentiate(const HermiteExpansion& f, std::size_t axis);

/// x_axis * f using x h_n = sqrt((n+1)/2) h_{n+1} + sqrt(n/2) h_{n-1}.
HermiteExpansion multiply_by_coordinate(const HermiteExpansion& f, std::size_t axis);

enum class GeneratorMode { Spectral, Differential };

/// Ornstein-Uhlenbeck generator L = (1/2) Laplacian - x . grad.
HermiteExpansion apply_ou_generator(const HermiteExpansion& f, GeneratorMode mode);

}  // namespace gfrac
