#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

#include "gfrac/multi_index.hpp"

namespace gfrac {

/// Normalized Hermite polynomial h_n(x) = H_n(x) / sqrt(2^n n!), orthonormal
/// against exp(-x^2)/sqrt(pi). Upward three-term recurrence on the normalized family.
template <typename Scalar>
Scalar hermite_1d(int n, Scalar x) {
  using std::sqrt;
  if (n < 0) throw std::invalid_argument("hermite_1d: negative order");
  Scalar prev(1);
  if (n == 0) return prev;
  Scalar curr = Scalar(sqrt(2.0)) * x;
  for (int j = 1; j < n; ++j) {
    const Scalar next = Scalar(sqrt(2.0 / (j + 1))) * x * curr - Scalar(sqrt(double(j) / (j + 1))) * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

/// Fills out(j) = h_j(x) for j = 0..out.size()-1.
template <typename Derived>
void hermite_1d_all(typename Derived::Scalar x, Eigen::DenseBase<Derived>& out) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = out.size();
  if (n == 0) return;
  out(0) = Scalar(1);
  if (n == 1) return;
  out(1) = Scalar(std::sqrt(2.0)) * x;
  for (Eigen::Index j = 1; j + 1 < n; ++j)
    out(j + 1) = Scalar(std::sqrt(2.0 / double(j + 1))) * x * out(j) -
                 Scalar(std::sqrt(double(j) / double(j + 1))) * out(j - 1);
}

/// h_nu(x) = prod_i h_{nu_i}(x_i).
template <typename Derived>
typename Derived::Scalar hermite_eval(const MultiIndex& nu, const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  if (static_cast<std::size_t>(x.size()) != nu.dim())
    throw std::invalid_argument("hermite_eval: dimension mismatch");
  Scalar value(1);
  for (Eigen::Index i = 0; i < x.size(); ++i) value *= hermite_1d(nu[static_cast<std::size_t>(i)], x(i));
  return value;
}

}  // namespace gfrac
