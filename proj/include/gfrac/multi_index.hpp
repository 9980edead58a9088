#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gfrac {

/// A d-tuple of nonnegative integers. Ordering is lexicographic.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim) : components_(dim, 0) {}
  MultiIndex(std::initializer_list<int> components) : components_(components) { validate(); }
  explicit MultiIndex(std::vector<int> components) : components_(std::move(components)) { validate(); }

  std::size_t dim() const { return components_.size(); }
  int operator[](std::size_t i) const { return components_[i]; }
  const std::vector<int>& components() const { return components_; }

  /// |nu|, the chaos level.
  int order() const { return std::accumulate(components_.begin(), components_.end(), 0); }

  /// Copy with component i shifted by delta; the caller guarantees the result stays >= 0.
  MultiIndex shifted(std::size_t i, int delta) const {
    MultiIndex out = *this;
    out.components_.at(i) += delta;
    if (out.components_[i] < 0) throw std::invalid_argument("MultiIndex: negative component");
    return out;
  }

  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;

 private:
  void validate() const {
    for (int c : components_)
      if (c < 0) throw std::invalid_argument("MultiIndex: components must be nonnegative");
  }

  std::vector<int> components_;
};

/// All multi-indices of dimension `dim` with order <= max_order, in lexicographic order.
std::vector<MultiIndex> multi_indices_up_to(std::size_t dim, int max_order);

/// All multi-indices of dimension `dim` with order exactly n.
std::vector<MultiIndex> multi_indices_of_order(std::size_t dim, int n);

}  // namespace gfrac
