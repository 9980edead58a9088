#include "gfrac/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gfrac/hermite.hpp"

namespace gfrac {

namespace {

void enumerate(std::size_t dim, int remaining, bool exact, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
  if (prefix.size() + 1 == dim) {
    const int lo = exact ? remaining : 0;
    for (int c = lo; c <= remaining; ++c) {
      prefix.push_back(c);
      out.emplace_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (int c = 0; c <= remaining; ++c) {
    prefix.push_back(c);
    enumerate(dim, remaining - c, exact, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_up_to(std::size_t dim, int max_order) {
  if (dim == 0) throw std::invalid_argument("multi_indices_up_to: dim must be positive");
  std::vector<MultiIndex> out;
  if (max_order < 0) return out;
  std::vector<int> prefix;
  enumerate(dim, max_order, false, prefix, out);
  return out;
}

std::vector<MultiIndex> multi_indices_of_order(std::size_t dim, int n) {
  if (dim == 0) throw std::invalid_argument("multi_indices_of_order: dim must be positive");
  std::vector<MultiIndex> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  enumerate(dim, n, true, prefix, out);
  return out;
}

HermiteExpansion::HermiteExpansion(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("HermiteExpansion: dimension must be positive");
}

HermiteExpansion::HermiteExpansion(std::size_t dim, std::initializer_list<std::pair<MultiIndex, double>> terms)
    : HermiteExpansion(dim) {
  for (const auto& [nu, c] : terms) add(nu, c);
}

HermiteExpansion HermiteExpansion::basis(const MultiIndex& nu) {
  HermiteExpansion f(nu.dim());
  f.set(nu, 1.0);
  return f;
}

int HermiteExpansion::degree() const {
  int d = 0;
  for (const auto& [nu, c] : terms_) d = std::max(d, nu.order());
  return d;
}

double HermiteExpansion::coefficient(const MultiIndex& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? 0.0 : it->second;
}

void HermiteExpansion::check_key(const MultiIndex& nu) const {
  if (nu.dim() != dim_) throw std::invalid_argument("HermiteExpansion: multi-index dimension mismatch");
}

void HermiteExpansion::add(const MultiIndex& nu, double c) {
  check_key(nu);
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(nu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

void HermiteExpansion::set(const MultiIndex& nu, double c) {
  check_key(nu);
  if (c == 0.0)
    terms_.erase(nu);
  else
    terms_[nu] = c;
}

HermiteExpansion& HermiteExpansion::operator+=(const HermiteExpansion& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("HermiteExpansion: dimension mismatch");
  for (const auto& [nu, c] : other.terms_) add(nu, c);
  return *this;
}

HermiteExpansion& HermiteExpansion::operator-=(const HermiteExpansion& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("HermiteExpansion: dimension mismatch");
  for (const auto& [nu, c] : other.terms_) add(nu, -c);
  return *this;
}

HermiteExpansion& HermiteExpansion::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = it->second == 0.0 ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

HermiteExpansion operator+(HermiteExpansion a, const HermiteExpansion& b) { return a += b; }
HermiteExpansion operator-(HermiteExpansion a, const HermiteExpansion& b) { return a -= b; }
HermiteExpansion operator*(double s, HermiteExpansion f) { return f *= s; }

HermiteExpansion apply_chaos_multiplier(const HermiteExpansion& f, const std::function<double(int)>& multiplier) {
  HermiteExpansion out(f.dim());
  for (const auto& [nu, c] : f.terms()) out.set(nu, multiplier(nu.order()) * c);
  return out;
}

double max_abs_difference(const HermiteExpansion& a, const HermiteExpansion& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_difference: dimension mismatch");
  double worst = 0.0;
  for (const auto& [nu, c] : a.terms()) worst = std::max(worst, std::abs(c - b.coefficient(nu)));
  for (const auto& [nu, c] : b.terms())
    if (!a.terms().contains(nu)) worst = std::max(worst, std::abs(c));
  return worst;
}

double max_relative_difference(const HermiteExpansion& a, const HermiteExpansion& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_relative_difference: dimension mismatch");
  double worst = 0.0;
  auto rel = [](double x, double ref) { return ref == 0.0 ? std::abs(x) : std::abs(x - ref) / std::abs(ref); };
  for (const auto& [nu, c] : a.terms()) worst = std::max(worst, rel(c, b.coefficient(nu)));
  for (const auto& [nu, c] : b.terms())
    if (!a.terms().contains(nu)) worst = std::max(worst, 1.0);
  return worst;
}

double l2_coefficient_norm(const HermiteExpansion& f) {
  double s = 0.0;
  for (const auto& [nu, c] : f.terms()) s += c * c;
  return std::sqrt(s);
}

double expansion_eval(const HermiteExpansion& f, const Point& x) {
  if (static_cast<std::size_t>(x.size()) != f.dim()) throw std::invalid_argument("expansion_eval: dimension mismatch");
  const int deg = f.degree();
  Eigen::MatrixXd table(deg + 1, x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    auto col = table.col(i);
    hermite_1d_all(x(i), col);
  }
  double sum = 0.0;
  for (const auto& [nu, c] : f.terms()) {
    double h = 1.0;
    for (std::size_t i = 0; i < nu.dim(); ++i) h *= table(nu[i], static_cast<Eigen::Index>(i));
    sum += c * h;
  }
  return sum;
}

HermiteExpansion chaos_projection(const HermiteExpansion& f, int n) {
  HermiteExpansion out(f.dim());
  for (const auto& [nu, c] : f.terms())
    if (nu.order() == n) out.set(nu, c);
  return out;
}

HermiteExpansion pi0(const HermiteExpansion& f) {
  HermiteExpansion out = f;
  out.set(MultiIndex(f.dim()), 0.0);
  return out;
}

HermiteExpansion differentiate(const HermiteExpansion& f, std::size_t axis) {
  if (axis >= f.dim()) throw std::invalid_argument("differentiate: axis out of range");
  HermiteExpansion out(f.dim());
  for (const auto& [nu, c] : f.terms()) {
    const int n = nu[axis];
    if (n == 0) continue;
    out.add(nu.shifted(axis, -1), std::sqrt(2.0 * n) * c);
  }
  return out;
}

HermiteExpansion multiply_by_coordinate(const HermiteExpansion& f, std::size_t axis) {
  if (axis >= f.dim()) throw std::invalid_argument("multiply_by_coordinate: axis out of range");
  HermiteExpansion out(f.dim());
  for (const auto& [nu, c] : f.terms()) {
    const int n = nu[axis];
    out.add(nu.shifted(axis, +1), std::sqrt((n + 1) / 2.0) * c);
    if (n > 0) out.add(nu.shifted(axis, -1), std::sqrt(n / 2.0) * c);
  }
  return out;
}

HermiteExpansion apply_ou_generator(const HermiteExpansion& f, GeneratorMode mode) {
  if (mode == GeneratorMode::Spectral) return apply_chaos_multiplier(f, [](int n) { return -double(n); });

  HermiteExpansion out(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) {
    const HermiteExpansion d1 = differentiate(f, i);
    out += 0.5 * differentiate(d1, i);
    out -= multiply_by_coordinate(d1, i);
  }
  return out;
}

}  // namespace gfrac
