#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orbitkit/weight.hpp"

namespace orbitkit {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = b by Gauss–Jordan elimination. Returns nullopt when the system
/// is inconsistent; free variables (if any) are set to zero.
inline std::optional<std::vector<Rational>> solve_system(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw Error("dimension mismatch");
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

/// Coefficients c with Σ c_k basis_k = target, or nullopt if target is not in
/// the span.
inline std::optional<std::vector<Rational>> solve_combination(std::span<const Weight> basis,
                                                              const Weight& target) {
  const std::size_t dim = target.size();
  RationalMatrix a(dim, std::vector<Rational>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].size() != dim) throw Error("dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) a[i][k] = basis[k][i];
  }
  return solve_system(std::move(a), target.coords());
}

/// Greedy maximal linearly independent subfamily, in input order.
inline std::vector<Weight> independent_subset(std::span<const Weight> vs) {
  std::vector<Weight> echelon;  // reduced copies used for the rank test
  std::vector<std::size_t> lead;
  std::vector<Weight> picked;
  for (const auto& v : vs) {
    Weight w = v;
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      if (!w[lead[k]].is_zero()) w -= w[lead[k]] / echelon[k][lead[k]] * echelon[k];
    }
    std::size_t l = 0;
    while (l < w.size() && w[l].is_zero()) ++l;
    if (l == w.size()) continue;
    echelon.push_back(std::move(w));
    lead.push_back(l);
    picked.push_back(v);
  }
  return picked;
}

/// Exact orthogonal basis of a subspace of the ambient ε-coordinate space,
/// with the orthogonal projector onto it.
class OrthogonalFrame {
 public:
  OrthogonalFrame() = default;
  OrthogonalFrame(std::size_t ambient_dim, std::span<const Weight> spanning) : ambient_(ambient_dim) {
    for (const auto& v : spanning) {
      if (v.size() != ambient_) throw Error("dimension mismatch");
      Weight w = v - project(v);
      if (w.is_zero()) continue;
      norms_.push_back(inner(w, w));
      basis_.push_back(std::move(w));
    }
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Weight>& basis() const { return basis_; }

  Weight project(const Weight& w) const {
    if (w.size() != ambient_) throw Error("dimension mismatch");
    Weight out(ambient_);
    for (std::size_t k = 0; k < basis_.size(); ++k) out += inner(w, basis_[k]) / norms_[k] * basis_[k];
    return out;
  }

  bool contains(const Weight& w) const { return project(w) == w; }

 private:
  std::size_t ambient_ = 0;
  std::vector<Weight> basis_;
  std::vector<Rational> norms_;
};

}  // namespace orbitkit
