#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orbitkit/weight.hpp"

namespace orbitkit {

/// Exact phase-1 simplex (Bland's rule) for A x = b, x ≥ 0. Returns a feasible
/// x or nullopt.
inline std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& a,
                                                          const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw Error("dimension mismatch");
  const std::size_t n = m ? a[0].size() : 0;
  const std::size_t width = n + m + 1;  // structural, artificial, rhs
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = flip ? -b[i] : b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-1 objective Σ artificials.
  std::vector<Rational> cost(width);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < n || j == width - 1) cost[j] -= t[i][j];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (cost[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      const Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in phase 1
    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (!t[leave][j].is_zero()) t[i][j] -= f * t[leave][j];
    }
    if (!cost[enter].is_zero()) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (!t[leave][j].is_zero()) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (!cost[width - 1].is_zero()) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][width - 1];
  return x;
}

/// Convex weights θ with Σ θ_k points_k = target, or nullopt.
inline std::optional<std::vector<Rational>> convex_combination(const std::vector<Weight>& points, const Weight& target) {
  if (points.empty()) return std::nullopt;
  const std::size_t dim = target.size();
  std::vector<std::vector<Rational>> a(dim + 1, std::vector<Rational>(points.size()));
  std::vector<Rational> b(dim + 1);
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].size() != dim) throw Error("dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) a[i][k] = points[k][i];
    a[dim][k] = 1;
  }
  for (std::size_t i = 0; i < dim; ++i) b[i] = target[i];
  b[dim] = 1;
  return feasible_point(a, b);
}

}  // namespace orbitkit
