#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "orbitkit/linalg.hpp"
#include "orbitkit/root_system.hpp"

namespace orbitkit {

enum class HermitianFamily { su, sp, so_star, so2 };

/// su(p,q): (p, q); sp(n,ℝ): (n); so*(2n): (n); so(2,n): (n).
struct AlgebraLabel {
  HermitianFamily family = HermitianFamily::sp;
  int p = 1;
  int q = 0;

  static AlgebraLabel su(int p, int q) { return {HermitianFamily::su, p, q}; }
  static AlgebraLabel sp(int n) { return {HermitianFamily::sp, n, 0}; }
  static AlgebraLabel so_star(int n) { return {HermitianFamily::so_star, n, 0}; }
  static AlgebraLabel so2(int n) { return {HermitianFamily::so2, n, 0}; }

  /// Short machine name: "sp", "su", "sostar", "so2".
  std::string kind() const {
    switch (family) {
      case HermitianFamily::su: return "su";
      case HermitianFamily::sp: return "sp";
      case HermitianFamily::so_star: return "sostar";
      case HermitianFamily::so2: return "so2";
    }
    return "?";
  }

  /// Id prefix used in pair ids, e.g. "sp2", "su21", "sostar4", "so2_5".
  std::string id() const {
    switch (family) {
      case HermitianFamily::su: return "su" + std::to_string(p) + std::to_string(q);
      case HermitianFamily::sp: return "sp" + std::to_string(p);
      case HermitianFamily::so_star: return "sostar" + std::to_string(p);
      case HermitianFamily::so2: return "so2_" + std::to_string(p);
    }
    return "?";
  }

  std::string name() const {
    switch (family) {
      case HermitianFamily::su: return "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
      case HermitianFamily::sp: return "sp(" + std::to_string(p) + ",R)";
      case HermitianFamily::so_star: return "so*(" + std::to_string(2 * p) + ")";
      case HermitianFamily::so2: return "so(2," + std::to_string(p) + ")";
    }
    return "?";
  }

  /// Rank of the compact Cartan subalgebra t (= Lie rank of g).
  int lie_rank() const {
    switch (family) {
      case HermitianFamily::su: return p + q - 1;
      case HermitianFamily::sp: return p;
      case HermitianFamily::so_star: return p;
      case HermitianFamily::so2: return (p + 2) / 2;
    }
    return 0;
  }

  /// Real rank of g, i.e. the expected cascade length.
  int real_rank() const {
    switch (family) {
      case HermitianFamily::su: return std::min(p, q);
      case HermitianFamily::sp: return p;
      case HermitianFamily::so_star: return p / 2;
      case HermitianFamily::so2: return p == 1 ? 1 : 2;
    }
    return 0;
  }

  bool valid() const {
    switch (family) {
      case HermitianFamily::su: return p >= 1 && q >= 1;
      case HermitianFamily::sp: return p >= 1;
      case HermitianFamily::so_star: return p >= 3;
      case HermitianFamily::so2: return p == 1 || p >= 3;
    }
    return false;
  }

  friend bool operator==(const AlgebraLabel&, const AlgebraLabel&) = default;
};

/// ε-coordinate data of a Hermitian simple algebra: the root system of g with
/// the splitting into Δ(k,t) and Δ(p₊), and the characteristic element Z.
struct HermitianAlgebra {
  AlgebraLabel label;
  RootSystem roots;
  std::vector<Weight> compact_positive;     // Δ⁺(k,t)
  std::vector<Weight> noncompact_positive;  // Δ(p₊)
  Weight Z;

  std::size_t dim() const { return roots.dim(); }
  bool is_compact_root(const Weight& a) const {
    return roots.contains(a) && inner(a, Z).is_zero();
  }
};

namespace detail {

inline bool noncompact_root(const AlgebraLabel& g, const Weight& a) {
  switch (g.family) {
    case HermitianFamily::su: {
      // ε_i − ε_j with i on one side of p and j on the other.
      int plus = -1, minus = -1;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].sign() > 0) plus = static_cast<int>(i);
        if (a[i].sign() < 0) minus = static_cast<int>(i);
      }
      return (plus < g.p) != (minus < g.p);
    }
    case HermitianFamily::sp:
    case HermitianFamily::so_star: {
      Rational s;
      for (const auto& x : a) s += x;
      return !s.is_zero();
    }
    case HermitianFamily::so2: return !a[0].is_zero();
  }
  return false;
}

}  // namespace detail

inline HermitianAlgebra hermitian_data(const AlgebraLabel& label) {
  if (!label.valid()) throw Error("not a Hermitian algebra of this family");
  HermitianAlgebra g;
  g.label = label;
  switch (label.family) {
    case HermitianFamily::su: g.roots = make_root_system(Family::A, label.p + label.q - 1); break;
    case HermitianFamily::sp: g.roots = make_root_system(Family::C, label.p); break;
    case HermitianFamily::so_star: g.roots = make_root_system(Family::D, label.p); break;
    case HermitianFamily::so2: {
      const int m = (label.p + 2) / 2;
      g.roots = make_root_system(label.p % 2 ? Family::B : Family::D, m);
      break;
    }
  }
  for (const auto& a : g.roots.positive_roots())
    (detail::noncompact_root(label, a) ? g.noncompact_positive : g.compact_positive).push_back(a);

  // Z lies in the root span and pairs to 1 with the noncompact simple root and
  // to 0 with the others.
  const auto& simple = g.roots.simple_roots();
  const std::size_t r = simple.size();
  RationalMatrix gram(r, std::vector<Rational>(r));
  std::vector<Rational> rhs(r);
  int noncompact_simple = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) gram[i][j] = inner(simple[i], simple[j]);
    if (detail::noncompact_root(label, simple[i])) {
      rhs[i] = 1;
      ++noncompact_simple;
    }
  }
  if (noncompact_simple != 1) throw Error("not a Hermitian algebra of this family");
  auto c = solve_system(gram, rhs);
  if (!c) throw Error("not a Hermitian algebra of this family");
  g.Z = Weight(g.dim());
  for (std::size_t i = 0; i < r; ++i) g.Z += (*c)[i] * simple[i];

  for (const auto& b : g.noncompact_positive)
    if (inner(b, g.Z) != Rational(1)) throw Error("characteristic element check failed");
  for (const auto& a : g.compact_positive)
    if (!inner(a, g.Z).is_zero()) throw Error("characteristic element check failed");
  return g;
}

/// Literal reading (neither α + β nor α − β is a root), with β = ±α excluded.
inline bool strongly_orthogonal(const Weight& alpha, const Weight& beta, const RootSystem& ambient) {
  if (!ambient.contains(alpha) || !ambient.contains(beta)) throw Error("not a root");
  if (alpha == beta || alpha == -beta) return false;
  return !ambient.contains(alpha + beta) && !ambient.contains(alpha - beta);
}

struct Cascade {
  std::vector<Weight> roots;   // ν_1, …, ν_r
  std::vector<Weight> source;  // sorted, deduplicated

  std::size_t size() const { return roots.size(); }
};

/// Greedy highest-first maximal family of strongly orthogonal roots. "Highest"
/// is maximal for dominance, ties broken by the lexicographic order.
inline Cascade cascade(std::vector<Weight> source, const RootSystem& ambient) {
  if (source.empty()) throw Error("empty weight set");
  std::sort(source.begin(), source.end(), std::greater<>());
  source.erase(std::unique(source.begin(), source.end()), source.end());
  for (const auto& a : source)
    if (!ambient.contains(a)) throw Error("not a root");

  Cascade out;
  out.source = source;
  std::vector<Weight> pool = source;
  while (!pool.empty()) {
    // pool is lex-descending, so the first dominance-maximal entry wins ties.
    const Weight* best = nullptr;
    for (const auto& a : pool) {
      bool dominated = std::any_of(pool.begin(), pool.end(), [&](const Weight& b) {
        return b != a && ambient.dominates(b, a);
      });
      if (!dominated) {
        best = &a;
        break;
      }
    }
    const Weight nu = *best;
    out.roots.push_back(nu);
    std::vector<Weight> next;
    for (const auto& a : pool)
      if (strongly_orthogonal(a, nu, ambient)) next.push_back(a);
    pool = std::move(next);
  }
  return out;
}

}  // namespace orbitkit
