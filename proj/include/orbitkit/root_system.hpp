#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbitkit/linalg.hpp"
#include "orbitkit/weight.hpp"

namespace orbitkit {

enum class Family { A, B, C, D };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

/// A finite reduced root system in ε-coordinates together with a positive
/// system. Classical systems come from make_root_system; derived systems (roots
/// of k^τ or of g^{τθ} on t^τ) come from from_positive and carry no family.
class RootSystem {
 public:
  RootSystem() = default;

  /// Builds the system whose positive roots are exactly `positive`
  /// (duplicates are dropped). The set must be a positive system.
  static RootSystem from_positive(std::size_t ambient_dim, std::vector<Weight> positive,
                                  std::optional<Family> family = std::nullopt) {
    RootSystem rs;
    rs.dim_ = ambient_dim;
    rs.family_ = family;
    for (const auto& w : positive) {
      if (w.size() != ambient_dim) throw Error("dimension mismatch");
      if (w.is_zero()) throw Error("zero weight is not a root");
    }
    std::sort(positive.begin(), positive.end(), std::greater<>());
    positive.erase(std::unique(positive.begin(), positive.end()), positive.end());
    rs.positive_ = std::move(positive);
    for (const auto& w : rs.positive_) {
      if (rs.positive_set_.count(-w)) throw Error("not a positive system");
      rs.positive_set_.insert(w);
    }
    for (const auto& w : rs.positive_) {
      rs.all_.insert(w);
      rs.all_.insert(-w);
    }
    // Simple roots: positive roots that are not a sum of two positive roots.
    for (const auto& a : rs.positive_) {
      bool decomposable = false;
      for (const auto& b : rs.positive_) {
        if (b == a) continue;
        if (rs.positive_set_.count(a - b)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) rs.simple_.push_back(a);
    }
    return rs;
  }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return simple_.size(); }
  std::optional<Family> family() const { return family_; }
  /// Positive roots, sorted lexicographically descending.
  const std::vector<Weight>& positive_roots() const { return positive_; }
  const std::vector<Weight>& simple_roots() const { return simple_; }
  std::vector<Weight> roots() const { return {all_.begin(), all_.end()}; }
  std::size_t size() const { return all_.size(); }

  bool contains(const Weight& w) const { return all_.count(w) > 0; }
  bool is_positive(const Weight& w) const { return positive_set_.count(w) > 0; }

  /// Coefficients of w in the basis of simple roots, if w lies in their span.
  std::optional<std::vector<Rational>> simple_coordinates(const Weight& w) const {
    return solve_combination(simple_, w);
  }

  /// a ≥ b in the dominance order: a − b is a nonnegative combination of
  /// simple roots.
  bool dominates(const Weight& a, const Weight& b) const {
    auto c = simple_coordinates(a - b);
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](const Rational& x) { return x.sign() >= 0; });
  }

  /// Sum of simple coordinates; a linear functional that refines dominance.
  Rational height(const Weight& w) const {
    auto c = simple_coordinates(w);
    if (!c) throw Error("weight outside the root span");
    Rational h;
    for (const auto& x : *c) h += x;
    return h;
  }

 private:
  std::size_t dim_ = 0;
  std::optional<Family> family_;
  std::vector<Weight> positive_;
  std::vector<Weight> simple_;
  std::set<Weight> positive_set_;
  std::set<Weight> all_;
};

/// Standard ε-realization: A_n lives in n + 1 coordinates, B_n, C_n, D_n in n.
/// The positive system is the lexicographic one.
inline RootSystem make_root_system(Family family, int rank) {
  if (rank < 1 || (family == Family::D && rank < 2)) throw Error("unsupported root system");
  const auto n = static_cast<std::size_t>(rank);
  std::vector<Weight> pos;
  if (family == Family::A) {
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) pos.push_back(Weight::unit(n + 1, i) - Weight::unit(n + 1, j));
    return RootSystem::from_positive(n + 1, std::move(pos), family);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pos.push_back(Weight::unit(n, i) - Weight::unit(n, j));
      pos.push_back(Weight::unit(n, i) + Weight::unit(n, j));
    }
    if (family == Family::B) pos.push_back(Weight::unit(n, i));
    if (family == Family::C) pos.push_back(Weight::unit(n, i, 2));
  }
  return RootSystem::from_positive(n, std::move(pos), family);
}

inline bool is_dominant(const Weight& mu, const std::vector<Weight>& positive_roots) {
  return std::all_of(positive_roots.begin(), positive_roots.end(),
                     [&](const Weight& a) { return inner(mu, a).sign() >= 0; });
}

/// s_α(w) = w − ⟨w, α^∨⟩ α.
inline Weight reflect(const Weight& w, const Weight& alpha) {
  return w - inner(w, coroot(alpha)) * alpha;
}

/// Dominant representative of the Weyl orbit of mu, and whether mu moved.
inline std::pair<Weight, bool> weyl_canonicalize(Weight mu, const RootSystem& rs) {
  bool changed = false;
  for (bool again = true; again;) {
    again = false;
    for (const auto& a : rs.simple_roots()) {
      if (inner(mu, a).sign() < 0) {
        mu = reflect(mu, a);
        changed = again = true;
      }
    }
  }
  return {std::move(mu), changed};
}

}  // namespace orbitkit
