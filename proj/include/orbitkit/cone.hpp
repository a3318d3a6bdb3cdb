#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orbitkit/sympair.hpp"

namespace orbitkit {

/// Per-group coefficient tuples (t_1^(i), …, t_{r_i}^(i)).
using ConeCoefficients = std::vector<std::vector<Rational>>;

/// t_1 ≥ … ≥ t_r ≥ 0 in every group.
inline bool chain_ordered(const ConeCoefficients& t) {
  for (const auto& g : t) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j].sign() < 0) return false;
      if (j > 0 && g[j - 1] < g[j]) return false;
    }
  }
  return true;
}

/// Cone(p₊^{−τ}): generators grouped per noncompact factor, each group ordered
/// as its cascade.
struct ConeDescriptor {
  std::size_t dim = 0;
  std::vector<std::vector<Weight>> groups;

  std::size_t generator_count() const {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.size();
    return n;
  }
  std::vector<Weight> generators() const {
    std::vector<Weight> out;
    for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
    return out;
  }
  /// Σ t_j^(i) ν_j^(i).
  Weight combine(const ConeCoefficients& t) const {
    if (t.size() != groups.size()) throw Error("coefficient shape mismatch");
    Weight out(dim);
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (t[i].size() != groups[i].size()) throw Error("coefficient shape mismatch");
      for (std::size_t j = 0; j < groups[i].size(); ++j) out += t[i][j] * groups[i][j];
    }
    return out;
  }
};

inline ConeDescriptor cone(const HolomorphicPair& pair) {
  ConeDescriptor c;
  c.dim = pair.g.dim();
  for (std::size_t i = 1; i < pair.factors.size(); ++i) c.groups.push_back(pair.factors[i].cascade->roots);
  const auto gens = c.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!inner(gens[a], gens[b]).is_zero()) throw Error("cone generators are not orthogonal");
  return c;
}

enum class MembershipReason { member, outside_span, outside_chamber };

struct ConeMembership {
  bool member = false;
  MembershipReason reason = MembershipReason::outside_span;
  std::optional<ConeCoefficients> coefficients;  // present iff member
  std::optional<ConeCoefficients> expansion;     // the unique expansion whenever δ is in the span
};

/// Exact test of δ ∈ Cone via the orthogonal expansion δ = Σ t_j ν_j.
inline ConeMembership cone_contains(const ConeDescriptor& cone, const Weight& delta) {
  if (delta.size() != cone.dim) throw Error("dimension mismatch");
  ConeMembership out;
  ConeCoefficients t;
  Weight residual = delta;
  for (const auto& g : cone.groups) {
    std::vector<Rational> row;
    for (const auto& nu : g) {
      row.push_back(inner(delta, nu) / inner(nu, nu));
      residual -= row.back() * nu;
    }
    t.push_back(std::move(row));
  }
  if (!residual.is_zero()) return out;
  out.expansion = t;
  if (!chain_ordered(t)) {
    out.reason = MembershipReason::outside_chamber;
    return out;
  }
  out.member = true;
  out.reason = MembershipReason::member;
  out.coefficients = std::move(t);
  return out;
}

/// Image coefficients s (playing sinh² t) to cone coefficients:
/// c·s·H = c·s·(2/⟨ν,ν⟩)·ν.
inline ConeCoefficients image_to_cone(const ConeDescriptor& cone, const Rational& c, const ConeCoefficients& s) {
  ConeCoefficients t = s;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j)
      t[i][j] = c * s[i][j] * Rational(2) / inner(cone.groups[i][j], cone.groups[i][j]);
  return t;
}

inline ConeCoefficients cone_to_image(const ConeDescriptor& cone, const Rational& c, const ConeCoefficients& t) {
  if (c.is_zero()) throw Error("division by zero");
  ConeCoefficients s = t;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s[i].size(); ++j)
      s[i][j] = t[i][j] * inner(cone.groups[i][j], cone.groups[i][j]) / (Rational(2) * c);
  return s;
}

/// c·(Z + Σ s_j^(i) H_j^(i)) with H_j = coroot(ν_j); s must be chain-ordered.
inline Weight momentum_image_point(const HolomorphicPair& pair, const OrbitParamG& lambda, const ConeCoefficients& s) {
  const ConeDescriptor cd = cone(pair);
  if (s.size() != cd.groups.size()) throw Error("coefficient shape mismatch");
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].size() != cd.groups[i].size()) throw Error("coefficient shape mismatch");
  if (!chain_ordered(s)) throw Error("coefficients violate chamber constraints");
  Weight x = pair.g.Z;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s[i].size(); ++j) x += s[i][j] * coroot(cd.groups[i][j]);
  const Rational signed_c = lambda.mirrored ? -lambda.effective_c() : lambda.effective_c();
  return signed_c * x;
}

}  // namespace orbitkit
