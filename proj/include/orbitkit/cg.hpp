#pragma once

#include <optional>
#include <string>

#include "orbitkit/cone.hpp"

namespace orbitkit {

enum class CGReason { cone_member, outside_cone, outside_span, non_elliptic_orbit };

inline std::string to_string(CGReason r) {
  switch (r) {
    case CGReason::cone_member: return "cone-member";
    case CGReason::outside_cone: return "outside-cone";
    case CGReason::outside_span: return "outside-span";
    case CGReason::non_elliptic_orbit: return "non-elliptic-orbit";
  }
  return "?";
}

inline CGReason cg_reason_from_string(const std::string& s) {
  if (s == "cone-member") return CGReason::cone_member;
  if (s == "outside-cone") return CGReason::outside_cone;
  if (s == "outside-span") return CGReason::outside_span;
  if (s == "non-elliptic-orbit") return CGReason::non_elliptic_orbit;
  throw Error("unknown reason '" + s + "'");
}

struct CGResult {
  int value = 0;
  std::optional<ConeCoefficients> certificate;  // present iff value = 1
  CGReason reason = CGReason::outside_cone;
};

inline OrbitParamG validate_lambda(const HolomorphicPair& pair, const Rational& c) {
  OrbitParamG lam{c, c.sign() < 0, c.is_zero()};
  if (!lam.degenerate) {
    const Weight l = lam.effective_c() * pair.g.Z;
    for (const auto& b : pair.g.noncompact_positive)
      if (inner(l, b).sign() <= 0) throw Error("positivity check failed");
  }
  return lam;
}

/// Dominant representative of μ for Δ⁺(k^τ, t^τ).
inline OrbitParamH validate_mu(const HolomorphicPair& pair, const Weight& mu_raw) {
  if (mu_raw.size() != pair.g.dim()) throw Error("dimension mismatch");
  auto [mu, changed] = weyl_canonicalize(mu_raw, pair.k_tau);
  return OrbitParamH{std::move(mu), true, OrbitKind::elliptic, changed};
}

/// Non-elliptic orbits never meet the image; elliptic ones pass through
/// (nullopt).
inline std::optional<CGResult> elliptic_gate(const HolomorphicPair&, OrbitKind kind) {
  if (kind == OrbitKind::elliptic) return std::nullopt;
  return CGResult{0, std::nullopt, CGReason::non_elliptic_orbit};
}

/// μ for the effective (c > 0) problem: μ itself, or the canonicalized −μ
/// when λ is mirrored.
inline Weight effective_mu(const HolomorphicPair& pair, const OrbitParamG& lambda, const Weight& mu) {
  if (!lambda.mirrored) return mu;
  return weyl_canonicalize(-mu, pair.k_tau).first;
}

inline CGResult cg_number(const HolomorphicPair& pair, const OrbitParamG& lambda, const OrbitParamH& mu) {
  OrbitKind kind = mu.kind;
  if (!mu.elliptic && kind == OrbitKind::elliptic) kind = OrbitKind::mixed;
  if (auto gate = elliptic_gate(pair, kind)) return *gate;
  const ConeDescriptor cd = cone(pair);
  if (lambda.degenerate) {
    if (!mu.mu.is_zero()) return CGResult{0, std::nullopt, CGReason::outside_cone};
    ConeCoefficients zero;
    for (const auto& g : cd.groups) zero.emplace_back(g.size());
    return CGResult{1, zero, CGReason::cone_member};
  }
  const Weight m = effective_mu(pair, lambda, mu.mu);
  const Weight delta = m - restrict(lambda.effective_c() * pair.g.Z, pair);
  auto res = cone_contains(cd, delta);
  switch (res.reason) {
    case MembershipReason::member: return CGResult{1, std::move(res.coefficients), CGReason::cone_member};
    case MembershipReason::outside_span: return CGResult{0, std::nullopt, CGReason::outside_span};
    case MembershipReason::outside_chamber: return CGResult{0, std::nullopt, CGReason::outside_cone};
  }
  return {};
}

}  // namespace orbitkit
