#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbitkit/hermitian.hpp"
#include "orbitkit/linalg.hpp"
#include "orbitkit/root_system.hpp"

namespace orbitkit {

enum class SubgroupKind {
  maximal_compact,  // τ = θ
  sp_u,             // sp(n,ℝ) ⊃ u(p,q)
  sp_sp,            // sp(n,ℝ) ⊃ sp(p,ℝ) + sp(q,ℝ)
  su_split,         // su(p,q) ⊃ s(u(k,l) + u(p−k,q−l))
  so_star_u,        // so*(2n) ⊃ u(p, n−p)
  so_star_split,    // so*(2n) ⊃ so*(2p) + so*(2n−2p)
  so2_split,        // so(2,n) ⊃ so(2,k) + so(n−k)
};

/// A registry entry: algebra, subgroup kind and its integer parameters.
struct PairDescriptor {
  std::string id;
  AlgebraLabel g;
  SubgroupKind h = SubgroupKind::maximal_compact;
  int k = 0;
  int l = 0;
  std::string h_name;

  friend bool operator==(const PairDescriptor& a, const PairDescriptor& b) { return a.id == b.id; }
};

namespace detail {

inline std::string maximal_compact_name(const AlgebraLabel& g) {
  switch (g.family) {
    case HermitianFamily::su: return "s(u(" + std::to_string(g.p) + ")+u(" + std::to_string(g.q) + "))";
    case HermitianFamily::sp: return "u(" + std::to_string(g.p) + ")";
    case HermitianFamily::so_star: return "u(" + std::to_string(g.p) + ")";
    case HermitianFamily::so2: return "so(2)+so(" + std::to_string(g.p) + ")";
  }
  return "?";
}

inline std::string u_name(int a, int b) {
  if (b == 0) return "u(" + std::to_string(a) + ")";
  if (a == 0) return "u(" + std::to_string(b) + ")";
  return "u(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

inline std::string so_star_name(int p) {
  return "so*(" + std::to_string(2 * p) + ")";
}

}  // namespace detail

/// Fills id and h_name from (g, h, k, l), putting (k, l) in canonical order.
/// Throws if the parameters do not describe a proper holomorphic-type pair.
inline PairDescriptor make_descriptor(const AlgebraLabel& g, SubgroupKind h, int k = 0, int l = 0) {
  if (!g.valid()) throw Error("not a Hermitian algebra of this family");
  auto bad = [] { throw Error("invalid subgroup parameters"); };
  PairDescriptor d{"", g, h, k, l, ""};
  const std::string gid = g.id();
  switch (h) {
    case SubgroupKind::maximal_compact:
      d.k = d.l = 0;
      d.id = gid + ":K";
      d.h_name = detail::maximal_compact_name(g);
      break;
    case SubgroupKind::sp_u:
    case SubgroupKind::sp_sp:
      if (g.family != HermitianFamily::sp || k < 1 || l < 1 || k + l != g.p) bad();
      if (d.k < d.l) std::swap(d.k, d.l);
      if (h == SubgroupKind::sp_u) {
        d.id = gid + ":u" + std::to_string(d.k) + std::to_string(d.l);
        d.h_name = detail::u_name(d.k, d.l);
      } else {
        d.id = gid + ":sp" + std::to_string(d.k) + "+sp" + std::to_string(d.l);
        d.h_name = "sp(" + std::to_string(d.k) + ",R)+sp(" + std::to_string(d.l) + ",R)";
      }
      break;
    case SubgroupKind::su_split: {
      if (g.family != HermitianFamily::su) bad();
      const int k2 = g.p - k, l2 = g.q - l;
      if (k < 0 || l < 0 || k2 < 0 || l2 < 0 || k + l == 0 || k2 + l2 == 0) bad();
      // s(u(p,0) + u(0,q)) is the maximal compact subalgebra itself.
      if ((l == 0 && k2 == 0) || (k == 0 && l2 == 0)) bad();
      if (std::pair(k, l) < std::pair(k2, l2)) {
        d.k = k2;
        d.l = l2;
      }
      d.id = gid + ":u" + std::to_string(d.k) + std::to_string(d.l) + "+u" + std::to_string(g.p - d.k) +
             std::to_string(g.q - d.l);
      d.h_name = "s(" + detail::u_name(d.k, d.l) + "+" + detail::u_name(g.p - d.k, g.q - d.l) + ")";
      break;
    }
    case SubgroupKind::so_star_u:
    case SubgroupKind::so_star_split: {
      if (g.family != HermitianFamily::so_star || k < 1 || k >= g.p) bad();
      d.k = std::max(k, g.p - k);
      d.l = g.p - d.k;
      if (h == SubgroupKind::so_star_u) {
        d.id = gid + ":u" + std::to_string(d.k) + std::to_string(d.l);
        d.h_name = detail::u_name(d.k, d.l);
      } else {
        d.id = gid + ":sostar" + std::to_string(d.k) + "+sostar" + std::to_string(d.l);
        d.h_name = detail::so_star_name(d.k) + "+" + detail::so_star_name(d.l);
      }
      break;
    }
    case SubgroupKind::so2_split:
      if (g.family != HermitianFamily::so2 || k < 1 || k >= g.p) bad();
      d.l = g.p - k;
      d.id = gid + ":so2_" + std::to_string(k) + "+so" + std::to_string(d.l);
      d.h_name = "so(2," + std::to_string(k) + ")+so(" + std::to_string(d.l) + ")";
      break;
  }
  return d;
}

/// Built-in holomorphic-type pairs whose algebra has Lie rank ≤ max_rank, in
/// a stable order.
inline std::vector<PairDescriptor> registry(int max_rank = 6) {
  std::vector<PairDescriptor> out;
  for (int n = 1; n <= max_rank; ++n) {
    const auto g = AlgebraLabel::sp(n);
    out.push_back(make_descriptor(g, SubgroupKind::maximal_compact));
    for (int q = 1; 2 * q <= n; ++q) out.push_back(make_descriptor(g, SubgroupKind::sp_u, n - q, q));
    for (int q = 1; 2 * q <= n; ++q) out.push_back(make_descriptor(g, SubgroupKind::sp_sp, n - q, q));
  }
  for (int n = 2; n <= max_rank + 1; ++n) {
    for (int q = 1; 2 * q <= n; ++q) {
      const auto g = AlgebraLabel::su(n - q, q);
      out.push_back(make_descriptor(g, SubgroupKind::maximal_compact));
      std::set<std::string> seen;
      for (int k = g.p; k >= 0; --k) {
        for (int l = g.q; l >= 0; --l) {
          try {
            auto d = make_descriptor(g, SubgroupKind::su_split, k, l);
            if (seen.insert(d.id).second) out.push_back(std::move(d));
          } catch (const Error&) {
          }
        }
      }
    }
  }
  for (int n = 3; n <= max_rank; ++n) {
    const auto g = AlgebraLabel::so_star(n);
    out.push_back(make_descriptor(g, SubgroupKind::maximal_compact));
    for (int q = 1; 2 * q <= n; ++q) out.push_back(make_descriptor(g, SubgroupKind::so_star_u, n - q));
    for (int q = 1; 2 * q <= n; ++q) out.push_back(make_descriptor(g, SubgroupKind::so_star_split, n - q));
  }
  for (int n = 1; (n + 2) / 2 <= max_rank; ++n) {
    if (n == 2) continue;
    const auto g = AlgebraLabel::so2(n);
    out.push_back(make_descriptor(g, SubgroupKind::maximal_compact));
    for (int k = n - 1; k >= 1; --k) out.push_back(make_descriptor(g, SubgroupKind::so2_split, k));
  }
  return out;
}

/// Parses a pair id such as "sp2:u11", "su22:u11+u11", "sostar4:sostar2+sostar2"
/// or "so2_5:so2_3+so2". Accepts "u<n>" as an alias of K for sp and so*, and
/// non-canonical parameter orders.
inline PairDescriptor find_pair(const std::string& id) {
  static const std::regex re_g(R"(^(sp|sostar|so2_)(\d+)$|^su(\d)(\d)$)");
  const auto colon = id.find(':');
  if (colon == std::string::npos) throw Error("unknown pair id '" + id + "'");
  const std::string gs = id.substr(0, colon), hs = id.substr(colon + 1);
  std::smatch m;
  if (!std::regex_match(gs, m, re_g)) throw Error("unknown pair id '" + id + "'");
  AlgebraLabel g;
  if (m[3].matched) {
    g = AlgebraLabel::su(std::stoi(m[3]), std::stoi(m[4]));
  } else {
    const int n = std::stoi(m[2]);
    if (m[1] == "sp") g = AlgebraLabel::sp(n);
    else if (m[1] == "sostar") g = AlgebraLabel::so_star(n);
    else g = AlgebraLabel::so2(n);
  }
  if (!g.valid()) throw Error("unknown pair id '" + id + "'");

  auto num = [](const std::ssub_match& s) { return std::stoi(s.str()); };
  std::smatch h;
  try {
    if (hs == "K") return make_descriptor(g, SubgroupKind::maximal_compact);
    if (g.family == HermitianFamily::sp || g.family == HermitianFamily::so_star) {
      const bool sp = g.family == HermitianFamily::sp;
      if (std::regex_match(hs, h, std::regex(R"(^u(\d+)$)")) && num(h[1]) == g.p)
        return make_descriptor(g, SubgroupKind::maximal_compact);
      if (std::regex_match(hs, h, std::regex(R"(^u(\d)(\d)$)"))) {
        if (num(h[1]) + num(h[2]) != g.p) throw Error("invalid subgroup parameters");
        return sp ? make_descriptor(g, SubgroupKind::sp_u, num(h[1]), num(h[2]))
                  : make_descriptor(g, SubgroupKind::so_star_u, num(h[1]));
      }
      if (sp && std::regex_match(hs, h, std::regex(R"(^sp(\d+)\+sp(\d+)$)")))
        return make_descriptor(g, SubgroupKind::sp_sp, num(h[1]), num(h[2]));
      if (!sp && std::regex_match(hs, h, std::regex(R"(^sostar(\d+)\+sostar(\d+)$)"))) {
        if (num(h[1]) + num(h[2]) != g.p) throw Error("invalid subgroup parameters");
        return make_descriptor(g, SubgroupKind::so_star_split, num(h[1]));
      }
    }
    if (g.family == HermitianFamily::su &&
        std::regex_match(hs, h, std::regex(R"(^u(\d)(\d)\+u(\d)(\d)$)"))) {
      if (num(h[1]) + num(h[3]) != g.p || num(h[2]) + num(h[4]) != g.q)
        throw Error("invalid subgroup parameters");
      return make_descriptor(g, SubgroupKind::su_split, num(h[1]), num(h[2]));
    }
    if (g.family == HermitianFamily::so2 && std::regex_match(hs, h, std::regex(R"(^so2_(\d+)\+so(\d+)$)"))) {
      if (num(h[1]) + num(h[2]) != g.p) throw Error("invalid subgroup parameters");
      return make_descriptor(g, SubgroupKind::so2_split, num(h[1]));
    }
  } catch (const Error& e) {
    throw Error("unknown pair id '" + id + "': " + e.what());
  }
  throw Error("unknown pair id '" + id + "'");
}

/// τ on √−1 t*: a rational matrix M, plus a grading vector x such that τ acts on
/// the root space of an M-fixed root α by (−1)^⟨α, x⟩.
struct Involution {
  RationalMatrix matrix;
  Weight grading;

  static Involution inner_grading(Weight x) {
    const std::size_t n = x.size();
    RationalMatrix id(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return {std::move(id), std::move(x)};
  }

  std::size_t dim() const { return matrix.size(); }

  Weight apply(const Weight& w) const {
    if (w.size() != dim()) throw Error("dimension mismatch");
    Weight out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        if (!matrix[i][j].is_zero()) out[i] += matrix[i][j] * w[j];
    return out;
  }

  /// ±1 on the root space of a fixed root.
  int sign(const Weight& alpha) const {
    const Rational e = inner(alpha, grading);
    if (!e.is_integer()) throw Error("grading is not integral on the roots");
    return mpz_class(e.value().get_num() % 2) == 0 ? 1 : -1;
  }
};

/// The registry involution for a descriptor, in the coordinates of
/// hermitian_data(d.g).
inline Involution involution_for(const PairDescriptor& d) {
  const auto& g = d.g;
  const HermitianAlgebra alg = hermitian_data(g);
  const std::size_t n = alg.dim();
  auto indicator = [n](auto pred) {
    Weight x(n);
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i)) x[i] = 1;
    return x;
  };
  const auto k = static_cast<std::size_t>(d.k), l = static_cast<std::size_t>(d.l);
  switch (d.h) {
    case SubgroupKind::maximal_compact: return Involution::inner_grading(alg.Z);
    case SubgroupKind::sp_u:
    case SubgroupKind::so_star_u:
      return Involution::inner_grading(indicator([&](std::size_t i) { return i < k; }) + alg.Z);
    case SubgroupKind::sp_sp:
    case SubgroupKind::so_star_split:
      return Involution::inner_grading(indicator([&](std::size_t i) { return i < k; }));
    case SubgroupKind::su_split: {
      const auto p = static_cast<std::size_t>(g.p);
      return Involution::inner_grading(
          indicator([&](std::size_t i) { return i < k || (i >= p && i < p + l); }));
    }
    case SubgroupKind::so2_split: {
      // Coordinate 0 is the so(2) plane; then the planes inside the first k
      // coordinates of ℝ^n, then those inside the last n − k, then (when both
      // k and n − k are odd) one plane straddling the two blocks, which τ
      // reflects.
      const std::size_t plus_planes = k / 2, minus_planes = (static_cast<std::size_t>(g.p) - k) / 2;
      const bool mixed = (k % 2 == 1) && ((g.p - d.k) % 2 == 1);
      std::vector<int> sigma(n, 1);
      for (std::size_t i = 1 + plus_planes; i < 1 + plus_planes + minus_planes; ++i) sigma[i] = -1;
      // With n odd the zero weight of ℝ^n sits in the odd block; τ must act on
      // it by +1 for the grading to reproduce τ, so flip all signs otherwise.
      if (g.p % 2 == 1 && (g.p - d.k) % 2 == 1)
        for (auto& s : sigma) s = -s;
      Involution inv = Involution::inner_grading(
          indicator([&](std::size_t i) { return !(mixed && i == n - 1) && sigma[i] < 0; }));
      if (mixed) inv.matrix[n - 1][n - 1] = -1;
      return inv;
    }
  }
  throw Error("invalid subgroup parameters");
}

/// The involution of sp(n,ℝ) with fixed points gl(n,ℝ), on a Cartan adapted to
/// it: minus the swap of coordinates (1,2), (3,4), …
inline Involution gl_involution(int n) {
  const auto m = static_cast<std::size_t>(n);
  RationalMatrix a(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i + 1 < m; i += 2) a[i][i + 1] = a[i + 1][i] = -1;
  if (m % 2) a[m - 1][m - 1] = -1;
  return {std::move(a), Weight(m)};
}

enum class HolomorphicType { holomorphic, anti_holomorphic };

namespace detail {

inline void check_commutes(const HermitianAlgebra& g, const Involution& tau) {
  const std::size_t n = g.dim();
  if (tau.dim() != n || tau.grading.size() != n) throw Error("dimension mismatch");
  for (const auto& a : g.roots.roots()) {
    const Weight b = tau.apply(a);
    if (!g.roots.contains(b) || g.is_compact_root(a) != g.is_compact_root(b))
      throw Error("involutions do not commute");
  }
}

}  // namespace detail

/// Classification by the action of τ on the center of k, i.e. on Z.
inline HolomorphicType holomorphic_type(const HermitianAlgebra& g, const Involution& tau) {
  detail::check_commutes(g, tau);
  const Weight tz = tau.apply(g.Z);
  if (tz == g.Z) return HolomorphicType::holomorphic;
  if (tz == -g.Z) return HolomorphicType::anti_holomorphic;
  throw Error("involutions do not commute");
}

struct FactorData {
  int index = 0;                      // 0 is the compact aggregate g^(0)
  bool compact = true;
  std::vector<Weight> positive_roots;  // its roots in the associated system
  std::optional<Cascade> cascade;     // noncompact factors only

  std::size_t rank() const { return cascade ? cascade->size() : 0; }
};

/// A holomorphic-type pair (g, g^τ) with everything derived from it. Weights
/// on t^τ are kept in ambient ε-coordinates.
struct HolomorphicPair {
  PairDescriptor descriptor;
  HermitianAlgebra g;
  Involution tau;
  OrthogonalFrame t_tau;
  RootSystem k_tau;                             // Δ(k^τ, t^τ) with its positive system
  std::vector<Weight> p_plus_tau;               // Δ(p₊^τ), restricted, with multiplicity
  std::vector<Weight> p_plus_minus_tau;         // Δ(p₊^{−τ}), restricted, with multiplicity
  std::vector<Weight> p_plus_minus_preimages;   // one root of Δ(p₊) per element above
  RootSystem associated;                        // roots of g^{τθ} on t^τ
  std::vector<FactorData> factors;              // factors[0] compact, then 1..L

  std::size_t L() const { return factors.size() - 1; }
  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r;
    for (std::size_t i = 1; i < factors.size(); ++i) r.push_back(factors[i].rank());
    return r;
  }
};

/// Orthogonal projection onto t^τ, in ambient coordinates.
inline Weight restrict(const Weight& w, const HolomorphicPair& pair) {
  return pair.t_tau.project(w);
}

inline HolomorphicPair build_pair(const PairDescriptor& d, const Involution& tau) {
  HolomorphicPair pr;
  pr.descriptor = d;
  pr.g = hermitian_data(d.g);
  pr.tau = tau;
  const auto& g = pr.g;
  const std::size_t n = g.dim();

  if (tau.dim() != n || tau.grading.size() != n) throw Error("dimension mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (tau.matrix[i].size() != n) throw Error("dimension mismatch");
    const Weight col = tau.apply(Weight::unit(n, i));
    if (tau.apply(col) != Weight::unit(n, i)) throw Error("not an involution");
    for (std::size_t j = 0; j <= i; ++j)
      if (inner(col, tau.apply(Weight::unit(n, j))) != Rational(i == j ? 1 : 0)) throw Error("not an isometry");
  }
  if (holomorphic_type(g, tau) != HolomorphicType::holomorphic) throw Error("pair is not of holomorphic type");

  std::vector<Weight> spanning;
  for (const auto& a : g.roots.simple_roots()) spanning.push_back(Rational(1, 2) * (a + tau.apply(a)));
  pr.t_tau = OrthogonalFrame(n, spanning);

  std::set<Weight> k_tau;
  for (const auto& a : g.roots.roots()) {
    if (!g.is_compact_root(a)) continue;
    const Weight b = tau.apply(a);
    if (b == a) {
      if (tau.sign(a) > 0 && lex_positive(a)) k_tau.insert(a);
    } else {
      const Weight r = pr.t_tau.project(a);
      if (lex_positive(r)) k_tau.insert(r);
    }
  }
  pr.k_tau = RootSystem::from_positive(n, {k_tau.begin(), k_tau.end()});

  std::set<Weight> visited;
  for (const auto& b : g.noncompact_positive) {
    if (visited.count(b)) continue;
    const Weight tb = tau.apply(b);
    if (tb == b) {
      (tau.sign(b) > 0 ? pr.p_plus_tau : pr.p_plus_minus_tau).push_back(b);
      if (tau.sign(b) < 0) pr.p_plus_minus_preimages.push_back(b);
      continue;
    }
    visited.insert(tb);
    const Weight r = pr.t_tau.project(b);
    pr.p_plus_tau.push_back(r);
    pr.p_plus_minus_tau.push_back(r);
    pr.p_plus_minus_preimages.push_back(b);
  }

  // Compatibility of the positive systems.
  for (const auto& a : g.compact_positive) {
    const Weight r = pr.t_tau.project(a);
    if (!r.is_zero() && !lex_positive(r)) throw Error("incompatible positive systems");
  }

  std::vector<Weight> assoc(pr.k_tau.positive_roots());
  assoc.insert(assoc.end(), pr.p_plus_minus_tau.begin(), pr.p_plus_minus_tau.end());
  pr.associated = RootSystem::from_positive(n, assoc);

  // Simple ideals of g^{τθ}: connected components of the non-orthogonality graph.
  const auto& pos = pr.associated.positive_roots();
  std::vector<int> comp(pos.size(), -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < pos.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < pos.size(); ++v) {
        if (comp[v] < 0 && !inner(pos[u], pos[v]).is_zero()) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
      }
    }
    ++ncomp;
  }
  FactorData compact;
  std::vector<FactorData> noncompact;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<Weight> roots, source;
    for (std::size_t s = 0; s < pos.size(); ++s) {
      if (comp[s] != c) continue;
      roots.push_back(pos[s]);
      if (inner(pos[s], g.Z) == Rational(1)) source.push_back(pos[s]);
    }
    if (source.empty()) {
      compact.positive_roots.insert(compact.positive_roots.end(), roots.begin(), roots.end());
      continue;
    }
    FactorData f;
    f.compact = false;
    f.positive_roots = roots;
    f.cascade = cascade(source, pr.associated);
    noncompact.push_back(std::move(f));
  }
  std::sort(noncompact.begin(), noncompact.end(), [](const FactorData& a, const FactorData& b) {
    return a.cascade->source.front() > b.cascade->source.front();
  });
  std::sort(compact.positive_roots.begin(), compact.positive_roots.end(), std::greater<>());
  pr.factors.push_back(std::move(compact));
  for (auto& f : noncompact) {
    f.index = static_cast<int>(pr.factors.size());
    pr.factors.push_back(std::move(f));
  }
  return pr;
}

inline HolomorphicPair build_pair(const PairDescriptor& d) { return build_pair(d, involution_for(d)); }
inline HolomorphicPair build_pair(const std::string& id) { return build_pair(find_pair(id)); }

/// (Δ⁺(k,t), Δ⁺(k^τ,t^τ)), after checking that every positive compact root
/// restricts to zero or to a positive weight on t^τ.
inline std::pair<std::vector<Weight>, std::vector<Weight>> compatible_positive_systems(const HolomorphicPair& pair) {
  for (const auto& a : pair.g.compact_positive) {
    const Weight r = restrict(a, pair);
    if (!r.is_zero() && !lex_positive(r)) throw Error("incompatible positive systems");
  }
  for (const auto& a : pair.k_tau.positive_roots())
    if (!lex_positive(a)) throw Error("incompatible positive systems");
  return {pair.g.compact_positive, pair.k_tau.positive_roots()};
}

/// λ = c·Z. Negative c is handled by the sign symmetry (mirrored); c = 0 is the
/// orbit {0}.
struct OrbitParamG {
  Rational c;
  bool mirrored = false;
  bool degenerate = false;

  Rational effective_c() const { return abs(c); }
};

enum class OrbitKind { elliptic, hyperbolic, nilpotent, mixed };

/// μ on t^τ, dominant for Δ⁺(k^τ, t^τ) when elliptic.
struct OrbitParamH {
  Weight mu;
  bool elliptic = true;
  OrbitKind kind = OrbitKind::elliptic;
  bool canonicalized = false;  // the raw input was moved to the dominant chamber
};

}  // namespace orbitkit
