#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "orbitkit/cg.hpp"
#include "orbitkit/hull.hpp"

namespace orbitkit {

using Exponents = std::vector<std::vector<long>>;

inline long degree(const Exponents& a) {
  long d = 0;
  for (const auto& g : a)
    for (long x : g) d += x;
  return d;
}

struct SupportPoint {
  Weight mu;
  Exponents exponents;  // chain-ordered nonnegative integers per factor
};

struct SupportTable {
  std::string pair_id;
  Rational c;
  long bound = 0;
  std::vector<SupportPoint> points;
};

namespace detail {

/// All a_1 ≥ … ≥ a_r ≥ 0 with Σ a ≤ budget.
inline void chain_tuples(std::size_t r, long budget, long cap, std::vector<long>& cur,
                         std::vector<std::vector<long>>& out) {
  if (cur.size() == r) {
    out.push_back(cur);
    return;
  }
  for (long a = 0; a <= std::min(budget, cap); ++a) {
    cur.push_back(a);
    chain_tuples(r, budget - a, a, cur, out);
    cur.pop_back();
  }
}

inline std::vector<long> flatten(const Exponents& a) {
  std::vector<long> out;
  for (const auto& g : a) out.insert(out.end(), g.begin(), g.end());
  return out;
}

}  // namespace detail

/// Points λ| + Σ a_j^(i) ν_j^(i) of the branching support with total exponent
/// at most N, by degree and then exponent tuples in descending order.
inline SupportTable branch_support(const HolomorphicPair& pair, const OrbitParamG& lambda, long N) {
  if (lambda.degenerate || lambda.mirrored) throw Error("branching support defined for c > 0 only");
  if (N < 0) throw Error("bound must be nonnegative");
  const ConeDescriptor cd = cone(pair);
  const Weight base = restrict(lambda.c * pair.g.Z, pair);

  std::vector<Exponents> all{Exponents{}};
  for (const auto& g : cd.groups) {
    std::vector<std::vector<long>> tuples;
    std::vector<long> cur;
    detail::chain_tuples(g.size(), N, N, cur, tuples);
    std::vector<Exponents> next;
    for (const auto& e : all) {
      const long used = degree(e);
      for (const auto& t : tuples) {
        long s = 0;
        for (long x : t) s += x;
        if (used + s > N) continue;
        Exponents f = e;
        f.push_back(t);
        next.push_back(std::move(f));
      }
    }
    all = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(), [](const Exponents& a, const Exponents& b) {
    const long da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return detail::flatten(a) > detail::flatten(b);
  });

  SupportTable table{pair.descriptor.id, lambda.c, N, {}};
  for (auto& e : all) {
    ConeCoefficients t;
    for (const auto& g : e) {
      std::vector<Rational> row;
      for (long x : g) row.emplace_back(x);
      t.push_back(std::move(row));
    }
    table.points.push_back({base + cd.combine(t), std::move(e)});
  }
  return table;
}

enum class HullVerdict { agree, disagree, inconclusive };

inline std::string to_string(HullVerdict v) {
  switch (v) {
    case HullVerdict::agree: return "agree";
    case HullVerdict::disagree: return "disagree";
    case HullVerdict::inconclusive: return "inconclusive — increase N";
  }
  return "?";
}

struct HullProbeResult {
  Weight mu;
  int cg = 0;
  bool in_hull = false;
  HullVerdict verdict = HullVerdict::agree;
};

struct HullReport {
  long bound = 0;
  std::size_t support_size = 0;
  std::vector<HullProbeResult> probes;

  std::size_t count(HullVerdict v) const {
    return static_cast<std::size_t>(
        std::count_if(probes.begin(), probes.end(), [v](const HullProbeResult& p) { return p.verdict == v; }));
  }
};

/// Compares cg_number with exact membership in the convex hull of the
/// truncated support, probe by probe.
inline HullReport hull_cone_consistency(const HolomorphicPair& pair, const OrbitParamG& lambda, long N,
                                        const std::vector<Weight>& probes) {
  const SupportTable table = branch_support(pair, lambda, N);
  std::vector<Weight> pts;
  pts.reserve(table.points.size());
  for (const auto& p : table.points) pts.push_back(p.mu);

  HullReport report{N, pts.size(), {}};
  for (const auto& mu : probes) {
    if (!is_dominant(mu, pair.k_tau.positive_roots())) throw Error("probe is not dominant");
    HullProbeResult r{mu, 0, false, HullVerdict::agree};
    r.cg = cg_number(pair, lambda, OrbitParamH{mu}).value;
    r.in_hull = convex_combination(pts, mu).has_value();
    if (r.cg == 1 && !r.in_hull) r.verdict = HullVerdict::inconclusive;
    else if (r.cg == 0 && r.in_hull) r.verdict = HullVerdict::disagree;
    report.probes.push_back(std::move(r));
  }
  return report;
}

}  // namespace orbitkit
