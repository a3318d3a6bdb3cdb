#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "orbitkit/branching.hpp"
#include "test_support.hpp"

using namespace orbitkit;
using orbitkit::testing::W;

namespace {

Exponents ex(std::initializer_list<std::initializer_list<long>> rows) {
  Exponents e;
  for (auto r : rows) e.emplace_back(r);
  return e;
}

std::vector<Exponents> exponents(const SupportTable& t) {
  std::vector<Exponents> out;
  for (const auto& p : t.points) out.push_back(p.exponents);
  return out;
}

// Partitions of k into at most r parts: p(k, r) = p(k, r−1) + p(k−r, r).
long partitions(long k, long r) {
  if (k == 0) return 1;
  if (k < 0 || r == 0) return 0;
  return partitions(k, r - 1) + partitions(k - r, r);
}

// |support at bound N| from the per-factor partition counts.
long expected_count(const std::vector<std::size_t>& ranks, long N) {
  std::vector<long> ways(static_cast<std::size_t>(N) + 1, 0);
  ways[0] = 1;
  for (auto r : ranks) {
    std::vector<long> next(ways.size(), 0);
    for (long a = 0; a <= N; ++a)
      for (long b = 0; a + b <= N; ++b) next[static_cast<std::size_t>(a + b)] += ways[static_cast<std::size_t>(a)] * partitions(b, static_cast<long>(r));
    ways = next;
  }
  long total = 0;
  for (long w : ways) total += w;
  return total;
}

}  // namespace

TEST(BranchSupport, SuOneOne) {
  auto p = build_pair("su11:K");
  auto t = branch_support(p, validate_lambda(p, Rational(3, 2)), 3);
  ASSERT_EQ(t.points.size(), 4u);
  const Weight nu = W({1, -1});
  const Weight base = Rational(3, 2) * p.g.Z;
  for (long a = 0; a <= 3; ++a) {
    EXPECT_EQ(t.points[static_cast<std::size_t>(a)].exponents, ex({{a}}));
    EXPECT_EQ(t.points[static_cast<std::size_t>(a)].mu, base + Rational(a) * nu);
  }
}

TEST(BranchSupport, SpTwoExamples) {
  auto k = build_pair("sp2:u2");
  auto t = branch_support(k, validate_lambda(k, 1), 2);
  EXPECT_EQ(exponents(t), (std::vector<Exponents>{ex({{0, 0}}), ex({{1, 0}}), ex({{2, 0}}), ex({{1, 1}})}));

  auto u = build_pair("sp2:u11");
  auto t2 = branch_support(u, validate_lambda(u, 1), 1);
  EXPECT_EQ(exponents(t2), (std::vector<Exponents>{ex({{0}, {0}}), ex({{1}, {0}}), ex({{0}, {1}})}));
}

TEST(BranchSupport, RejectsNonPositive) {
  auto k = build_pair("sp2:u2");
  try {
    branch_support(k, validate_lambda(k, 0), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "branching support defined for c > 0 only");
  }
  EXPECT_THROW(branch_support(k, validate_lambda(k, -1), 2), Error);
}

TEST(HullConsistency, Examples) {
  auto p = build_pair("su11:K");
  auto lam = validate_lambda(p, 1);
  const Weight base = p.g.Z, nu = W({1, -1});
  auto rep = hull_cone_consistency(p, lam, 1, {base + nu, base + Rational(1, 2) * nu, base - nu});
  ASSERT_EQ(rep.probes.size(), 3u);
  EXPECT_EQ(rep.probes[0].cg, 1);
  EXPECT_TRUE(rep.probes[0].in_hull);
  EXPECT_EQ(rep.probes[1].cg, 1);
  EXPECT_TRUE(rep.probes[1].in_hull);
  EXPECT_EQ(rep.probes[2].cg, 0);
  EXPECT_FALSE(rep.probes[2].in_hull);
  EXPECT_EQ(rep.count(HullVerdict::agree), 3u);

  auto far = hull_cone_consistency(p, lam, 1, {base + Rational(3) * nu});
  EXPECT_EQ(far.probes[0].verdict, HullVerdict::inconclusive);
  EXPECT_EQ(to_string(far.probes[0].verdict), "inconclusive — increase N");
  EXPECT_EQ(hull_cone_consistency(p, lam, 3, {base + Rational(3) * nu}).probes[0].verdict, HullVerdict::agree);
}

TEST(Hull, ConvexCombination) {
  std::vector<Weight> pts{W({0, 0}), W({2, 0}), W({0, 2})};
  EXPECT_TRUE(convex_combination(pts, Weight{Rational(1, 2), Rational(1, 2)}));
  EXPECT_FALSE(convex_combination(pts, W({2, 2})));
  EXPECT_FALSE(convex_combination(pts, W({-1, 0})));
  auto th = convex_combination(pts, W({1, 1}));
  ASSERT_TRUE(th);
  Weight back(2);
  Rational s;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    EXPECT_GE((*th)[k].sign(), 0);
    back += (*th)[k] * pts[k];
    s += (*th)[k];
  }
  EXPECT_EQ(back, W({1, 1}));
  EXPECT_EQ(s, Rational(1));
}

class BranchingProperties : public ::testing::TestWithParam<PairDescriptor> {};

TEST_P(BranchingProperties, SupportInsideConeAndCounts) {
  auto pair = build_pair(GetParam());
  auto lam = validate_lambda(pair, 2);
  auto cd = cone(pair);
  for (long N = 0; N <= 6; ++N) {
    auto t = branch_support(pair, lam, N);
    EXPECT_EQ(static_cast<long>(t.points.size()), expected_count(pair.ranks(), N));
    std::set<Weight> distinct;
    for (const auto& p : t.points) {
      EXPECT_TRUE(distinct.insert(p.mu).second);
      EXPECT_LE(degree(p.exponents), N);
      EXPECT_EQ(cg_number(pair, lam, OrbitParamH{p.mu}).value, 1);
    }
  }
  // Degree-one points are λ| plus a leading generator.
  std::multiset<Weight> deg1, leading;
  for (const auto& p : branch_support(pair, lam, 1).points)
    if (degree(p.exponents) == 1) deg1.insert(p.mu - lam.c * pair.g.Z);
  for (const auto& g : cd.groups) leading.insert(g.front());
  EXPECT_EQ(deg1, leading);
}

TEST_P(BranchingProperties, HullAgreesWithConeOnBoundedProbes) {
  auto pair = build_pair(GetParam());
  auto lam = validate_lambda(pair, 1);
  auto cd = cone(pair);
  std::mt19937_64 rng(404);
  std::vector<Weight> probes;
  while (probes.size() < 8) {
    ConeCoefficients t;
    Rational sum;
    for (const auto& g : cd.groups) {
      std::vector<Rational> v;
      for (std::size_t j = 0; j < g.size(); ++j) {
        v.push_back(orbitkit::testing::random_rational(rng, -1, 2, 4));
        sum += abs(v.back());
      }
      t.push_back(v);
    }
    if (sum > Rational(2)) continue;
    probes.push_back(weyl_canonicalize(lam.c * pair.g.Z + cd.combine(t), pair.k_tau).first);
  }
  auto rep = hull_cone_consistency(pair, lam, 4, probes);
  EXPECT_EQ(rep.count(HullVerdict::disagree), 0u);
  EXPECT_EQ(rep.count(HullVerdict::inconclusive), 0u);
}

INSTANTIATE_TEST_SUITE_P(UpToRankFour, BranchingProperties, ::testing::ValuesIn(registry(4)), [](const auto& info) {
  std::string s = info.param.id;
  for (auto& ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
  return s;
});
