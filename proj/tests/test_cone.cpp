#include <gtest/gtest.h>

#include <random>

#include "orbitkit/cg.hpp"
#include "orbitkit/cone.hpp"
#include "test_support.hpp"

using namespace orbitkit;
using orbitkit::testing::W;

namespace {

ConeCoefficients coeffs(std::initializer_list<std::initializer_list<long>> rows) {
  ConeCoefficients t;
  for (auto r : rows) {
    std::vector<Rational> v;
    for (long x : r) v.emplace_back(x);
    t.push_back(v);
  }
  return t;
}

// Random chain-ordered coefficients of the cone's shape.
ConeCoefficients random_chain(std::mt19937_64& rng, const ConeDescriptor& cd, long hi = 5) {
  ConeCoefficients t;
  for (const auto& g : cd.groups) {
    std::vector<Rational> v;
    for (std::size_t j = 0; j < g.size(); ++j) v.push_back(orbitkit::testing::random_rational(rng, 0, hi, 12));
    std::sort(v.begin(), v.end(), std::greater<>());
    t.push_back(v);
  }
  return t;
}

}  // namespace

TEST(Cone, Examples) {
  auto k = cone(build_pair("sp2:u2"));
  ASSERT_EQ(k.groups.size(), 1u);
  EXPECT_EQ(k.groups[0], (std::vector<Weight>{W({2, 0}), W({0, 2})}));

  auto u = cone(build_pair("sp2:u11"));
  ASSERT_EQ(u.groups.size(), 2u);
  EXPECT_EQ(u.groups[0], std::vector<Weight>{W({2, 0})});
  EXPECT_EQ(u.groups[1], std::vector<Weight>{W({0, 2})});

  auto s = cone(build_pair("sp2:sp1+sp1"));
  ASSERT_EQ(s.groups.size(), 1u);
  EXPECT_EQ(s.groups[0], std::vector<Weight>{W({1, 1})});
}

TEST(ConeContains, Examples) {
  auto k = cone(build_pair("sp2:u2"));
  auto r = cone_contains(k, W({6, 2}));
  EXPECT_TRUE(r.member);
  EXPECT_EQ(r.coefficients, coeffs({{3, 1}}));

  auto r2 = cone_contains(k, W({2, 6}));
  EXPECT_FALSE(r2.member);
  EXPECT_EQ(r2.reason, MembershipReason::outside_chamber);
  EXPECT_EQ(r2.expansion, coeffs({{1, 3}}));

  auto u = cone(build_pair("sp2:u11"));
  auto r3 = cone_contains(u, W({2, 6}));
  EXPECT_TRUE(r3.member);
  EXPECT_EQ(r3.coefficients, coeffs({{1}, {3}}));

  auto r4 = cone_contains(k, W({0, 0}));
  EXPECT_TRUE(r4.member);
  EXPECT_EQ(r4.coefficients, coeffs({{0, 0}}));

  auto s = cone(build_pair("sp2:sp1+sp1"));
  auto r5 = cone_contains(s, W({1, 0}));
  EXPECT_FALSE(r5.member);
  EXPECT_EQ(r5.reason, MembershipReason::outside_span);
}

TEST(MomentumImagePoint, Examples) {
  auto sp1 = build_pair("sp1:K");
  auto lam = validate_lambda(sp1, 2);
  EXPECT_EQ(momentum_image_point(sp1, lam, coeffs({{0}})), W({1}));
  ConeCoefficients s{{Rational(3, 4)}};
  EXPECT_EQ(momentum_image_point(sp1, lam, s), Weight{Rational(5, 2)});

  auto u = build_pair("sp2:u11");
  EXPECT_EQ(momentum_image_point(u, validate_lambda(u, 1), coeffs({{1}, {2}})),
            (Weight{Rational(3, 2), Rational(5, 2)}));

  auto k = build_pair("sp2:u2");
  try {
    momentum_image_point(k, validate_lambda(k, 1), coeffs({{1, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "coefficients violate chamber constraints");
  }
}

class ConeProperties : public ::testing::TestWithParam<PairDescriptor> {};

TEST_P(ConeProperties, ImageConeIdentityAndRoundTrip) {
  auto pair = build_pair(GetParam());
  auto cd = cone(pair);
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational c = orbitkit::testing::random_rational(rng, 1, 6, 6);
    auto lam = validate_lambda(pair, c);
    auto s = random_chain(rng, cd);
    Weight x = momentum_image_point(pair, lam, s);
    EXPECT_TRUE(is_dominant(x, pair.k_tau.positive_roots()));
    auto m = cone_contains(cd, x - c * pair.g.Z);
    ASSERT_TRUE(m.member);
    EXPECT_EQ(*m.coefficients, image_to_cone(cd, c, s));
    EXPECT_EQ(cone_to_image(cd, c, *m.coefficients), s);
  }
}

TEST_P(ConeProperties, HomogeneousAdditivePointed) {
  auto cd = cone(build_pair(GetParam()));
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 20; ++trial) {
    Weight d1 = cd.combine(random_chain(rng, cd)), d2 = cd.combine(random_chain(rng, cd));
    ASSERT_TRUE(cone_contains(cd, d1).member);
    const Rational q = orbitkit::testing::random_rational(rng, 0, 4, 7);
    EXPECT_TRUE(cone_contains(cd, q * d1).member);
    EXPECT_TRUE(cone_contains(cd, d1 + d2).member);
    if (!d1.is_zero()) EXPECT_FALSE(cone_contains(cd, -d1).member);
  }
  // Random search for a nonzero δ with ±δ both inside.
  for (int trial = 0; trial < 100; ++trial) {
    ConeCoefficients t;
    for (const auto& g : cd.groups) {
      std::vector<Rational> v;
      for (std::size_t j = 0; j < g.size(); ++j) v.push_back(orbitkit::testing::random_rational(rng, -2, 2, 3));
      t.push_back(v);
    }
    Weight d = cd.combine(t);
    if (cone_contains(cd, d).member && cone_contains(cd, -d).member) EXPECT_TRUE(d.is_zero());
  }
}

INSTANTIATE_TEST_SUITE_P(UpToRankFour, ConeProperties, ::testing::ValuesIn(registry(4)), [](const auto& info) {
  std::string s = info.param.id;
  for (auto& ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
  return s;
});
