#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "orbitkit/oracle/verify.hpp"
#include "test_support.hpp"

using namespace orbitkit;
using namespace orbitkit::oracle;
using orbitkit::testing::W;

namespace {

const std::vector<std::string> kModelPairs{"sp1:K",   "sp2:K",        "sp2:u11", "sp2:sp1+sp1",
                                           "su11:K",  "su22:u11+u11", "su21:K",  "su31:u21+u10",
                                           "sp3:u21", "sp3:sp2+sp1",  "sp4:u22", "su22:K"};

ToleranceProfile profile(std::size_t n, std::uint64_t seed = 7) {
  ToleranceProfile p;
  p.sample_count = n;
  p.rng_seed = seed;
  return p;
}

}  // namespace

TEST(Realize, UnsupportedAlgebras) {
  try {
    realize(find_pair("sostar4:K"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "no matrix model registered");
  }
  EXPECT_THROW(realize(find_pair("so2_3:K")), Error);
  EXPECT_THROW(realize(find_pair("sp5:K")), Error);
  EXPECT_THROW(realize(find_pair("su32:K")), Error);
}

TEST(Realize, SpOneCharacteristicElement) {
  auto r = realize(find_pair("sp1:K"));
  ASSERT_EQ(r.size(), 2u);
  const auto& t = r.triples().front();
  EXPECT_LT(max_abs(r.bracket(r.Z(), t.E) - t.E), 1e-12);
  EXPECT_LT(max_abs(r.bracket(r.Z(), t.E.adjoint()) + t.E.adjoint()), 1e-12);
}

TEST(Realize, SuOneOneTheta) {
  auto r = realize(find_pair("su11:K"));
  for (const auto& b : r.g_basis()) EXPECT_LT(max_abs(r.theta(b) + b.adjoint()), 1e-12);
}

TEST(Realize, AllModelPairsPassStructuralChecks) {
  for (const auto& id : kModelPairs) EXPECT_NO_THROW(realize(find_pair(id))) << id;
}

TEST(Projections, ThetaAndTau) {
  auto r = realize(find_pair("sp2:u11"));
  for (const auto& b : r.g_basis()) {
    const bool in_k = max_abs(r.theta(b) - b) < 1e-14;
    const bool in_p = max_abs(r.theta(b) + b) < 1e-14;
    if (in_k) {
      EXPECT_LT(max_abs(r.project_theta(b) - b), 1e-14);
    }
    if (in_p) {
      EXPECT_LT(max_abs(r.project_theta(b)), 1e-14);
    }
    // Elements of g^{τθ}.
    Matrix x = 0.5 * (b + r.tau(r.theta(b)));
    EXPECT_LT(max_abs(r.project_tau(x) - r.project_theta(x)), 1e-12);
  }
}

TEST(Projections, Equivariance) {
  for (const std::string id : {"sp2:u11", "su22:u11+u11"}) {
    auto r = realize(find_pair(id));
    auto rng = task_rng(3, 0);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int k = 0; k < 10; ++k) {
      Matrix h = random_h(r, rng);
      Matrix x = Matrix::Zero(r.size(), r.size());
      for (const auto& b : r.g_basis()) x += u(rng) * b;
      EXPECT_LT(max_abs(r.project_tau(r.Ad(h, x)) - r.Ad(h, r.project_tau(x))), 1e-10) << id;
    }
  }
}

TEST(SinhFormula, Examples) {
  auto r1 = realize(find_pair("sp1:K"));
  EXPECT_LT(verify_sinh_formula(r1, {0.0}, 2.0), 1e-15);
  EXPECT_LT(verify_sinh_formula(r1, {1.0}, 2.0), 1e-9);
  // Independent closed form on sp(1): the k-part of Ad(exp X)(2Z) is
  // 2 cosh(2t) Z.
  const Matrix lhs = r1.project_theta(r1.Ad(r1.a_of({1.0}), 2.0 * r1.Z()));
  EXPECT_NEAR(lhs(0, 0).real(), std::cosh(2.0), 1e-12);

  auto r2 = realize(find_pair("sp2:u11"));
  EXPECT_LT(verify_sinh_formula(r2, {0.7, 0.3}, 1.0), 1e-9);
}

TEST(SinhFormula, RandomSuites) {
  for (const auto& id : kModelPairs) {
    auto rep = verify_sinh_suite(realize(find_pair(id)), 1.5, profile(20));
    EXPECT_TRUE(rep.pass) << id << " " << rep.max_residual;
    EXPECT_LT(rep.max_residual, 1e-9);
  }
}

TEST(Image, OrderedAndDisordered) {
  for (const auto& id : kModelPairs) {
    auto r = realize(find_pair(id));
    auto rep = verify_image(r, Rational(3, 2), profile(20));
    EXPECT_TRUE(rep.pass) << id << " " << rep.max_residual;
  }
  auto k = realize(find_pair("sp2:K"));
  auto rep = verify_image(k, 1, profile(30), true);
  EXPECT_TRUE(rep.pass) << rep.max_residual;
  auto su = realize(find_pair("su22:K"));
  EXPECT_TRUE(verify_image(su, 1, profile(30), true).pass);
}

TEST(Image, MatchesExactClosedForm) {
  auto r = realize(find_pair("sp2:u11"));
  ConeCoefficients s{{Rational(1)}, {Rational(2)}};
  const auto num = r.readout(image_matrix(r, {std::asinh(1.0), std::asinh(std::sqrt(2.0))}, 1.0));
  const Weight exact = momentum_image_point(r.pair(), validate_lambda(r.pair(), 1), s);
  for (std::size_t i = 0; i < num.size(); ++i) EXPECT_NEAR(num[i], exact[i].to_double(), 1e-12);
}

TEST(Injectivity, ClosedFormDistanceAndSuites) {
  auto r = realize(find_pair("sp1:K"));
  const double c = 1.0;
  const auto a = r.readout(image_matrix(r, {1.0}, c)), b = r.readout(image_matrix(r, {2.0}, c));
  const double expected = c * std::abs(std::pow(std::sinh(2.0), 2) - std::pow(std::sinh(1.0), 2)) * 1.0;
  EXPECT_NEAR(std::abs(a[0] - b[0]), expected, 1e-9);
  for (const std::string id : {"sp2:u11", "sp2:K", "su22:u11+u11"}) {
    auto rep = verify_injectivity(realize(find_pair(id)), 1, profile(50));
    EXPECT_TRUE(rep.pass) << id;
  }
}

TEST(Uniqueness, SingleOrbitAndNegativeControl) {
  auto r = realize(find_pair("sp2:K"));
  const Weight mu = r.pair().g.Z + W({2, 0});
  auto rep = verify_uniqueness(r, 1, mu, profile(20));
  EXPECT_TRUE(rep.pass) << rep.max_residual;
  EXPECT_LT(rep.max_residual, 1e-7);

  auto u = realize(find_pair("sp2:u11"));
  EXPECT_TRUE(verify_uniqueness(u, 1, u.pair().g.Z + W({2, 4}), profile(20)).pass);
  EXPECT_THROW(verify_uniqueness(r, 1, r.pair().g.Z + W({0, 2}), profile(5)), Error);
}

TEST(Uniqueness, InvariantSeparatesDistinctParameters) {
  auto r = realize(find_pair("sp2:sp1+sp1"));
  const Weight lam = r.pair().g.Z;
  auto a = orbit_invariant(r, r.embed(lam + W({1, 1})));
  auto b = orbit_invariant(r, r.embed(lam + W({2, 2})));
  ASSERT_TRUE(a && b);
  EXPECT_GT(invariant_distance(*a, *b), 0.5);
  EXPECT_EQ(invariant_distance(*a, *a), 0.0);
}

// For c < 0 the image point of a* lies on the H-orbit of the mirrored
// parameter −canon(−μ) returned by the exact side.
TEST(Mirror, NegativeScalarMatchesExactMirror) {
  std::mt19937_64 rng(19);
  for (const auto& id : {"sp2:u11", "sp2:sp1+sp1", "su22:u11+u11", "sp3:u21"}) {
    auto r = realize(find_pair(id));
    const auto& pair = r.pair();
    const auto& cd = r.cone_descriptor();
    const auto lam = validate_lambda(pair, -1);
    for (int k = 0; k < 20; ++k) {
      const auto s = oracle::detail::sample_chain(rng, cd, 2.0);
      const Weight w = momentum_image_point(pair, lam, s);
      const auto cg = cg_number(pair, lam, OrbitParamH{w});
      ASSERT_EQ(cg.value, 1) << id;
      const Matrix y = image_matrix(r, oracle::detail::to_t(s), -1.0);
      auto a = orbit_invariant(r, y);
      auto b = orbit_invariant(r, r.embed(w));
      ASSERT_TRUE(a && b);
      EXPECT_LT(invariant_distance(*a, *b), 1e-7) << id;
    }
  }
}

TEST(Properness, Rays) {
  auto r = realize(find_pair("sp1:K"));
  auto rep = verify_properness(r, 1, 0, {0.5, 1, 2, 4});
  EXPECT_TRUE(rep.pass) << rep.max_residual;
  auto zero = verify_properness(r, 1, 0, {0.0});
  EXPECT_TRUE(zero.pass);
  auto u = realize(find_pair("sp2:u11"));
  for (std::size_t j = 0; j < u.triples().size(); ++j) EXPECT_TRUE(verify_properness(u, 2, j, {0.5, 1, 2, 4}).pass);
}

TEST(Reports, DeterministicGivenSeed) {
  auto r = realize(find_pair("sp2:u11"));
  auto a = verify_injectivity(r, 1, profile(20, 99)), b = verify_injectivity(r, 1, profile(20, 99));
  EXPECT_EQ(a.max_residual, b.max_residual);
  auto c = verify_uniqueness(r, 1, r.pair().g.Z + W({2, 2}), profile(10, 5));
  auto d = verify_uniqueness(r, 1, r.pair().g.Z + W({2, 2}), profile(10, 5));
  EXPECT_EQ(c.max_residual, d.max_residual);
}
