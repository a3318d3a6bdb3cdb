#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orbitkit/cg.hpp"
#include "orbitkit/oracle/matrix_model.hpp"

namespace orbitkit::oracle {

struct ToleranceProfile {
  double structural_tol = 1e-12;
  double residual_tol = 1e-9;
  std::size_t sample_count = 100;
  std::uint64_t rng_seed = 0;
};

struct VerifyReport {
  std::string suite;
  std::size_t samples = 0;
  double max_residual = 0;
  bool pass = true;
  bool inconclusive = false;
  std::size_t failures = 0;
  std::vector<std::string> notes;
};

/// Independent stream per (seed, task).
inline std::mt19937_64 task_rng(std::uint64_t seed, std::uint64_t task) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(task), static_cast<std::uint32_t>(task >> 32)};
  return std::mt19937_64(seq);
}

namespace detail {

inline double sinh2(double t) {
  const double s = std::sinh(t);
  return s * s;
}

/// Chain-ordered rational s per group (denominator ≤ 12, s ∈ [0, sinh²(t_max)]).
inline ConeCoefficients sample_chain(std::mt19937_64& rng, const ConeDescriptor& cd, double t_max = 3.0) {
  const long hi = static_cast<long>(std::floor(sinh2(t_max)));
  std::uniform_int_distribution<long> den(1, 12);
  ConeCoefficients s;
  for (const auto& g : cd.groups) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < g.size(); ++j) {
      const long d = den(rng);
      std::uniform_int_distribution<long> num(0, hi * d);
      row.emplace_back(num(rng), d);
    }
    std::sort(row.begin(), row.end(), std::greater<>());
    s.push_back(std::move(row));
  }
  return s;
}

inline std::vector<double> to_t(const ConeCoefficients& s) {
  std::vector<double> t;
  for (const auto& g : s)
    for (const auto& x : g) t.push_back(std::asinh(std::sqrt(x.to_double())));
  return t;
}

inline double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace detail

/// pr^τ(Ad(a) λ) for a = exp(Σ t_j X_j) and λ = c Z.
inline Matrix image_matrix(const MatrixRealization& r, const std::vector<double>& t, double c) {
  const Matrix a = r.a_of(t);
  return r.project_tau(r.Ad(a, c * r.Z()));
}

/// Max-entry residual of pr^θ(Ad(a)(cZ)) against c(Z + Σ sinh²(t_j) H_j).
inline double verify_sinh_formula(const MatrixRealization& r, const std::vector<double>& t, double c) {
  const Matrix a = r.a_of(t);
  const Matrix lhs = r.project_theta(r.Ad(a, c * r.Z()));
  Matrix rhs = r.Z();
  for (std::size_t j = 0; j < t.size(); ++j) rhs += detail::sinh2(t[j]) * r.triples()[j].H;
  return max_abs(lhs - c * rhs);
}

/// Random t ∈ [0, t_max]^r, not necessarily ordered.
inline VerifyReport verify_sinh_suite(const MatrixRealization& r, double c, const ToleranceProfile& prof,
                                      double t_max = 3.0) {
  VerifyReport rep{"sinh", 0, 0, true, false, 0, {}};
  auto rng = task_rng(prof.rng_seed, 1);
  std::uniform_real_distribution<double> u(0.0, t_max);
  for (std::size_t k = 0; k < prof.sample_count; ++k) {
    std::vector<double> t(r.triples().size());
    for (auto& x : t) x = k == 0 ? 0.0 : u(rng);
    const double res = verify_sinh_formula(r, t, c);
    rep.max_residual = std::max(rep.max_residual, res);
    if (!(res < prof.residual_tol)) ++rep.failures;
    ++rep.samples;
  }
  rep.pass = rep.failures == 0;
  return rep;
}

/// Numeric image points reconstructed as rationals must lie in λ + Cone
/// exactly. With `disordered`, each group's s is reversed and the readout is
/// brought to the dominant chamber of k^τ before the test.
inline VerifyReport verify_image(const MatrixRealization& r, const Rational& c, const ToleranceProfile& prof,
                                 bool disordered = false) {
  VerifyReport rep{disordered ? "image-disordered" : "image", 0, 0, true, false, 0, {}};
  const auto& pair = r.pair();
  const auto& cd = r.cone_descriptor();
  const Weight lambda = c * pair.g.Z;
  auto rng = task_rng(prof.rng_seed, 2);
  for (std::size_t k = 0; k < prof.sample_count; ++k) {
    ConeCoefficients s = detail::sample_chain(rng, cd);
    if (k == 0)
      for (auto& g : s)
        for (auto& x : g) x = 0;
    if (disordered)
      for (auto& g : s) std::reverse(g.begin(), g.end());
    const Matrix img = image_matrix(r, detail::to_t(s), c.to_double());
    const auto num = r.readout(img);
    Weight rec(num.size());
    double res = r.off_diagonal(img);
    for (std::size_t i = 0; i < num.size(); ++i) {
      rec[i] = best_rational(num[i], 1000000);
      res = std::max(res, std::abs(num[i] - rec[i].to_double()));
    }
    if (disordered) rec = weyl_canonicalize(rec, pair.k_tau).first;
    rep.max_residual = std::max(rep.max_residual, res);
    const bool member = cone_contains(cd, rec - restrict(lambda, pair)).member;
    if (!member || !(res < prof.residual_tol)) ++rep.failures;
    ++rep.samples;
  }
  rep.pass = rep.failures == 0;
  return rep;
}

/// Distinct chain-ordered parameters must give distinct image points, at a
/// distance close to the closed-form one.
inline VerifyReport verify_injectivity(const MatrixRealization& r, const Rational& c, const ToleranceProfile& prof) {
  VerifyReport rep{"injectivity", 0, 0, true, false, 0, {}};
  const auto& cd = r.cone_descriptor();
  const double cd_ = c.to_double();
  auto rng = task_rng(prof.rng_seed, 3);
  const double sep = 10 * prof.residual_tol;
  while (rep.samples < prof.sample_count) {
    ConeCoefficients s1 = detail::sample_chain(rng, cd), s2 = detail::sample_chain(rng, cd);
    Weight diff(r.pair().g.dim());
    std::size_t idx = 0;
    double gap = 0;
    for (std::size_t i = 0; i < s1.size(); ++i)
      for (std::size_t j = 0; j < s1[i].size(); ++j, ++idx) {
        diff += (s1[i][j] - s2[i][j]) * r.triples()[idx].coroot;
        gap = std::max(gap, std::abs((s1[i][j] - s2[i][j]).to_double()));
      }
    if (gap < sep) continue;
    const double predicted = std::abs(cd_) * std::sqrt(inner(diff, diff).to_double());
    const auto a = r.readout(image_matrix(r, detail::to_t(s1), cd_));
    const auto b = r.readout(image_matrix(r, detail::to_t(s2), cd_));
    const double dist = detail::distance(a, b);
    rep.max_residual = std::max(rep.max_residual, std::abs(dist - predicted) / predicted);
    if (dist < 0.5 * predicted || dist < prof.residual_tol) ++rep.failures;
    ++rep.samples;
  }
  rep.pass = rep.failures == 0;
  if (rep.failures) rep.notes.push_back(std::to_string(rep.failures) + " collisions");
  return rep;
}

/// One entry per eigenvalue cluster of an elliptic element: value and the sign
/// of the Hermitian form J on the eigenvector.
struct SignedEigenvalue {
  double value = 0;
  int sign = 0;
};

/// Invariant of the H-orbit of an elliptic y ∈ √−1 h: per τ-eigenspace block,
/// eigenvalues with J-signature, sorted. Returns nullopt when a cluster is
/// numerically indefinite.
inline std::optional<std::vector<std::vector<SignedEigenvalue>>> orbit_invariant(const MatrixRealization& r,
                                                                                  const Matrix& y) {
  std::vector<std::vector<SignedEigenvalue>> out;
  for (double side : {1.0, -1.0}) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < r.D().size(); ++i)
      if (r.D()(i) == side) idx.push_back(i);
    const auto m = static_cast<Eigen::Index>(idx.size());
    if (m == 0) continue;
    Matrix yb(m, m);
    Eigen::VectorXd jb(m);
    for (Eigen::Index a = 0; a < m; ++a) {
      jb(a) = r.J()(idx[static_cast<std::size_t>(a)]);
      for (Eigen::Index b = 0; b < m; ++b) yb(a, b) = y(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
    }
    Eigen::ComplexEigenSolver<Matrix> es(yb);
    if (es.info() != Eigen::Success) return std::nullopt;
    std::vector<double> ev;
    for (Eigen::Index a = 0; a < m; ++a) ev.push_back(es.eigenvalues()(a).real());
    std::sort(ev.begin(), ev.end());
    const double scale = std::max(1.0, max_abs(yb));
    std::vector<SignedEigenvalue> block;
    for (std::size_t s = 0; s < ev.size();) {
      std::size_t e = s + 1;
      while (e < ev.size() && ev[e] - ev[e - 1] < 1e-6 * scale) ++e;
      double mean = 0;
      for (std::size_t k = s; k < e; ++k) mean += ev[k];
      mean /= static_cast<double>(e - s);
      // Eigenspace as the null space of yb − mean, then the inertia of J on it.
      Matrix shifted = yb - mean * Matrix::Identity(m, m);
      Eigen::JacobiSVD<Matrix> svd(shifted, Eigen::ComputeFullV);
      const auto k = static_cast<Eigen::Index>(e - s);
      Matrix V = svd.matrixV().rightCols(k);
      Matrix G = V.adjoint() * jb.asDiagonal() * V;
      Eigen::SelfAdjointEigenSolver<Matrix> gs(G);
      for (Eigen::Index q = 0; q < k; ++q) {
        const double gv = gs.eigenvalues()(q);
        if (std::abs(gv) < 1e-6) return std::nullopt;
        block.push_back({mean, gv > 0 ? 1 : -1});
      }
      s = e;
    }
    std::sort(block.begin(), block.end(), [](const SignedEigenvalue& a, const SignedEigenvalue& b) {
      return a.sign != b.sign ? a.sign > b.sign : a.value < b.value;
    });
    out.push_back(std::move(block));
  }
  return out;
}

/// Max eigenvalue gap, or infinity when the signatures differ.
inline double invariant_distance(const std::vector<std::vector<SignedEigenvalue>>& a,
                                 const std::vector<std::vector<SignedEigenvalue>>& b) {
  if (a.size() != b.size()) return INFINITY;
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return INFINITY;
    for (std::size_t k = 0; k < a[i].size(); ++k) {
      if (a[i][k].sign != b[i][k].sign) return INFINITY;
      d = std::max(d, std::abs(a[i][k].value - b[i][k].value));
    }
  }
  return d;
}

/// A random element of H: a product of ≤ 6 exponentials of h-basis elements
/// with coefficients in [−1, 1].
inline Matrix random_h(const MatrixRealization& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<std::size_t> pick(0, r.h_basis().size() - 1);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Matrix h = Matrix::Identity(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(r.size()));
  const int k = count(rng);
  for (int i = 0; i < k; ++i) h = h * expm(coef(rng) * r.h_basis()[pick(rng)]);
  return h;
}

/// All points Ad(h)Ad(a*)λ over random h must project to the single H-orbit of μ.
/// μ must have cg_number = 1; its certificate fixes a*. A second admissible
/// parameter (μ plus the leading generator of the first group) serves as a
/// negative control.
inline VerifyReport verify_uniqueness(const MatrixRealization& r, const Rational& c, const Weight& mu,
                                      const ToleranceProfile& prof, double tol = 1e-7) {
  VerifyReport rep{"uniqueness", 0, 0, true, false, 0, {}};
  const auto& pair = r.pair();
  const auto& cd = r.cone_descriptor();
  const auto lam = validate_lambda(pair, c);
  if (lam.degenerate || lam.mirrored) throw Error("uniqueness check needs c > 0");
  const auto res = cg_number(pair, lam, OrbitParamH{mu});
  if (res.value != 1) throw Error("mu is not in the image (cg_number = 0)");
  const auto s = cone_to_image(cd, c, *res.certificate);
  const double cdbl = c.to_double();
  const Matrix x0 = r.Ad(r.a_of(detail::to_t(s)), cdbl * r.Z());
  const auto target = orbit_invariant(r, r.embed(mu));
  if (!target) throw Error("numeric failure");

  auto rng = task_rng(prof.rng_seed, 4);
  for (std::size_t k = 0; k < prof.sample_count; ++k) {
    const Matrix h = k == 0 ? Matrix::Identity(x0.rows(), x0.cols()) : random_h(r, rng);
    const Matrix y = r.project_tau(r.Ad(h, x0));
    ++rep.samples;
    const auto inv = orbit_invariant(r, y);
    if (!inv) {
      rep.inconclusive = true;
      continue;
    }
    const double d = invariant_distance(*inv, *target);
    rep.max_residual = std::max(rep.max_residual, d);
    if (!(d <= tol)) ++rep.failures;
  }

  // Negative control: a different admissible parameter gives a different orbit.
  const Weight other = mu + cd.groups.front().front();
  const auto ores = cg_number(pair, lam, OrbitParamH{other});
  if (ores.value == 1) {
    const auto so = cone_to_image(cd, c, *ores.certificate);
    const Matrix y = r.project_tau(r.Ad(random_h(r, rng), r.Ad(r.a_of(detail::to_t(so)), cdbl * r.Z())));
    const auto inv = orbit_invariant(r, y);
    if (inv && !(invariant_distance(*inv, *target) > 1e3 * tol)) {
      ++rep.failures;
      rep.notes.push_back("negative control collided");
    }
  }
  rep.pass = rep.failures == 0;
  if (rep.inconclusive) rep.notes.push_back("some samples had numerically indefinite eigenspaces");
  return rep;
}

/// Along the ray exp(t X_j): the norm of pr^τ(Ad(a)λ) increases strictly, matches
/// the closed form c‖Z + sinh²(t) H_j‖ and dominates c sinh²(t_max) ‖H_j‖.
inline VerifyReport verify_properness(const MatrixRealization& r, const Rational& c, std::size_t ray_index,
                                      const std::vector<double>& t_grid, double rel_tol = 1e-6) {
  VerifyReport rep{"properness", 0, 0, true, false, 0, {}};
  if (ray_index >= r.triples().size()) throw Error("ray index out of range");
  const double cd = c.to_double();
  const auto& H = r.triples()[ray_index].H;
  double prev = -1;
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    if (k > 0 && !(t_grid[k] > t_grid[k - 1])) throw Error("grid must be increasing");
    std::vector<double> t(r.triples().size(), 0.0);
    t[ray_index] = t_grid[k];
    const double norm = image_matrix(r, t, cd).norm();
    const double closed = std::abs(cd) * (r.Z() + detail::sinh2(t_grid[k]) * H).norm();
    const double rel = std::abs(norm - closed) / closed;
    rep.max_residual = std::max(rep.max_residual, rel);
    if (!(rel < rel_tol)) ++rep.failures;
    if (k > 0 && !(norm > prev)) {
      ++rep.failures;
      rep.notes.push_back("norm not increasing at t = " + std::to_string(t_grid[k]));
    }
    prev = norm;
    ++rep.samples;
  }
  if (!t_grid.empty()) {
    const double bound = std::abs(cd) * detail::sinh2(t_grid.back()) * H.norm() * (1 - rel_tol);
    if (!(prev >= bound)) {
      ++rep.failures;
      rep.notes.push_back("final norm below the divergence bound");
    }
  }
  rep.pass = rep.failures == 0;
  return rep;
}

}  // namespace orbitkit::oracle
