#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "orbitkit/cone.hpp"
#include "orbitkit/sympair.hpp"

namespace orbitkit::oracle {

using Matrix = Eigen::MatrixXcd;
using cplx = std::complex<double>;

/// Largest entry modulus.
inline double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

inline Matrix expm(const Matrix& m) {
  Matrix e = m.exp();
  if (!e.allFinite()) throw Error("numeric failure");
  return e;
}

/// sl₂-triple data attached to one cascade generator ν.
struct CascadeTriple {
  Weight nu;
  Weight coroot;  // exact H as a weight
  Matrix E;       // root vector in g_ℂ for ν
  Matrix H;       // [E, E†]
  Matrix X;       // E + E†
  Matrix Y;       // −√−1 (E − E†)
};

/// Concrete matrix model of g for sp(n,ℝ) (n ≤ 4) and su(p,q) (p + q ≤ 4),
/// with θ and τ as conjugations by diagonal sign matrices. Elements of √−1 t
/// are real diagonal matrices; weights map to them through embed().
class MatrixRealization {
 public:
  static MatrixRealization realize(const HolomorphicPair& pair, double structural_tol = 1e-12) {
    MatrixRealization r;
    r.pair_ = pair;
    r.cone_ = cone(pair);
    const auto& d = pair.descriptor;
    const auto& g = d.g;
    if (g.family == HermitianFamily::sp && g.p <= 4) {
      r.sp_ = true;
      r.n_ = static_cast<std::size_t>(g.p);
      r.size_ = 2 * r.n_;
    } else if (g.family == HermitianFamily::su && g.p + g.q <= 4) {
      r.n_ = static_cast<std::size_t>(g.p + g.q);
      r.size_ = r.n_;
    } else {
      throw Error("no matrix model registered");
    }
    r.build_signs();
    r.build_basis();
    r.Z_ = r.embed(pair.g.Z);
    for (const auto& grp : r.cone_.groups)
      for (const auto& nu : grp) r.triples_.push_back(r.make_triple(nu));
    r.check_structure(structural_tol);
    return r;
  }

  const HolomorphicPair& pair() const { return pair_; }
  const ConeDescriptor& cone_descriptor() const { return cone_; }
  std::size_t size() const { return size_; }
  std::string label() const { return pair_.descriptor.id; }
  const Matrix& Z() const { return Z_; }
  const std::vector<CascadeTriple>& triples() const { return triples_; }
  const std::vector<Matrix>& g_basis() const { return g_basis_; }
  const std::vector<Matrix>& h_basis() const { return h_basis_; }
  const Eigen::VectorXd& J() const { return j_; }
  const Eigen::VectorXd& D() const { return d_; }
  /// Trace form on t: tr(embed(u) embed(v)) = scale · ⟨u, v⟩.
  double trace_scale() const { return sp_ ? 2.0 : 1.0; }

  Matrix embed(const Weight& w) const {
    if (w.size() != n_) throw Error("dimension mismatch");
    Matrix m = Matrix::Zero(size_, size_);
    for (std::size_t i = 0; i < n_; ++i) {
      const double x = w[i].to_double();
      m(i, i) = x;
      if (sp_) m(n_ + i, n_ + i) = -x;
    }
    return m;
  }

  /// ε-coordinates of the real diagonal part.
  std::vector<double> readout(const Matrix& m) const {
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = m(i, i).real();
    return out;
  }

  /// Largest entry of m that a diagonal element of √−1 t could not have.
  double off_diagonal(const Matrix& m) const {
    Matrix r = m;
    for (std::size_t i = 0; i < size_; ++i) r(i, i) = r(i, i).imag() * cplx(0, 1);
    return max_abs(r);
  }

  Matrix bracket(const Matrix& a, const Matrix& b) const { return a * b - b * a; }
  Matrix theta(const Matrix& x) const { return j_.asDiagonal() * x * j_.asDiagonal(); }
  Matrix tau(const Matrix& x) const { return d_.asDiagonal() * x * d_.asDiagonal(); }
  Matrix project_theta(const Matrix& x) const { return 0.5 * (x + theta(x)); }
  Matrix project_tau(const Matrix& x) const { return 0.5 * (x + tau(x)); }
  double trace_form(const Matrix& a, const Matrix& b) const { return (a * b).trace().real(); }

  /// Whether x lies in the real form g (not √−1 g).
  bool in_g(const Matrix& x, double tol) const {
    const Matrix jm = j_.asDiagonal();
    if (max_abs(x.adjoint() * jm + jm * x) > tol) return false;
    if (!sp_) return std::abs(x.trace()) <= tol;
    // sp(n,ℂ) for the form [[0, I], [−I, 0]].
    Matrix om = Matrix::Zero(size_, size_);
    om.topRightCorner(n_, n_) = Matrix::Identity(n_, n_);
    om.bottomLeftCorner(n_, n_) = -Matrix::Identity(n_, n_);
    return max_abs(x.transpose() * om + om * x) <= tol;
  }

  Matrix Ad(const Matrix& g, const Matrix& x) const { return g * x * g.inverse(); }

  /// exp(Σ t_j X_j) over the cascade generators, in flattened group order.
  Matrix a_of(const std::vector<double>& t) const {
    if (t.size() != triples_.size()) throw Error("coefficient shape mismatch");
    Matrix s = Matrix::Zero(size_, size_);
    for (std::size_t j = 0; j < t.size(); ++j) s += t[j] * triples_[j].X;
    return expm(s);
  }

 private:
  void build_signs() {
    const auto& d = pair_.descriptor;
    j_ = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(size_));
    d_ = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(size_));
    const auto idx = [](std::size_t i) { return static_cast<Eigen::Index>(i); };
    if (sp_) {
      for (std::size_t i = 0; i < n_; ++i) j_(idx(n_ + i)) = -1;
      const std::size_t p = static_cast<std::size_t>(d.k);
      for (std::size_t i = 0; i < n_; ++i) {
        const double di = i < p ? 1.0 : -1.0;
        switch (d.h) {
          case SubgroupKind::maximal_compact:
            d_(idx(i)) = 1;
            d_(idx(n_ + i)) = -1;
            break;
          case SubgroupKind::sp_u:
            d_(idx(i)) = di;
            d_(idx(n_ + i)) = -di;
            break;
          case SubgroupKind::sp_sp:
            d_(idx(i)) = di;
            d_(idx(n_ + i)) = di;
            break;
          default: throw Error("no matrix model registered");
        }
      }
    } else {
      const auto p = static_cast<std::size_t>(d.g.p);
      for (std::size_t i = p; i < n_; ++i) j_(idx(i)) = -1;
      switch (d.h) {
        case SubgroupKind::maximal_compact: d_ = j_; break;
        case SubgroupKind::su_split:
          for (std::size_t i = 0; i < n_; ++i) {
            const bool in_a = i < static_cast<std::size_t>(d.k) || (i >= p && i < p + static_cast<std::size_t>(d.l));
            d_(idx(i)) = in_a ? 1 : -1;
          }
          break;
        default: throw Error("no matrix model registered");
      }
    }
  }

  Matrix unit(std::size_t i, std::size_t j) const {
    Matrix m = Matrix::Zero(size_, size_);
    m(i, j) = 1;
    return m;
  }

  void build_basis() {
    const cplx I(0, 1);
    if (sp_) {
      auto blockA = [&](const Matrix& a) {
        Matrix m = Matrix::Zero(size_, size_);
        m.topLeftCorner(n_, n_) = a;
        m.bottomRightCorner(n_, n_) = a.conjugate();
        return m;
      };
      auto blockB = [&](const Matrix& b) {
        Matrix m = Matrix::Zero(size_, size_);
        m.topRightCorner(n_, n_) = b;
        m.bottomLeftCorner(n_, n_) = b.conjugate();
        return m;
      };
      auto e = [&](std::size_t i, std::size_t j) {
        Matrix m = Matrix::Zero(n_, n_);
        m(i, j) = 1;
        return m;
      };
      for (std::size_t i = 0; i < n_; ++i) g_basis_.push_back(blockA(I * e(i, i)));
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) {
          g_basis_.push_back(blockA(e(i, j) - e(j, i)));
          g_basis_.push_back(blockA(I * (e(i, j) + e(j, i))));
        }
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j) {
          Matrix s = i == j ? e(i, i) : Matrix(e(i, j) + e(j, i));
          g_basis_.push_back(blockB(s));
          g_basis_.push_back(blockB(I * s));
        }
    } else {
      for (std::size_t k = 0; k + 1 < n_; ++k) g_basis_.push_back(I * (unit(k, k) - unit(k + 1, k + 1)));
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) {
          if (j_(static_cast<Eigen::Index>(i)) == j_(static_cast<Eigen::Index>(j))) {
            g_basis_.push_back(unit(i, j) - unit(j, i));
            g_basis_.push_back(I * (unit(i, j) + unit(j, i)));
          } else {
            g_basis_.push_back(unit(i, j) + unit(j, i));
            g_basis_.push_back(I * (unit(i, j) - unit(j, i)));
          }
        }
    }
    for (const auto& b : g_basis_) {
      Matrix h = project_tau(b);
      if (max_abs(h) > 1e-14) h_basis_.push_back(h);
    }
  }

  /// Root vector for a noncompact positive root ν (a root of g here, since the
  /// registered involutions act trivially on t).
  Matrix root_vector(const Weight& nu) const {
    std::vector<std::size_t> plus, minus;
    for (std::size_t i = 0; i < n_; ++i) {
      if (nu[i].sign() > 0) plus.push_back(i);
      if (nu[i].sign() < 0) minus.push_back(i);
    }
    if (!sp_) {
      if (plus.size() != 1 || minus.size() != 1) throw Error("no matrix model registered");
      return unit(plus[0], minus[0]);
    }
    if (!minus.empty()) throw Error("no matrix model registered");
    if (plus.size() == 1) return unit(plus[0], n_ + plus[0]);
    if (plus.size() == 2) return unit(plus[0], n_ + plus[1]) + unit(plus[1], n_ + plus[0]);
    throw Error("no matrix model registered");
  }

  CascadeTriple make_triple(const Weight& nu) const {
    CascadeTriple t;
    t.nu = nu;
    t.coroot = orbitkit::coroot(nu);
    t.E = root_vector(nu);
    const Matrix Ed = t.E.adjoint();
    t.H = t.E * Ed - Ed * t.E;
    t.X = t.E + Ed;
    t.Y = cplx(0, -1) * (t.E - Ed);
    return t;
  }

  void check_structure(double tol) const {
    auto fail = [](const std::string& what) { throw Error("matrix model check failed: " + what); };
    for (const auto& b : g_basis_) {
      if (!in_g(b, tol)) fail("basis element outside g");
      if (max_abs(theta(theta(b)) - b) > tol) fail("theta is not an involution");
      if (max_abs(tau(tau(b)) - b) > tol) fail("tau is not an involution");
      if (max_abs(theta(tau(b)) - tau(theta(b))) > tol) fail("theta and tau do not commute");
      if (!in_g(tau(b), tol)) fail("tau does not preserve g");
    }
    if (g_basis_.size() != static_cast<std::size_t>(pair_.g.roots.size() + pair_.g.roots.rank()))
      fail("basis has the wrong dimension");
    for (const auto& t : triples_) {
      if (max_abs(bracket(Z_, t.E) - t.E) > tol) fail("[Z, E] != E");
      const Matrix Ed = t.E.adjoint();
      if (max_abs(bracket(Z_, Ed) + Ed) > tol) fail("[Z, E*] != -E*");
      if (max_abs(bracket(t.H, t.E) - 2.0 * t.E) > tol) fail("[H, E] != 2E");
      if (max_abs(t.H - embed(t.coroot)) > tol) fail("H does not match the coroot");
      for (const Matrix* m : {&t.X, &t.Y}) {
        if (!in_g(*m, tol)) fail("X or Y outside g");
        if (max_abs(theta(*m) + *m) > tol || max_abs(tau(*m) + *m) > tol) fail("X or Y outside p^{-tau}");
      }
    }
    // Trace form on t against the exact form, up to one global constant.
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const double num = trace_form(embed(Weight::unit(n_, i)), embed(Weight::unit(n_, j)));
        if (std::abs(num - trace_scale() * (i == j ? 1.0 : 0.0)) > tol) fail("trace form ratio");
      }
  }

  HolomorphicPair pair_;
  ConeDescriptor cone_;
  bool sp_ = false;
  std::size_t n_ = 0;     // number of ε-coordinates
  std::size_t size_ = 0;  // matrix size
  Eigen::VectorXd j_, d_;
  Matrix Z_;
  std::vector<Matrix> g_basis_, h_basis_;
  std::vector<CascadeTriple> triples_;
};

inline MatrixRealization realize(const HolomorphicPair& pair) { return MatrixRealization::realize(pair); }
inline MatrixRealization realize(const PairDescriptor& d) { return MatrixRealization::realize(build_pair(d)); }

}  // namespace orbitkit::oracle
