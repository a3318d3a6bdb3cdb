#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "orbitkit/rational.hpp"

namespace orbitkit {

/// Coordinate vector in the ε-basis of √−1 t*. Roots, orbit parameters and
/// cone generators all travel as Weights; elements of a subspace such as
/// √−1 (t^τ)* keep the ambient coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t dim) : c_(dim) {}
  Weight(std::initializer_list<Rational> c) : c_(c) {}
  explicit Weight(std::vector<Rational> c) : c_(std::move(c)) {}

  static Weight unit(std::size_t dim, std::size_t i, const Rational& scale = 1) {
    Weight w(dim);
    w.c_.at(i) = scale;
    return w;
  }

  std::size_t size() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    check_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Weight& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Weight operator*(const Rational& s, Weight w) { return w *= s; }
  friend Weight operator/(Weight w, const Rational& s) {
    for (auto& x : w.c_) x /= s;
    return w;
  }

  friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
  /// Lexicographic on ε_1, ε_2, …; shorter vectors order first.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += c_[i].is_integer() ? c_[i].numerator_str() : c_[i].str();
    }
    return s + ")";
  }

  std::vector<double> to_doubles() const {
    std::vector<double> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x.to_double());
    return out;
  }

 private:
  void check_dim(const Weight& o) const {
    if (o.size() != size()) throw Error("dimension mismatch");
  }

  std::vector<Rational> c_;
};

/// The invariant form, normalized so that ⟨ε_i, ε_j⟩ = δ_ij.
inline Rational inner(const Weight& u, const Weight& v) {
  if (u.size() != v.size()) throw Error("dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

/// 2α / ⟨α, α⟩.
inline Weight coroot(const Weight& alpha) {
  if (alpha.is_zero()) throw Error("zero weight has no coroot");
  return Rational(2) / inner(alpha, alpha) * alpha;
}

/// First nonzero coordinate is positive.
inline bool lex_positive(const Weight& w) {
  for (const auto& x : w) {
    if (x.sign() != 0) return x.sign() > 0;
  }
  return false;
}

}  // namespace orbitkit
