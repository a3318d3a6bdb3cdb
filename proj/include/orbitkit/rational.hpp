#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace orbitkit {

/// Error raised by the exact core. The message text is part of the public
/// contract (the CLI surfaces it verbatim).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational number, always held in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) {
    if (d == 0) throw Error("zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "p/q" or "-p/q" (surrounding blanks allowed).
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    auto digits = [](std::string_view s) {
      if (s.empty()) return false;
      for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
      return true;
    };
    std::string_view s = trim(text);
    std::string_view sign;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      sign = s.substr(0, 1);
      s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw Error("malformed rational '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error("zero denominator");
    mpz_class n(std::string(num), 10);
    if (sign == "-") n = -n;
    mpq_class v(n, d);
    return Rational(std::move(v));
  }

  const mpq_class& value() const { return v_; }
  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }
  /// Always "p/q", including "3/1" and "0/1".
  std::string str() const { return numerator_str() + "/" + denominator_str(); }
  double to_double() const { return v_.get_d(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

 private:
  mpq_class v_;
};

/// Best rational approximation of x with denominator at most max_den
/// (continued-fraction convergents plus the final semiconvergent).
inline Rational best_rational(double x, long max_den) {
  if (!std::isfinite(x)) throw Error("cannot reconstruct a non-finite value");
  if (max_den < 1) throw Error("denominator bound must be positive");
  const bool negative = x < 0;
  long double r = std::fabs(static_cast<long double>(x));
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  long double rem = r;
  for (int iter = 0; iter < 64; ++iter) {
    const long double a_ld = std::floor(rem);
    if (a_ld > 1e15L) break;
    const long a = static_cast<long>(a_ld);
    const long q2 = q0 + a * q1;
    if (q2 > max_den) {
      // Semiconvergent candidate with the largest admissible multiplier.
      const long k = (max_den - q0) / q1;
      const long ps = p0 + k * p1, qs = q0 + k * q1;
      const long double err_conv = std::fabs(r - static_cast<long double>(p1) / q1);
      const long double err_semi = std::fabs(r - static_cast<long double>(ps) / qs);
      if (err_semi < err_conv) {
        p1 = ps;
        q1 = qs;
      }
      break;
    }
    const long p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const long double frac = rem - a_ld;
    if (frac < 1e-18L || std::fabs(r - static_cast<long double>(p1) / q1) < 1e-17L * (1 + r)) break;
    rem = 1.0L / frac;
  }
  Rational out(p1, q1);
  return negative ? -out : out;
}

}  // namespace orbitkit
