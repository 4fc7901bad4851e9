// Quadratic surds p + q*sqrt(d) with exact sign and comparison algebra.
// Radicands are arbitrary nonnegative rationals and are not reduced to
// squarefree form; comparisons work by sign case analysis and squaring.
#pragma once

#include "tiltwall/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace tiltwall {

class Surd {
 public:
  Surd() = default;
  Surd(Rational p) : p_(std::move(p)) {}  // NOLINT: implicit from rationals
  Surd(long long p) : p_(p) {}            // NOLINT
  Surd(Rational p, Rational q, Rational d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
    if (d_ < 0) throw std::invalid_argument("Surd: negative radicand");
    if (q_.is_zero() || d_.is_zero()) {  // canonical rational form
      q_ = Rational(0);
      d_ = Rational(0);
    }
  }

  const Rational& rational_part() const { return p_; }
  const Rational& coefficient() const { return q_; }
  const Rational& radicand() const { return d_; }

  bool is_rational() const { return q_.is_zero(); }
  const Rational& rational_value() const {
    if (!is_rational()) throw std::logic_error("Surd: value is irrational");
    return p_;
  }

  int sign() const { return sign_of(p_, q_, d_); }

  Surd operator-() const { return Surd(-p_, -q_, d_); }
  friend Surd operator+(const Surd& a, const Rational& r) { return Surd(a.p_ + r, a.q_, a.d_); }
  friend Surd operator+(const Rational& r, const Surd& a) { return a + r; }
  friend Surd operator-(const Surd& a, const Rational& r) { return Surd(a.p_ - r, a.q_, a.d_); }
  friend Surd operator-(const Rational& r, const Surd& a) { return (-a) + r; }
  friend Surd operator*(const Rational& r, const Surd& a) {
    return Surd(r * a.p_, r * a.q_, a.d_);
  }
  friend Surd operator*(const Surd& a, const Rational& r) { return r * a; }

  // (p + q*sqrt(d))^2 stays in the same quadratic field.
  Surd square() const { return Surd(p_ * p_ + q_ * q_ * d_, 2 * (p_ * q_), d_); }

  // Exact trichotomy for arbitrary pairs of surds; equality across different
  // radicand representations (e.g. sqrt(8) vs 2*sqrt(2)) is detected
  // algebraically.
  friend std::strong_ordering operator<=>(const Surd& a, const Surd& b) {
    return from_sign(compare_sign(a, b));
  }
  friend bool operator==(const Surd& a, const Surd& b) { return compare_sign(a, b) == 0; }
  friend std::strong_ordering operator<=>(const Surd& a, const Rational& r) {
    return a <=> Surd(r);
  }
  friend bool operator==(const Surd& a, const Rational& r) { return a == Surd(r); }

  std::string str() const {
    if (is_rational()) return p_.str();
    std::string out;
    if (!p_.is_zero()) out += p_.str();
    if (!out.empty()) out += q_ < 0 ? " - " : " + ";
    else if (q_ < 0) out += "-";
    const Rational qa = q_.abs();
    if (!(qa == Rational(1))) out += qa.str() + "*";
    out += "sqrt(" + d_.str() + ")";
    return out;
  }

 private:
  // Sign of p + q*sqrt(d) with d >= 0 (no canonicality assumed).
  static int sign_of(const Rational& p, const Rational& q, const Rational& d) {
    if (q.is_zero() || d.is_zero()) return p.sign();
    const int sp = p.sign();
    const int sq = q.sign();
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: |p| vs |q|*sqrt(d) decided by squaring.
    const int c = (p * p - q * q * d).sign();
    return sp > 0 ? c : -c;
  }

  // Sign of a - b.
  static int compare_sign(const Surd& a, const Surd& b) {
    const Rational diff = a.p_ - b.p_;
    if (b.q_.is_zero()) return sign_of(diff, a.q_, a.d_);
    if (a.q_.is_zero()) return sign_of(diff, -b.q_, b.d_);
    if (a.d_ == b.d_) return sign_of(diff, a.q_ - b.q_, a.d_);
    // Two distinct radicands: compare S = diff + q_a*sqrt(d_a) against
    // T = q_b*sqrt(d_b); equal nonzero signs are resolved on squares.
    const int ss = sign_of(diff, a.q_, a.d_);
    const int st = b.q_.sign();
    if (ss != st) return ss < st ? -1 : 1;
    if (ss == 0) return 0;
    const Rational s2_rat = diff * diff + a.q_ * a.q_ * a.d_;
    const Rational s2_coeff = 2 * (diff * a.q_);
    const Rational t2 = b.q_ * b.q_ * b.d_;
    const int c = sign_of(s2_rat - t2, s2_coeff, a.d_);
    return ss > 0 ? c : -c;
  }

  static std::strong_ordering from_sign(int s) {
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational p_{0};
  Rational q_{0};
  Rational d_{0};
};

// Floor of sqrt(n) for n >= 0.
inline BigInt floor_sqrt(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("floor_sqrt: negative argument");
  return boost::multiprecision::sqrt(n);
}

// Rational lower bound for sqrt(x) with error < 10^-digits. Deterministic;
// used for decimal emission and for picking sample points inside segments.
inline Rational sqrt_lower_bound(const Rational& x, unsigned digits) {
  if (x < 0) throw std::invalid_argument("sqrt_lower_bound: negative argument");
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  // sqrt(n/d) = sqrt(n*d)/d
  const BigInt n = x.numerator(), d = x.denominator();
  const BigInt root = floor_sqrt(n * d * scale * scale);
  return Rational(root, d * scale);
}

// Rational approximation of a surd with error < |q| * 10^-digits + 10^-digits.
inline Rational approx(const Surd& s, unsigned digits) {
  if (s.is_rational()) return s.rational_value();
  return s.rational_part() + s.coefficient() * sqrt_lower_bound(s.radicand(), digits);
}

}  // namespace tiltwall
