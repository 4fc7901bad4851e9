// Exact rational arithmetic. Values are always in lowest terms with a
// positive denominator; there is no conversion to or from floating point.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tiltwall {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit for integer literals
  Rational(const BigInt& n) : v_(n) {}
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = boost::multiprecision::cpp_rational(num, den);
  }

  Rational(double) = delete;  // no silent float contamination
  Rational(float) = delete;

  // Accepts "p", "-p", "p/q" with optional sign on p; q must be positive.
  // This is the only textual input format.
  static Rational parse(std::string_view s) {
    auto bad = [&]() -> std::invalid_argument {
      return std::invalid_argument("Rational: cannot parse \"" + std::string(s) +
                                   "\" (expected \"p\" or \"p/q\")");
    };
    if (s.empty()) throw bad();
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (num.empty() || den.empty()) throw bad();
    auto parse_int = [&](std::string_view t, bool allow_sign) -> BigInt {
      std::size_t i = 0;
      if (allow_sign && (t[0] == '+' || t[0] == '-')) i = 1;
      if (i == t.size()) throw bad();
      for (std::size_t j = i; j < t.size(); ++j)
        if (t[j] < '0' || t[j] > '9') throw bad();
      return BigInt(std::string(t));
    };
    const BigInt p = parse_int(num, true);
    const BigInt q = parse_int(den, false);
    if (q == 0) throw bad();
    return Rational(p, q);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }

  // Largest integer <= value.
  BigInt floor() const {
    BigInt q = numerator() / denominator();
    if (numerator() < 0 && q * denominator() != numerator()) --q;
    return q;
  }

  std::string str() const {
    std::string out = numerator().str();
    if (denominator() != 1) out += "/" + denominator().str();
    return out;
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_rational v_;
};

inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

// Slope of a weak stability function: a rational value or +infinity.
// +infinity occurs exactly when the defining denominator vanishes; the
// formulas never produce -infinity.
class SlopeValue {
 public:
  static SlopeValue infinity() { return SlopeValue(true, Rational()); }
  static SlopeValue of(Rational r) { return SlopeValue(false, std::move(r)); }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const {
    if (infinite_) throw std::logic_error("SlopeValue: +infinity has no finite value");
    return value_;
  }

  friend bool operator==(const SlopeValue& a, const SlopeValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  // +infinity is above every rational.
  friend std::strong_ordering operator<=>(const SlopeValue& a, const SlopeValue& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

  std::string str() const { return infinite_ ? "inf" : value_.str(); }

 private:
  SlopeValue(bool inf, Rational v) : infinite_(inf), value_(std::move(v)) {}
  bool infinite_;
  Rational value_;
};

}  // namespace tiltwall
