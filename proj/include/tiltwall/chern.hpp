// Reduced Chern characters on a polarized threefold and their basic
// numerical invariants: twisting, slopes, projection, discriminant.
//
// All quantities are exact rationals. A class is the quadruple
// (ch0, ch1.H^2, ch2.H, ch3); the polarization enters only through H^3.
#pragma once

#include "tiltwall/rational.hpp"

#include <stdexcept>
#include <string>

namespace tiltwall {

enum class BgRegion { Everywhere, LiQuintic, None };

std::string to_string(BgRegion r);
BgRegion bg_region_from_string(const std::string& s);

struct Polarization {
  Rational h3;
  BgRegion bg_region = BgRegion::Everywhere;

  Polarization(Rational h3_, BgRegion region = BgRegion::Everywhere)
      : h3(std::move(h3_)), bg_region(region) {
    if (!(h3 > 0)) throw std::invalid_argument("Polarization: H^3 must be positive");
  }
};

// Denominator bounds for the components of a reduced Chern character:
// component i must lie in (1/d_i) * Z.
struct LatticeSpec {
  long long d0 = 1;
  long long d1 = 1;
  long long d2 = 1;
  long long d3 = 1;

  LatticeSpec(long long a, long long b, long long c, long long d)
      : d0(a), d1(b), d2(c), d3(d) {
    if (d0 < 1 || d1 < 1 || d2 < 1 || d3 < 1)
      throw std::invalid_argument("LatticeSpec: denominators must be >= 1");
  }

  // Lattice of Chern characters of sheaves with integral H-intersections:
  // ch0 in Z, ch1.H^2 in Z, ch2.H in (1/2)Z, ch3 in (1/6)Z.
  static LatticeSpec chern_default() { return {1, 1, 2, 6}; }

  // Lattice scanned for destabilizer truncations. Rank-one destabilizers
  // have integral ch2.H (degree of a curve), hence d2 = 1 here.
  static LatticeSpec scan_default() { return {1, 1, 1, 6}; }
};

struct ChernData {
  Rational ch0;    // rank
  Rational ch1h2;  // ch1 . H^2
  Rational ch2h;   // ch2 . H
  Rational ch3;

  friend ChernData operator+(const ChernData& a, const ChernData& b) {
    return {a.ch0 + b.ch0, a.ch1h2 + b.ch1h2, a.ch2h + b.ch2h, a.ch3 + b.ch3};
  }
  friend ChernData operator-(const ChernData& a, const ChernData& b) {
    return {a.ch0 - b.ch0, a.ch1h2 - b.ch1h2, a.ch2h - b.ch2h, a.ch3 - b.ch3};
  }
  friend bool operator==(const ChernData& a, const ChernData& b) = default;
};

// The (ch0, ch1.H^2, ch2.H) part of a class; ch3 plays no role in the wall
// geometry and is left undetermined for enumerated candidates.
struct ClassTruncation {
  Rational ch0;
  Rational ch1h2;
  Rational ch2h;

  bool is_zero() const { return ch0.is_zero() && ch1h2.is_zero() && ch2h.is_zero(); }

  friend ClassTruncation operator-(const ClassTruncation& a, const ClassTruncation& b) {
    return {a.ch0 - b.ch0, a.ch1h2 - b.ch1h2, a.ch2h - b.ch2h};
  }
  friend bool operator==(const ClassTruncation& a, const ClassTruncation& b) = default;
  friend std::strong_ordering operator<=>(const ClassTruncation& a,
                                          const ClassTruncation& b) = default;
};

inline ClassTruncation truncation(const ChernData& ch) { return {ch.ch0, ch.ch1h2, ch.ch2h}; }
inline ChernData with_ch3(const ClassTruncation& t, Rational ch3 = Rational(0)) {
  return {t.ch0, t.ch1h2, t.ch2h, std::move(ch3)};
}

// A weak stability parameter: a point of U = { w > b^2/2 }, strictly open.
struct StabilityPoint {
  Rational b;
  Rational w;

  StabilityPoint(Rational b_, Rational w_) : b(std::move(b_)), w(std::move(w_)) {
    if (!(w > b * b / 2))
      throw std::invalid_argument("StabilityPoint: (b,w) outside U (need w > b^2/2)");
  }
};

// Image of the projection map: finite point (ch1H2/ch0H3, ch2H/ch0H3) for
// nonzero rank, else a direction (ch1H2, ch2H) up to positive scaling.
class ExtendedPoint {
 public:
  static ExtendedPoint finite(Rational x, Rational y) {
    ExtendedPoint p;
    p.finite_ = true;
    p.x_ = std::move(x);
    p.y_ = std::move(y);
    return p;
  }
  static ExtendedPoint at_infinity(Rational u, Rational v) {
    if (u.is_zero() && v.is_zero())
      throw std::invalid_argument("ExtendedPoint: zero direction");
    // canonical representative under positive scaling
    const Rational scale = u.is_zero() ? v.abs() : u.abs();
    ExtendedPoint p;
    p.finite_ = false;
    p.x_ = u / scale;
    p.y_ = v / scale;
    return p;
  }

  bool is_finite() const { return finite_; }
  const Rational& x() const { return require(finite_), x_; }
  const Rational& y() const { return require(finite_), y_; }
  const Rational& dir_u() const { return require(!finite_), x_; }
  const Rational& dir_v() const { return require(!finite_), y_; }

  friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) = default;

 private:
  static void require(bool ok) {
    if (!ok) throw std::logic_error("ExtendedPoint: wrong accessor for this kind");
  }
  bool finite_ = true;
  Rational x_;
  Rational y_;
};

// true iff every component lies in its declared lattice.
bool validate_lattice(const ChernData& ch, const LatticeSpec& spec);
bool validate_lattice(const ClassTruncation& t, const LatticeSpec& spec);

// ch(E) e^{-bH} in reduced coordinates. twist(twist(ch,b),b') == twist(ch,b+b').
ChernData twist(const ChernData& ch, const Rational& b, const Rational& h3);

// Slope ch1.H^2 / (ch0.H^3); +infinity for rank zero.
SlopeValue mu_h(const ChernData& ch, const Rational& h3);

// Tilt slope (ch2.H - w ch0 H^3) / (ch1.H^2 - b ch0 H^3); +infinity when the
// denominator vanishes.
SlopeValue nu(const ChernData& ch, const StabilityPoint& pt, const Rational& h3);
SlopeValue nu(const ClassTruncation& t, const StabilityPoint& pt, const Rational& h3);

// The unrescaled slope family; requires w != 0.
SlopeValue nu_unscaled(const ChernData& ch, const Rational& b, const Rational& w,
                       const Rational& h3);

// Requires a nonzero truncation; rank-zero classes project to infinity.
ExtendedPoint projection(const ChernData& ch, const Rational& h3);
ExtendedPoint projection(const ClassTruncation& t, const Rational& h3);

// (ch1.H^2)^2 - 2 (ch0.H^3)(ch2.H); nonnegative on semistable classes.
Rational discriminant(const ChernData& ch, const Rational& h3);
Rational discriminant(const ClassTruncation& t, const Rational& h3);

// Class of the line bundle O(kH): (1, kH^3, k^2 H^3/2, k^3 H^3/6).
ChernData line_bundle_class(long long k, const Rational& h3);

}  // namespace tiltwall
