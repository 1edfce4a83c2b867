#pragma once

// Certified enclosures over exact rationals.

#include <string>

#include "padicert/arith.hpp"

namespace padicert {

/// [lo, hi] with lo <= hi; the enclosed quantity lies inside.
struct RationalInterval {
  Rational lo;
  Rational hi;

  static RationalInterval point(const Rational& q) { return {q, q}; }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool is_exact() const { return lo == hi; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains(const RationalInterval& other) const { return lo <= other.lo && other.hi <= hi; }
  bool overlaps(const RationalInterval& other) const { return lo <= other.hi && other.lo <= hi; }

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  RationalInterval& operator+=(const RationalInterval& b) {
    lo += b.lo;
    hi += b.hi;
    return *this;
  }
  /// Product with a nonnegative interval factor, both intervals nonnegative.
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo * b.lo, a.hi * b.hi};
  }
  friend bool operator==(const RationalInterval& a, const RationalInterval& b) = default;

  std::string to_string() const { return "[" + padicert::to_string(lo) + ", " + padicert::to_string(hi) + "]"; }
};

struct ComplexRational {
  Rational re;
  Rational im;

  Rational norm2() const { return re * re + im * im; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
    const Rational d = b.norm2();
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) = default;
};

/// Axis-aligned closed box in the complex plane.
struct ComplexBox {
  RationalInterval re;
  RationalInterval im;

  Rational width() const { return re.width() > im.width() ? re.width() : im.width(); }
  ComplexRational center() const { return {re.midpoint(), im.midpoint()}; }
  bool contains(const ComplexRational& z) const { return re.contains(z.re) && im.contains(z.im); }
  bool contains(const ComplexBox& b) const { return re.contains(b.re) && im.contains(b.im); }
  bool intersects(const ComplexBox& b) const { return re.overlaps(b.re) && im.overlaps(b.im); }

  /// Exact range of |z|^2 over the box.
  RationalInterval modulus_squared() const;
  /// Rational enclosure of the range of |z| over the box.
  RationalInterval modulus(unsigned bits = 64) const;
  /// Squared Euclidean distance from z to the box (0 inside).
  Rational distance_squared(const ComplexRational& z) const;

  friend bool operator==(const ComplexBox& a, const ComplexBox& b) = default;
  std::string to_string() const { return re.to_string() + " + i" + im.to_string(); }
};

}  // namespace padicert
