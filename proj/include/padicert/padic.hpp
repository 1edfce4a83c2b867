#pragma once

// p-adic numbers to tracked finite precision.
//
// A nonzero value is p^v * u with u a unit known modulo p^N; N counts the unit
// digits that are tracked. Zero is a separate exact variant with valuation
// INF. Values are immutable.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padicert/arith.hpp"

namespace padicert {

/// The exact absolute value p^(-exponent), or the zero norm.
/// Exponents are rational so that Newton polygon slopes can be expressed.
class PPower {
 public:
  PPower(Integer prime, Rational exponent);
  static PPower zero(Integer prime);

  const Integer& prime() const noexcept { return prime_; }
  bool is_zero() const noexcept { return zero_; }
  /// Valuation-style exponent: the value is p^(-exponent). Meaningless for zero.
  const Rational& exponent() const noexcept { return exponent_; }

  /// Exact rational value when the exponent is an integer (or for zero).
  std::optional<Rational> to_rational() const;

  /// Rational enclosure of the value with width at most 2^-bits relative to p^(-floor).
  std::pair<Rational, Rational> enclose(unsigned bits) const;

  friend PPower operator*(const PPower& a, const PPower& b);
  friend bool operator==(const PPower& a, const PPower& b);
  friend std::partial_ordering operator<=>(const PPower& a, const PPower& b);

  /// "p^e" with e = -exponent, i.e. the value written as a power of p.
  std::string to_string() const;

 private:
  Integer prime_;
  Rational exponent_;
  bool zero_ = false;
};

class PAdicApprox {
 public:
  static PAdicApprox zero(const Integer& prime);

  /// r reduced to N unit digits. The prime is validated.
  static PAdicApprox from_rational(const Rational& r, const Integer& prime, long precision);

  /// Digits d_0..d_{N-1} of the unit part, least significant first; d_0 != 0.
  static PAdicApprox from_digits(const Integer& prime, long valuation, const std::vector<unsigned long>& digits);

  /// Parses `p^v * (d0,...,dN-1) mod p^(v+N)` or a bare `0`; the prime is
  /// given separately when the literal is `0`.
  static PAdicApprox parse(std::string_view text, std::optional<Integer> prime_for_zero = std::nullopt);

  const Integer& prime() const noexcept { return prime_; }
  bool is_zero() const noexcept { return zero_; }
  /// nullopt stands for INF.
  std::optional<long> valuation() const;
  /// Number of tracked unit digits; 0 for the exact zero.
  long precision() const noexcept { return precision_; }
  /// v + N: the value is known modulo p^(v+N).
  std::optional<long> absolute_precision() const;
  /// Sum of d_i p^i, in [0, p^N).
  const Integer& unit() const noexcept { return unit_; }
  std::vector<unsigned long> digits() const;

  /// p^v * unit as a rational; exact representative of the residue class.
  Rational lift() const;

  PPower norm() const;

  PAdicApprox operator-() const;
  PAdicApprox inverse() const;

  friend PAdicApprox operator+(const PAdicApprox& x, const PAdicApprox& y);
  friend PAdicApprox operator-(const PAdicApprox& x, const PAdicApprox& y);
  friend PAdicApprox operator*(const PAdicApprox& x, const PAdicApprox& y);
  friend PAdicApprox operator/(const PAdicApprox& x, const PAdicApprox& y);

  /// Agreement modulo p^min(absolute precisions). Exact zero agrees only with itself.
  bool congruent(const PAdicApprox& other) const;

  /// Same prime, valuation, precision and digits.
  friend bool operator==(const PAdicApprox& x, const PAdicApprox& y);

  std::string to_string() const;

 private:
  PAdicApprox(Integer prime, long valuation, long precision, Integer unit);

  void require_same_prime(const PAdicApprox& other) const;

  Integer prime_;
  long valuation_ = 0;
  long precision_ = 0;
  Integer unit_;
  bool zero_ = false;
};

}  // namespace padicert
