#pragma once

// Dense univariate polynomials with exact integer coefficients.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padicert/arith.hpp"

namespace padicert {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  /// Coefficients c_0..c_n, ascending. Trailing zeros are dropped.
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t degree);
  static IntPolynomial x() { return monomial(1, 1); }
  /// Clears denominators of rational coefficients (multiplies by their lcm).
  static IntPolynomial from_rational(const std::vector<Rational>& coefficients);

  /// Accepts `[c0, c1, ..., cn]` (ascending) or a human form such as `x^2 - x + 1`.
  static IntPolynomial parse(std::string_view text);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  /// Zero beyond the degree.
  Integer operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const;

  Integer content() const;
  /// Content 1 and positive leading coefficient.
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;
  /// x^n f(1/x)
  IntPolynomial reversed() const;

  Rational evaluate(const Rational& x) const;
  Integer evaluate(const Integer& x) const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  IntPolynomial pow(unsigned e) const;

  /// f(g(x))
  IntPolynomial compose(const IntPolynomial& g) const;

  std::string to_string() const;
  /// `[c0, c1, ...]`
  std::string to_list_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// q with a == b*q over Z, or nullopt when b does not divide a in Z[x].
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive lcm with positive leading coefficient.
IntPolynomial lcm(const IntPolynomial& a, const IntPolynomial& b);

/// Product of the distinct irreducible factors (primitive).
IntPolynomial squarefree_part(const IntPolynomial& f);

/// Remainder of x^e modulo a monic-up-to-unit f; returns nullopt if f is not
/// monic up to sign. Used to test x^e == 1 in Z[x]/(f).
std::optional<IntPolynomial> power_of_x_mod(unsigned long e, const IntPolynomial& f);

}  // namespace padicert
