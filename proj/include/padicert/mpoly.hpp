#pragma once

// Sparse multivariate polynomials with rational coefficients, plus the text
// parser shared by every polynomial input.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "padicert/arith.hpp"

namespace padicert {

using Monomial = std::vector<unsigned>;

class MPoly {
 public:
  explicit MPoly(std::size_t nvars = 1) : nvars_(nvars) {}

  static MPoly constant(const Rational& c, std::size_t nvars);
  static MPoly variable(std::size_t index, std::size_t nvars);

  /// Variables are `x1..xn`; `x`, `y`, `z`, `w` are accepted as the first four.
  /// Coefficients may be rationals, e.g. `x1^2 - 3/2*x1*x2 + 1`.
  /// The variable count is max(used index + 1, min_vars).
  static MPoly parse(std::string_view text, std::size_t min_vars = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned total_degree() const;
  /// Degree in a single variable.
  unsigned degree_in(std::size_t var) const;

  /// Same polynomial viewed in more variables.
  MPoly extended(std::size_t nvars) const;

  Rational evaluate(std::span<const Rational> point) const;
  Rational evaluate(std::span<const Integer> point) const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& c, const MPoly& a);
  friend bool operator==(const MPoly& a, const MPoly& b) = default;
  MPoly pow(unsigned e) const;

  /// Substitutes subs[i] for variable i; all substitutes share one variable count.
  MPoly compose(const std::vector<MPoly>& subs) const;

  MPoly derivative(std::size_t var) const;

  /// Minimum p-adic valuation over coefficients; nullopt for zero.
  std::optional<long> min_valuation(const Integer& p) const;
  bool is_p_integral(const Integer& p) const;

  /// Coefficients as a dense ascending vector; requires nvars() == 1.
  std::vector<Rational> univariate_coefficients() const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::size_t nvars_;
  std::map<Monomial, Rational> terms_;
};

/// Determinant of a square matrix of polynomials (cofactor expansion).
MPoly determinant(const std::vector<std::vector<MPoly>>& m);

}  // namespace padicert
