#include <doctest.h>

#include <random>

#include "padicert/algebraic.hpp"
#include "padicert/error.hpp"
#include "padicert/mpoly.hpp"

using namespace padicert;

namespace {

// x^n - 1
IntPolynomial x_pow_minus_one(unsigned long n) { return IntPolynomial::monomial(1, n) - IntPolynomial::constant(1); }

// Oracle for Phi_d: repeated exact division of x^d - 1 by Phi_e for proper divisors e.
IntPolynomial cyclotomic_by_division(unsigned long d) {
  IntPolynomial f = x_pow_minus_one(d);
  for (unsigned long e = 1; e < d; ++e) {
    if (d % e == 0) f = *exact_quotient(f, cyclotomic_by_division(e));
  }
  return f;
}

}  // namespace

TEST_CASE("parsing both formats") {
  CHECK(IntPolynomial::parse("[5, -6, 5]") == IntPolynomial{5, -6, 5});
  CHECK(IntPolynomial::parse("5x^2 - 6x + 5") == IntPolynomial{5, -6, 5});
  CHECK(IntPolynomial::parse("x^2 - x + 1") == IntPolynomial{1, -1, 1});
  CHECK(IntPolynomial::parse("x^2/2 + 1/3") == IntPolynomial{2, 0, 3});
  CHECK(IntPolynomial::parse("(x+1)^3") == IntPolynomial{1, 3, 3, 1});
  CHECK_THROWS_AS(IntPolynomial::parse("[1, 2"), ParseError);
  CHECK_THROWS_AS(IntPolynomial::parse("x^2 + * 3"), ParseError);
  CHECK(IntPolynomial{1, -1, -1}.to_list_string() == "[1, -1, -1]");
}

TEST_CASE("primitive part") {
  CHECK(IntPolynomial{25, -30, 25}.primitive_part() == IntPolynomial{5, -6, 5});
  CHECK(IntPolynomial{-2, 1}.primitive_part() == IntPolynomial{-2, 1});
  CHECK(IntPolynomial{0, -2}.primitive_part() == IntPolynomial{0, 1});
}

TEST_CASE("gcd, quotient, squarefree") {
  const IntPolynomial a{-1, 0, 1};  // x^2 - 1
  const IntPolynomial b{1, 2, 1};   // (x + 1)^2
  CHECK(gcd(a, b) == IntPolynomial{1, 1});
  CHECK(exact_quotient(a, IntPolynomial{1, 1}) == IntPolynomial{-1, 1});
  CHECK_FALSE(exact_quotient(a, IntPolynomial{1, 2}).has_value());
  CHECK(is_squarefree(a));
  CHECK_FALSE(is_squarefree(IntPolynomial{1, -2, 1}));
  CHECK(is_squarefree(IntPolynomial{1, 0, -1, 0, 1}));
  CHECK(squarefree_part(b * a) == IntPolynomial{-1, 0, 1});
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic(6) == IntPolynomial{1, -1, 1});
  CHECK(cyclotomic(12) == IntPolynomial{1, 0, -1, 0, 1});
  for (unsigned long d = 1; d <= 60; ++d) {
    CHECK(cyclotomic(d) == cyclotomic_by_division(d));
    CHECK(cyclotomic(d).degree() == static_cast<long>(euler_phi(d)));
  }
}

TEST_CASE("root_of_unity_order") {
  CHECK(root_of_unity_order(IntPolynomial{1, -1, 1}) == 6ul);
  CHECK_FALSE(root_of_unity_order(IntPolynomial{5, -6, 5}).has_value());
  CHECK(root_of_unity_order(IntPolynomial{1, 1, 1} * IntPolynomial{1, 1}) == 6ul);
  CHECK_THROWS_AS(root_of_unity_order(IntPolynomial{1, 2, 1}), NotSquarefree);
  for (unsigned long d = 1; d <= 60; ++d) {
    if (euler_phi(d) > 16) continue;
    const auto n = root_of_unity_order(cyclotomic(d));
    REQUIRE(n.has_value());
    CHECK(*n == d);
    CHECK(exact_quotient(x_pow_minus_one(*n), cyclotomic(d)).has_value());
  }
  // Products of cyclotomics: the order is the lcm and f divides x^n - 1.
  std::mt19937 rng(3);
  std::uniform_int_distribution<unsigned long> pick(1, 30);
  for (int t = 0; t < 40; ++t) {
    const unsigned long d1 = pick(rng), d2 = pick(rng);
    if (d1 == d2) continue;
    const IntPolynomial f = cyclotomic(d1) * cyclotomic(d2);
    const auto n = root_of_unity_order(f);
    REQUIRE(n.has_value());
    CHECK(*n == lcm(Integer(d1), Integer(d2)));
    CHECK(exact_quotient(x_pow_minus_one(*n), f).has_value());
  }
  // A non-cyclotomic factor spoils it.
  CHECK_FALSE(root_of_unity_order(cyclotomic(5) * IntPolynomial{-1, -1, 1}).has_value());
}

TEST_CASE("algebraic integers") {
  CHECK(is_algebraic_integer(IntPolynomial{-1, -1, 1}));
  CHECK_FALSE(is_algebraic_integer(IntPolynomial{5, -6, 5}));
  CHECK_FALSE(is_algebraic_integer(IntPolynomial{-1, 2}));
  CHECK(is_algebraic_integer(IntPolynomial{3, 3, 3}) == is_algebraic_integer(IntPolynomial{1, 1, 1}));
}

TEST_CASE("irreducibility is never claimed for reducible input") {
  CHECK(check_irreducible(IntPolynomial{-2, 1}).status == Irreducibility::Proven);
  CHECK(check_irreducible(IntPolynomial{-1, -1, 1}).status == Irreducibility::Proven);
  CHECK(check_irreducible(IntPolynomial{5, -6, 5}).status == Irreducibility::Proven);
  CHECK(check_irreducible(IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}).status == Irreducibility::Proven);
  CHECK(check_irreducible(IntPolynomial{2, 3, 1}).status == Irreducibility::Unknown);
  // x^4 + 1 is irreducible over Q but splits modulo every prime, so degree
  // patterns cannot prove it and Unknown is the sound answer.
  CHECK(check_irreducible(IntPolynomial{1, 0, 0, 0, 1}).status == Irreducibility::Unknown);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int t = 0; t < 150; ++t) {
    IntPolynomial a{c(rng), c(rng), 1}, b{c(rng), 1};
    const IntPolynomial f = a * b;
    if (!is_squarefree(f) || f[0] == 0) continue;
    CHECK(check_irreducible(f).status == Irreducibility::Unknown);
  }
}

TEST_CASE("multivariate parsing and evaluation") {
  const MPoly f = MPoly::parse("x*y - 1/2*z^2 + 3");
  CHECK(f.nvars() == 3);
  const std::vector<Rational> pt{2, 5, 2};
  CHECK(f.evaluate(std::span<const Rational>(pt)) == 11);
  CHECK(MPoly::parse("x1^2 + x3").nvars() == 3);
  CHECK(MPoly::parse(f.to_string(), 3) == f);
  CHECK(f.min_valuation(2) == -1);
  CHECK_FALSE(f.is_p_integral(2));
  CHECK(f.is_p_integral(3));
  CHECK_THROWS_AS(MPoly::parse("x + (y"), ParseError);
}
