#pragma once

// Exact integer and rational helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace padicert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Exact primality for primes that fit in 64 bits. Larger inputs are rejected
/// with InvalidArgument since no deterministic test is available for them.
bool is_prime(const Integer& n);

/// Throws InvalidArgument unless p is a prime.
void require_prime(const Integer& p);

/// Exponent of p in n; n must be nonzero.
long valuation(const Integer& n, const Integer& p);

/// v_p(num) - v_p(den); nullopt for zero.
std::optional<long> valuation(const Rational& r, const Integer& p);

Integer pow(const Integer& base, unsigned long exponent);

/// base^exponent for any integer exponent; base must be nonzero when exponent < 0.
Rational pow(const Rational& base, long exponent);

Integer lcm(const Integer& a, const Integer& b);

/// Prime factorization by trial division; factors ascending with multiplicity.
std::vector<std::pair<Integer, unsigned>> factor(Integer n);

/// Smallest prime factor found by trial division up to `bound`; a remaining
/// cofactor is accepted when it is itself a 64-bit prime.
std::optional<Integer> smallest_prime_factor(const Integer& n, unsigned long bound);

unsigned long euler_phi(unsigned long n);
int moebius(unsigned long n);

/// Rational enclosure [lo, hi] of q^(1/m) (q >= 0) with hi - lo <= 2^-bits.
std::pair<Rational, Rational> root_bounds(const Rational& q, unsigned m, unsigned bits);

inline Rational sqrt_lower(const Rational& q, unsigned bits = 64) { return root_bounds(q, 2, bits).first; }
inline Rational sqrt_upper(const Rational& q, unsigned bits = 64) { return root_bounds(q, 2, bits).second; }

/// Nearest dyadic rational k/2^bits (ties toward -inf).
Rational round_dyadic(const Rational& q, unsigned bits);

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Decimal approximation with `digits` fractional digits (truncated toward zero).
std::string to_decimal(const Rational& q, unsigned digits = 12);

/// Parses "a", "-a", "a/b". Surrounding whitespace is allowed.
Rational parse_rational(std::string_view text);

}  // namespace padicert
