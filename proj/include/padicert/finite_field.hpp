#pragma once

// Dense polynomials over F_p for small p (p < 2^31), used for
// irreducibility evidence.

#include <cstdint>
#include <utility>
#include <vector>

#include "padicert/polynomial.hpp"

namespace padicert::fp {

using Poly = std::vector<std::uint64_t>;  // ascending, no trailing zeros

Poly reduce(const IntPolynomial& f, std::uint64_t p);
long degree(const Poly& f);
Poly monic(Poly f, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly mod(Poly a, const Poly& m, std::uint64_t p);
Poly div(Poly a, const Poly& m, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p);
Poly derivative(const Poly& f, std::uint64_t p);

/// Degree multiset of the irreducible factors of a squarefree f, as
/// (degree, count) pairs from distinct-degree factorization.
std::vector<std::pair<unsigned, unsigned>> distinct_degree_factorization(const Poly& f, std::uint64_t p);

}  // namespace padicert::fp
