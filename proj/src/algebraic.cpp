#include "padicert/algebraic.hpp"

#include <bitset>
#include <map>
#include <mutex>

#include "padicert/error.hpp"
#include "padicert/finite_field.hpp"
#include "padicert/roots.hpp"

namespace padicert {

bool is_squarefree(const IntPolynomial& f) {
  if (f.is_zero()) throw InvalidArgument("squarefree test on the zero polynomial");
  if (f.degree() < 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

namespace {

IntPolynomial x_power_minus_one(unsigned long e) {
  return IntPolynomial::monomial(1, e) - IntPolynomial::constant(1);
}

IntPolynomial compute_cyclotomic(unsigned long d) {
  // Phi_d = prod_{e | d} (x^e - 1)^mu(d/e)
  IntPolynomial num = IntPolynomial::constant(1);
  IntPolynomial den = IntPolynomial::constant(1);
  for (unsigned long e = 1; e <= d; ++e) {
    if (d % e) continue;
    const int mu = moebius(d / e);
    if (mu == 1) num = num * x_power_minus_one(e);
    if (mu == -1) den = den * x_power_minus_one(e);
  }
  return exact_quotient(num, den).value();
}

}  // namespace

IntPolynomial cyclotomic(unsigned long d) {
  if (d == 0) throw InvalidArgument("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<unsigned long, IntPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  IntPolynomial phi = compute_cyclotomic(d);
  std::lock_guard lock(mutex);
  return cache.emplace(d, std::move(phi)).first->second;
}

CyclotomicSplit split_cyclotomic(const IntPolynomial& f) {
  if (f.is_zero()) throw InvalidArgument("cyclotomic split of the zero polynomial");
  if (!is_squarefree(f)) throw NotSquarefree("cyclotomic split needs a squarefree polynomial");
  CyclotomicSplit out{{}, f.primitive_part()};
  const unsigned long n = static_cast<unsigned long>(f.degree());
  // phi(d) >= sqrt(d/2), so every d with phi(d) <= n satisfies d <= 2 n^2.
  const unsigned long limit = 2 * n * n;
  for (unsigned long d = 1; d <= limit && out.cofactor.degree() > 0; ++d) {
    const unsigned long phi = euler_phi(d);
    if (phi > static_cast<unsigned long>(out.cofactor.degree())) continue;
    if (auto q = exact_quotient(out.cofactor, cyclotomic(d))) {
      out.cofactor = q->primitive_part();
      out.indices.push_back(d);
    }
  }
  return out;
}

std::optional<unsigned long> root_of_unity_order(const IntPolynomial& f) {
  if (f.is_zero() || f.degree() < 1) throw InvalidArgument("root_of_unity_order needs a nonconstant polynomial");
  const CyclotomicSplit split = split_cyclotomic(f);
  if (split.cofactor.degree() != 0) return std::nullopt;
  Integer order = 1;
  for (unsigned long d : split.indices) order = lcm(order, Integer(d));
  return order.get_ui();
}

bool is_algebraic_integer(const IntPolynomial& f) {
  const IntPolynomial p = f.primitive_part();
  return p.leading() == 1;
}

namespace {

bool eisenstein(const IntPolynomial& f, const Integer& p) {
  const long n = f.degree();
  if (mpz_divisible_p(f.leading().get_mpz_t(), p.get_mpz_t())) return false;
  for (long i = 0; i < n; ++i) {
    if (!mpz_divisible_p(f[i].get_mpz_t(), p.get_mpz_t())) return false;
  }
  const Integer p2 = p * p;
  return !mpz_divisible_p(f[0].get_mpz_t(), p2.get_mpz_t());
}

std::string eisenstein_prime(const IntPolynomial& f) {
  Integer g = 0;
  for (long i = 0; i < f.degree(); ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f[i].get_mpz_t());
  if (g == 0) return {};
  for (const auto& [p, e] : factor(g)) {
    if (p > 1000000) break;
    if (eisenstein(f, p)) return p.get_str();
  }
  return {};
}

}  // namespace

IrreducibilityReport check_irreducible(const IntPolynomial& f, unsigned prime_count) {
  if (f.is_zero() || f.degree() < 1) return {Irreducibility::Unknown, "constant polynomial"};
  const IntPolynomial g = f.primitive_part();
  const long n = g.degree();
  if (n == 1) return {Irreducibility::Proven, "degree 1"};
  if (g[0] == 0) return {Irreducibility::Unknown, "divisible by x"};

  if (auto p = eisenstein_prime(g); !p.empty()) return {Irreducibility::Proven, "Eisenstein at " + p};
  if (auto p = eisenstein_prime(g.reversed()); !p.empty()) {
    return {Irreducibility::Proven, "Eisenstein at " + p + " on the reversed polynomial"};
  }
  if (!is_squarefree(g)) return {Irreducibility::Unknown, "not squarefree"};
  if (n > 256) return {Irreducibility::Unknown, "degree too large for pattern test"};

  // Degrees of rational factors must be subset sums of the factor degrees
  // modulo every good prime.
  std::bitset<257> possible;
  possible.set();
  std::vector<std::string> used;
  unsigned tried = 0;
  for (std::uint64_t p = 2; tried < prime_count && p < 10000; ++p) {
    if (!is_prime(p)) continue;
    if (mpz_divisible_ui_p(g.leading().get_mpz_t(), p)) continue;
    const fp::Poly fbar = fp::reduce(g, p);
    if (fp::degree(fp::gcd(fbar, fp::derivative(fbar, p), p)) > 0) continue;
    ++tried;
    std::bitset<257> sums;
    sums.set(0);
    for (const auto& [deg, count] : fp::distinct_degree_factorization(fbar, p)) {
      for (unsigned c = 0; c < count; ++c) sums |= sums << deg;
    }
    if (sums.count() == 2) return {Irreducibility::Proven, "irreducible mod " + std::to_string(p)};
    possible &= sums;
    used.push_back(std::to_string(p));
    bool only_trivial = true;
    for (long d = 1; d < n; ++d) {
      if (possible.test(d)) only_trivial = false;
    }
    if (only_trivial) {
      std::string primes;
      for (const auto& u : used) primes += (primes.empty() ? "" : ",") + u;
      return {Irreducibility::Proven, "factor degree patterns mod " + primes};
    }
  }
  return {Irreducibility::Unknown, "no criterion applied"};
}

AlgebraicNumberSpec AlgebraicNumberSpec::make(const IntPolynomial& defining_poly, std::optional<ComplexBox> root_selector) {
  AlgebraicNumberSpec spec = unchecked(defining_poly);
  if (check_irreducible(spec.poly_).status == Irreducibility::Proven) spec.status_ = IrreducibilityStatus::Proven;
  if (root_selector) {
    const auto count = count_roots_in_box(spec.poly_, *root_selector);
    if (!count || *count != 1) throw InvalidArgument("root selector does not isolate exactly one root");
    spec.selector_ = root_selector;
  }
  return spec;
}

AlgebraicNumberSpec AlgebraicNumberSpec::unchecked(const IntPolynomial& defining_poly) {
  if (defining_poly.degree() < 1) throw InvalidArgument("an algebraic number needs a nonconstant defining polynomial");
  AlgebraicNumberSpec spec;
  spec.poly_ = defining_poly.primitive_part();
  return spec;
}

}  // namespace padicert
