#include "padicert/arith.hpp"

#include <algorithm>
#include <cctype>

#include "padicert/error.hpp"

namespace padicert {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set below 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) {
    throw InvalidArgument("primality of integers above 2^64 is not decidable here: " + n.get_str());
  }
  std::uint64_t value = 0;
  mpz_export(&value, nullptr, -1, sizeof(value), 0, 0, n.get_mpz_t());
  return is_prime(value);
}

void require_prime(const Integer& p) {
  if (!is_prime(p)) throw InvalidArgument("not a prime: " + p.get_str());
}

long valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw InvalidArgument("valuation of zero");
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::optional<long> valuation(const Rational& r, const Integer& p) {
  if (r == 0) return std::nullopt;
  return valuation(r.get_num(), p) - valuation(r.get_den(), p);
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent >= 0) {
    Rational r(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
    r.canonicalize();
    return r;
  }
  if (base == 0) throw DivisionByZero("zero to a negative power");
  Rational r(pow(base.get_den(), -exponent), pow(base.get_num(), -exponent));
  r.canonicalize();
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::vector<std::pair<Integer, unsigned>> factor(Integer n) {
  std::vector<std::pair<Integer, unsigned>> out;
  n = abs(n);
  if (n < 2) return out;
  for (Integer d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<Integer> smallest_prime_factor(const Integer& n, unsigned long bound) {
  Integer m = abs(n);
  if (m < 2) return std::nullopt;
  for (unsigned long d = 2; d <= bound; ++d) {
    if (Integer(d) * d > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) return Integer(d);
  }
  if (mpz_sizeinbase(m.get_mpz_t(), 2) <= 64 && is_prime(m)) return m;
  return std::nullopt;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int moebius(unsigned long n) {
  int sign = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::pair<Rational, Rational> root_bounds(const Rational& q, unsigned m, unsigned bits) {
  if (q < 0) throw InvalidArgument("root of a negative rational");
  if (m == 0) throw InvalidArgument("zeroth root");
  if (q == 0) return {0, 0};
  // q^(1/m) = (a b^(m-1))^(1/m) / b
  const Integer& a = q.get_num();
  const Integer& b = q.get_den();
  Integer scaled = a * pow(b, m - 1);
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(m) * bits);
  Integer s;
  const bool exact = mpz_root(s.get_mpz_t(), scaled.get_mpz_t(), m) != 0;
  Integer denom = b;
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), bits);
  Rational lo(s, denom);
  lo.canonicalize();
  if (exact) return {lo, lo};
  Rational hi(s + 1, denom);
  hi.canonicalize();
  return {lo, hi};
}

Rational round_dyadic(const Rational& q, unsigned bits) {
  Integer scaled_num = q.get_num();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), bits + 1);
  Integer twice;
  mpz_fdiv_q(twice.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
  // floor(2x) -> floor(x + 1/2) = floor((floor(2x) + 1) / 2)
  Integer k;
  Integer t = twice + 1;
  mpz_fdiv_q_2exp(k.get_mpz_t(), t.get_mpz_t(), 1);
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  Rational r(k, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_decimal(const Rational& q, unsigned digits) {
  const bool negative = q < 0;
  Rational a = abs(q);
  Integer whole = a.get_num() / a.get_den();
  Integer rem = a.get_num() % a.get_den();
  std::string out = (negative ? "-" : "") + whole.get_str();
  if (digits == 0) return out;
  Integer frac = rem * pow(Integer(10), digits) / a.get_den();
  std::string fs = frac.get_str();
  out += "." + std::string(digits - fs.size(), '0') + fs;
  return out;
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](bool allow_sign) {
    skip();
    std::size_t start = i;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_start) throw ParseError("expected integer", i);
    std::string s(text.substr(start, i - start));
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return Integer(s);
  };
  Integer num = read_int(true);
  Integer den = 1;
  skip();
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = read_int(false);
    if (den == 0) throw ParseError("zero denominator", i);
  }
  skip();
  if (i != text.size()) throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", i);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace padicert
