#include "padicert/finite_field.hpp"

#include "padicert/error.hpp"

namespace padicert::fp {

namespace {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime: a^(p-2)
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

Poly reduce(const IntPolynomial& f, std::uint64_t p) {
  Poly out;
  for (const auto& c : f.coefficients()) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    out.push_back(r.get_ui());
  }
  trim(out);
  return out;
}

long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }

Poly monic(Poly f, std::uint64_t p) {
  if (f.empty()) return f;
  const std::uint64_t inv = inv_mod(f.back(), p);
  for (auto& c : f) c = c * inv % p;
  return f;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + p - b[i]) % p;
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

namespace {

// Long division; returns quotient and leaves the remainder in a.
Poly divmod(Poly& a, const Poly& m, std::uint64_t p) {
  if (m.empty()) throw DivisionByZero("F_p polynomial division by zero");
  const long dm = degree(m);
  if (degree(a) < dm) return {};
  const std::uint64_t inv = inv_mod(m.back(), p);
  Poly q(a.size() - m.size() + 1, 0);
  for (long k = degree(a) - dm; k >= 0; --k) {
    const std::uint64_t top = a[k + dm] * inv % p;
    q[k] = top;
    if (top == 0) continue;
    for (long j = 0; j <= dm; ++j) a[k + j] = (a[k + j] + p - top * m[j] % p) % p;
  }
  trim(a);
  trim(q);
  return q;
}

}  // namespace

Poly mod(Poly a, const Poly& m, std::uint64_t p) {
  divmod(a, m, p);
  return a;
}

Poly div(Poly a, const Poly& m, std::uint64_t p) { return divmod(a, m, p); }

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result = mod(Poly{1}, m, p);
  base = mod(std::move(base), m, p);
  while (e) {
    if (e & 1) result = mod(mul(result, base, p), m, p);
    e >>= 1;
    if (e) base = mod(mul(base, base, p), m, p);
  }
  return result;
}

Poly derivative(const Poly& f, std::uint64_t p) {
  Poly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * (i % p) % p);
  trim(out);
  return out;
}

std::vector<std::pair<unsigned, unsigned>> distinct_degree_factorization(const Poly& f, std::uint64_t p) {
  std::vector<std::pair<unsigned, unsigned>> out;
  Poly g = monic(f, p);
  const Poly x{0, 1};
  Poly h = mod(x, g, p);
  for (unsigned i = 1; degree(g) >= 2 * static_cast<long>(i); ++i) {
    h = powmod(h, p, g, p);
    Poly d = gcd(g, sub(h, x, p), p);
    if (degree(d) > 0) {
      out.emplace_back(i, static_cast<unsigned>(degree(d)) / i);
      g = div(g, d, p);
      h = mod(h, g, p);
    }
  }
  if (degree(g) > 0) out.emplace_back(static_cast<unsigned>(degree(g)), 1);
  return out;
}

}  // namespace padicert::fp
