#include "padicert/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "padicert/error.hpp"
#include "padicert/mpoly.hpp"

namespace padicert {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_rational(const std::vector<Rational>& coefficients) {
  Integer den = 1;
  for (const auto& c : coefficients) den = padicert::lcm(den, c.get_den());
  std::vector<Integer> out;
  out.reserve(coefficients.size());
  for (const auto& c : coefficients) out.push_back(c.get_num() * (den / c.get_den()));
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[') {
    const std::size_t close = text.find(']', i);
    if (close == std::string_view::npos) throw ParseError("expected ']'", text.size());
    for (std::size_t k = close + 1; k < text.size(); ++k) {
      if (!std::isspace(static_cast<unsigned char>(text[k]))) throw ParseError("trailing characters", k);
    }
    std::vector<Integer> coeffs;
    std::size_t start = i + 1;
    for (std::size_t k = start; k <= close; ++k) {
      if (k == close || text[k] == ',') {
        std::string_view item = text.substr(start, k - start);
        const bool blank = std::all_of(item.begin(), item.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        if (blank) {
          if (k == close && coeffs.empty()) break;  // "[]"
          throw ParseError("empty coefficient", start);
        }
        Rational r;
        try {
          r = parse_rational(item);
        } catch (const ParseError& e) {
          throw ParseError("bad coefficient", start + e.position());
        }
        if (r.get_den() != 1) throw ParseError("coefficient list entries must be integers", start);
        coeffs.push_back(r.get_num());
        start = k + 1;
      }
    }
    return IntPolynomial(std::move(coeffs));
  }
  const MPoly p = MPoly::parse(text);
  if (p.nvars() != 1) throw ParseError("expected a polynomial in x only", 0);
  return from_rational(p.univariate_coefficients());
}

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) throw InvalidArgument("primitive part of the zero polynomial");
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c / g);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<Integer> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<Integer> out(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(out));
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> out;
  for (const auto& c : coeffs_) out.push_back(-c);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& a) {
  std::vector<Integer> out;
  for (const auto& x : a.coeffs_) out.push_back(c * x);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& g) const {
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * g + constant(*it);
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer a = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0 || a != 1) out += a.get_str();
    if (i > 0) out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string IntPolynomial::to_list_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += coeffs_[i].get_str();
  }
  return out + "]";
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const long db = b.degree();
  std::vector<Integer> q(a.degree() - db + 1, 0);
  for (long k = a.degree() - db; k >= 0; --k) {
    Integer& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc.back().get_mpz_t())) return std::nullopt;
    const Integer factor = top / bc.back();
    q[k] = factor;
    for (long j = 0; j <= db; ++j) rem[k + j] -= factor * bc[j];
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DivisionByZero("pseudo-remainder by zero");
  std::vector<Integer> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const long db = b.degree();
  const Integer& lb = bc.back();
  long da = a.degree();
  if (da < db) return a;
  long steps = da - db + 1;
  while (da >= db && !rem.empty()) {
    const Integer top = rem[da];
    for (auto& r : rem) r *= lb;
    for (long j = 0; j <= db; ++j) rem[da - db + j] -= top * bc[j];
    --steps;
    rem.resize(da);
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    da = static_cast<long>(rem.size()) - 1;
  }
  // Remaining multiplications keep the lc(b)^(deg a - deg b + 1) normalization.
  if (steps > 0) {
    const Integer scale = padicert::pow(lb, static_cast<unsigned long>(steps));
    for (auto& r : rem) r *= scale;
  }
  return IntPolynomial(std::move(rem));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPolynomial u = a.primitive_part();
  IntPolynomial v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.is_zero() ? r : r.primitive_part();
  }
  return u.primitive_part();
}

IntPolynomial lcm(const IntPolynomial& a, const IntPolynomial& b) {
  const IntPolynomial g = gcd(a, b);
  const IntPolynomial prod = a.primitive_part() * b.primitive_part();
  return exact_quotient(prod, g).value().primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& f) {
  const IntPolynomial p = f.primitive_part();
  if (p.degree() < 1) return p;
  const IntPolynomial g = gcd(p, p.derivative());
  return exact_quotient(p, g).value().primitive_part();
}

std::optional<IntPolynomial> power_of_x_mod(unsigned long e, const IntPolynomial& f) {
  if (f.degree() < 1 || abs(f.leading()) != 1) return std::nullopt;
  const long n = f.degree();
  const auto& fc = f.coefficients();
  const Integer lc = f.leading();
  auto reduce = [&](std::vector<Integer> v) {
    for (long k = static_cast<long>(v.size()) - 1; k >= n; --k) {
      if (v[k] == 0) continue;
      const Integer factor = v[k] * lc;  // lc is +-1, so 1/lc == lc
      for (long j = 0; j <= n; ++j) v[k - n + j] -= factor * fc[j];
    }
    v.resize(std::min<std::size_t>(v.size(), n));
    return IntPolynomial(std::move(v));
  };
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = reduce(IntPolynomial::x().coefficients());
  while (e) {
    if (e & 1) result = reduce((result * base).coefficients());
    e >>= 1;
    if (e) base = reduce((base * base).coefficients());
  }
  return result;
}

}  // namespace padicert
