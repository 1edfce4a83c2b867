#include "padicert/mpoly.hpp"

#include <algorithm>
#include <cctype>

#include "padicert/error.hpp"

namespace padicert {

MPoly MPoly::constant(const Rational& c, std::size_t nvars) {
  MPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t index, std::size_t nvars) {
  if (index >= nvars) throw InvalidArgument("variable index out of range");
  MPoly p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned MPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned s = 0;
    for (unsigned e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

unsigned MPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

MPoly MPoly::extended(std::size_t nvars) const {
  if (nvars < nvars_) throw InvalidArgument("cannot drop variables");
  MPoly out(nvars);
  for (const auto& [m, c] : terms_) {
    Monomial mm(m);
    mm.resize(nvars, 0);
    out.add_term(mm, c);
  }
  return out;
}

namespace {

template <class T>
Rational evaluate_impl(const std::map<Monomial, Rational>& terms, std::span<const T> point, std::size_t nvars) {
  if (point.size() != nvars) throw InvalidArgument("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [m, c] : terms) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (m[i]) term *= pow(Rational(point[i]), static_cast<long>(m[i]));
    }
    sum += term;
  }
  return sum;
}

}  // namespace

Rational MPoly::evaluate(std::span<const Rational> point) const { return evaluate_impl(terms_, point, nvars_); }
Rational MPoly::evaluate(std::span<const Integer> point) const { return evaluate_impl(terms_, point, nvars_); }

MPoly MPoly::operator-() const {
  MPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  const std::size_t n = std::max(a.nvars_, b.nvars_);
  MPoly out = a.extended(n);
  for (const auto& [m, c] : b.extended(n).terms_) out.add_term(m, c);
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  const std::size_t n = std::max(a.nvars_, b.nvars_);
  const MPoly x = a.extended(n);
  const MPoly y = b.extended(n);
  MPoly out(n);
  for (const auto& [ma, ca] : x.terms_) {
    for (const auto& [mb, cb] : y.terms_) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

MPoly operator*(const Rational& c, const MPoly& a) { return MPoly::constant(c, a.nvars_) * a; }

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(1, nvars_);
  MPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MPoly MPoly::compose(const std::vector<MPoly>& subs) const {
  if (subs.size() != nvars_) throw InvalidArgument("composition needs one substitute per variable");
  const std::size_t n = subs.empty() ? 1 : subs.front().nvars();
  for (const auto& s : subs) {
    if (s.nvars() != n) throw InvalidArgument("substitutes must share a variable count");
  }
  std::vector<std::vector<MPoly>> powers(nvars_);
  MPoly out(n);
  for (const auto& [m, c] : terms_) {
    MPoly term = constant(c, n);
    for (std::size_t i = 0; i < nvars_; ++i) {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(1, n));
      while (cache.size() <= m[i]) cache.push_back(cache.back() * subs[i]);
      if (m[i]) term = term * cache[m[i]];
    }
    out = out + term;
  }
  return out;
}

MPoly MPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw InvalidArgument("variable index out of range");
  MPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial mm(m);
    --mm[var];
    out.add_term(mm, c * m[var]);
  }
  return out;
}

std::optional<long> MPoly::min_valuation(const Integer& p) const {
  std::optional<long> best;
  for (const auto& [m, c] : terms_) {
    const long v = *valuation(c, p);
    if (!best || v < *best) best = v;
  }
  return best;
}

bool MPoly::is_p_integral(const Integer& p) const {
  auto v = min_valuation(p);
  return !v || *v >= 0;
}

std::vector<Rational> MPoly::univariate_coefficients() const {
  if (nvars_ != 1) throw InvalidArgument("polynomial is not univariate");
  std::vector<Rational> out(is_zero() ? 0 : degree_in(0) + 1);
  for (const auto& [m, c] : terms_) out[m[0]] = c;
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first reads naturally.
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    unsigned da = 0, db = 0;
    for (unsigned e : a.first) da += e;
    for (unsigned e : b.first) db += e;
    return da > db;
  });
  bool first = true;
  for (const auto& [m, c] : sorted) {
    const bool negative = c < 0;
    const Rational a = abs(c);
    bool constant_term = std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += nvars_ == 1 ? std::string("x") : "x" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (constant_term) {
      out += padicert::to_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += padicert::to_string(a) + "*" + mono;
    }
  }
  return out;
}

MPoly determinant(const std::vector<std::vector<MPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly::constant(1, 1);
  for (const auto& row : m) {
    if (row.size() != n) throw InvalidArgument("determinant of a non-square matrix");
  }
  if (n == 1) return m[0][0];
  MPoly det(m[0][0].nvars());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<MPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    MPoly term = m[0][j] * determinant(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MPoly run(std::size_t min_vars) {
    MPoly result = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result.extended(std::max({result.nvars(), min_vars, max_index_ + 1}));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * unary();
      } else if (peek('/')) {
        ++pos_;
        skip();
        const Integer d = integer();
        if (d == 0) fail("division by zero");
        acc = Rational(1, d) * acc;
      } else if (starts_atom()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      const Integer e = integer();
      if (e > 4096) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  MPoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MPoly::constant(Rational(integer()), 1);
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      ++pos_;
      std::size_t index = 0;
      switch (c) {
        case 'x': index = 0; break;
        case 'y': index = 1; break;
        case 'z': index = 2; break;
        case 'w': index = 3; break;
        default: pos_ = start; fail("unknown variable '" + std::string(1, c) + "'");
      }
      if (c == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const Integer k = integer();
        if (k < 1 || k > 64) {
          pos_ = start;
          fail("variable index must be between 1 and 64");
        }
        index = k.get_ui() - 1;
      }
      max_index_ = std::max(max_index_, index);
      return MPoly::variable(index, index + 1);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
};

}  // namespace

MPoly MPoly::parse(std::string_view text, std::size_t min_vars) { return Parser(text).run(min_vars); }

}  // namespace padicert
