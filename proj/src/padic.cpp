#include "padicert/padic.hpp"

#include <cctype>

#include "padicert/error.hpp"

namespace padicert {

PPower::PPower(Integer prime, Rational exponent) : prime_(std::move(prime)), exponent_(std::move(exponent)) {}

PPower PPower::zero(Integer prime) {
  PPower z(std::move(prime), 0);
  z.zero_ = true;
  return z;
}

std::optional<Rational> PPower::to_rational() const {
  if (zero_) return Rational(0);
  if (exponent_.get_den() != 1) return std::nullopt;
  return pow(Rational(prime_), -exponent_.get_num().get_si());
}

std::pair<Rational, Rational> PPower::enclose(unsigned bits) const {
  if (auto exact = to_rational()) return {*exact, *exact};
  // p^(-e) = p^(-c) * p^(j/m) with c = ceil(e), j = c*m - e*m in (0, m)
  const Integer& num = exponent_.get_num();
  const Integer& den = exponent_.get_den();
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer j = c * den - num;
  Rational scale = pow(Rational(prime_), -c.get_si());
  auto [lo, hi] = root_bounds(Rational(pow(prime_, j.get_ui())), static_cast<unsigned>(den.get_ui()), bits);
  return {lo * scale, hi * scale};
}

PPower operator*(const PPower& a, const PPower& b) {
  if (a.prime_ != b.prime_) throw InvalidArgument("PPower product over different primes");
  if (a.zero_ || b.zero_) return PPower::zero(a.prime_);
  return PPower(a.prime_, a.exponent_ + b.exponent_);
}

bool operator==(const PPower& a, const PPower& b) {
  if (a.prime_ != b.prime_) return false;
  if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
  return a.exponent_ == b.exponent_;
}

std::partial_ordering operator<=>(const PPower& a, const PPower& b) {
  if (a.prime_ != b.prime_) return std::partial_ordering::unordered;
  if (a.zero_ || b.zero_) {
    if (a.zero_ && b.zero_) return std::partial_ordering::equivalent;
    return a.zero_ ? std::partial_ordering::less : std::partial_ordering::greater;
  }
  // larger value <=> smaller exponent
  const int c = cmp(b.exponent_, a.exponent_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::string PPower::to_string() const {
  if (zero_) return "0";
  return prime_.get_str() + "^" + padicert::to_string(Rational(-exponent_));
}

PAdicApprox::PAdicApprox(Integer prime, long valuation, long precision, Integer unit)
    : prime_(std::move(prime)), valuation_(valuation), precision_(precision), unit_(std::move(unit)) {}

PAdicApprox PAdicApprox::zero(const Integer& prime) {
  require_prime(prime);
  PAdicApprox z(prime, 0, 0, 0);
  z.zero_ = true;
  return z;
}

PAdicApprox PAdicApprox::from_rational(const Rational& r, const Integer& prime, long precision) {
  require_prime(prime);
  if (precision < 1) throw InvalidArgument("p-adic precision must be at least 1");
  if (r == 0) return zero(prime);
  Integer num, den;
  const long vn = static_cast<long>(mpz_remove(num.get_mpz_t(), r.get_num().get_mpz_t(), prime.get_mpz_t()));
  const long vd = static_cast<long>(mpz_remove(den.get_mpz_t(), r.get_den().get_mpz_t(), prime.get_mpz_t()));
  const Integer modulus = pow(prime, static_cast<unsigned long>(precision));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  Integer unit = num * inv;
  mpz_fdiv_r(unit.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
  return PAdicApprox(prime, vn - vd, precision, unit);
}

PAdicApprox PAdicApprox::from_digits(const Integer& prime, long valuation,
                                     const std::vector<unsigned long>& digits) {
  require_prime(prime);
  if (digits.empty()) throw InvalidArgument("p-adic literal needs at least one digit");
  if (digits.front() == 0) throw InvalidArgument("leading p-adic digit must be nonzero");
  Integer unit = 0;
  Integer place = 1;
  for (unsigned long d : digits) {
    if (Integer(d) >= prime) throw InvalidArgument("p-adic digit out of range: " + std::to_string(d));
    unit += place * d;
    place *= prime;
  }
  return PAdicApprox(prime, valuation, static_cast<long>(digits.size()), unit);
}

PAdicApprox PAdicApprox::parse(std::string_view text, std::optional<Integer> prime_for_zero) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  };
  auto read_long = [&] {
    skip();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t ds = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (ds == i) throw ParseError("expected integer", i);
    return std::stol(std::string(text.substr(start, i - start)));
  };

  skip();
  if (text.substr(i) == "0") {
    if (!prime_for_zero) throw ParseError("literal 0 needs an explicit prime", i);
    return zero(*prime_for_zero);
  }
  const long p = read_long();
  expect('^');
  const long v = read_long();
  expect('*');
  expect('(');
  std::vector<unsigned long> digits;
  for (;;) {
    const long d = read_long();
    if (d < 0) throw ParseError("negative digit", i);
    digits.push_back(static_cast<unsigned long>(d));
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  expect(')');
  skip();
  if (text.substr(i, 3) != "mod") throw ParseError("expected 'mod'", i);
  i += 3;
  const std::size_t prime_pos = i;
  if (read_long() != p) throw ParseError("modulus prime differs from base prime", prime_pos);
  expect('^');
  expect('(');
  // Accept either the evaluated exponent or the literal sum v+N.
  long exponent = read_long();
  skip();
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) exponent += read_long();
  expect(')');
  skip();
  if (i != text.size()) throw ParseError("trailing characters", i);
  if (exponent != v + static_cast<long>(digits.size())) {
    throw ParseError("modulus exponent must equal v + number of digits", prime_pos);
  }
  return from_digits(Integer(p), v, digits);
}

std::optional<long> PAdicApprox::valuation() const {
  if (zero_) return std::nullopt;
  return valuation_;
}

std::optional<long> PAdicApprox::absolute_precision() const {
  if (zero_) return std::nullopt;
  return valuation_ + precision_;
}

std::vector<unsigned long> PAdicApprox::digits() const {
  std::vector<unsigned long> out;
  Integer rest = unit_;
  for (long i = 0; i < precision_; ++i) {
    Integer d;
    mpz_fdiv_qr(rest.get_mpz_t(), d.get_mpz_t(), rest.get_mpz_t(), prime_.get_mpz_t());
    out.push_back(d.get_ui());
  }
  return out;
}

Rational PAdicApprox::lift() const {
  if (zero_) return 0;
  return Rational(unit_) * pow(Rational(prime_), valuation_);
}

PPower PAdicApprox::norm() const {
  if (zero_) return PPower::zero(prime_);
  return PPower(prime_, valuation_);
}

void PAdicApprox::require_same_prime(const PAdicApprox& other) const {
  if (prime_ != other.prime_) throw InvalidArgument("p-adic operands over different primes");
}

PAdicApprox PAdicApprox::operator-() const {
  if (zero_) return *this;
  const Integer modulus = pow(prime_, static_cast<unsigned long>(precision_));
  return PAdicApprox(prime_, valuation_, precision_, modulus - unit_);
}

PAdicApprox PAdicApprox::inverse() const {
  if (zero_) throw DivisionByZero("inverse of p-adic zero");
  const Integer modulus = pow(prime_, static_cast<unsigned long>(precision_));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), modulus.get_mpz_t());
  return PAdicApprox(prime_, -valuation_, precision_, inv);
}

PAdicApprox operator+(const PAdicApprox& x, const PAdicApprox& y) {
  x.require_same_prime(y);
  if (x.zero_) return y;
  if (y.zero_) return x;
  const Integer& p = x.prime_;
  const long absolute = std::min(x.valuation_ + x.precision_, y.valuation_ + y.precision_);
  const long vmin = std::min(x.valuation_, y.valuation_);
  const Integer modulus = pow(p, static_cast<unsigned long>(absolute - vmin));
  Integer sum = x.unit_ * pow(p, static_cast<unsigned long>(x.valuation_ - vmin)) +
                y.unit_ * pow(p, static_cast<unsigned long>(y.valuation_ - vmin));
  mpz_fdiv_r(sum.get_mpz_t(), sum.get_mpz_t(), modulus.get_mpz_t());
  if (sum == 0) {
    throw PrecisionExhausted("sum vanishes modulo " + p.get_str() + "^" + std::to_string(absolute));
  }
  Integer unit;
  const long shift = static_cast<long>(mpz_remove(unit.get_mpz_t(), sum.get_mpz_t(), p.get_mpz_t()));
  const long v = vmin + shift;
  return PAdicApprox(p, v, absolute - v, unit);
}

PAdicApprox operator-(const PAdicApprox& x, const PAdicApprox& y) { return x + (-y); }

PAdicApprox operator*(const PAdicApprox& x, const PAdicApprox& y) {
  x.require_same_prime(y);
  if (x.zero_) return x;
  if (y.zero_) return y;
  const long n = std::min(x.precision_, y.precision_);
  const Integer modulus = pow(x.prime_, static_cast<unsigned long>(n));
  Integer unit = x.unit_ * y.unit_;
  mpz_fdiv_r(unit.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
  return PAdicApprox(x.prime_, x.valuation_ + y.valuation_, n, unit);
}

PAdicApprox operator/(const PAdicApprox& x, const PAdicApprox& y) { return x * y.inverse(); }

bool PAdicApprox::congruent(const PAdicApprox& other) const {
  require_same_prime(other);
  if (zero_ || other.zero_) return zero_ && other.zero_;
  const long absolute = std::min(valuation_ + precision_, other.valuation_ + other.precision_);
  const Rational diff = lift() - other.lift();
  if (diff == 0) return true;
  return *padicert::valuation(diff, prime_) >= absolute;
}

bool operator==(const PAdicApprox& x, const PAdicApprox& y) {
  if (x.prime_ != y.prime_ || x.zero_ != y.zero_) return false;
  if (x.zero_) return true;
  return x.valuation_ == y.valuation_ && x.precision_ == y.precision_ && x.unit_ == y.unit_;
}

std::string PAdicApprox::to_string() const {
  if (zero_) return "0";
  std::string out = prime_.get_str() + "^" + std::to_string(valuation_) + " * (";
  const auto ds = digits();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ds[i]);
  }
  out += ") mod " + prime_.get_str() + "^(" + std::to_string(valuation_ + precision_) + ")";
  return out;
}

}  // namespace padicert
