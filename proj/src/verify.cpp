#include "padicert/verify.hpp"

#include <cmath>

#include "padicert/error.hpp"

namespace padicert {

namespace {

VerifyOutcome pass(std::string detail) { return {true, std::move(detail)}; }
VerifyOutcome fail(std::string detail) { return {false, std::move(detail)}; }

std::vector<unsigned long> prime_divisors(unsigned long n) {
  std::vector<unsigned long> out;
  for (const auto& [q, e] : factor(Integer(n))) out.push_back(q.get_ui());
  return out;
}

// x^e == 1 in Q[x]/(f); f must be monic up to sign, which it is for any
// polynomial all of whose roots are roots of unity.
bool x_power_is_one(unsigned long e, const IntPolynomial& f) {
  const auto r = power_of_x_mod(e, f);
  return r && *r == IntPolynomial::constant(1);
}

bool scalar_power(const QMatrix& m, unsigned long e) { return m.pow(e).is_scalar(); }

VerifyOutcome verify_padic(const WitnessCertificate& cert, const NonArchimedeanPlace& place) {
  const auto* bound = std::get_if<PPower>(&cert.norm_bound);
  if (!bound) return fail("non-archimedean certificate needs a power-of-p bound");
  if (!is_prime(place.prime)) return fail("place prime is not prime");
  if (bound->prime() != place.prime || bound->exponent() != -place.slope) {
    return fail("norm bound is not p^slope");
  }
  if (place.slope <= 0) return fail("slope is not positive");
  // The slope lies on the lower hull iff the line of that slope supporting the
  // points (i, v_p(c_i)) touches at least two of them.
  const auto& c = cert.alpha_poly.coefficients();
  std::optional<Rational> best;
  int touching = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const Rational height = Rational(valuation(c[i], place.prime)) - place.slope * static_cast<long>(i);
    if (!best || height < *best) {
      best = height;
      touching = 1;
    } else if (height == *best) {
      ++touching;
    }
  }
  if (touching < 2) return fail("slope is not a Newton polygon slope");
  return pass("Newton polygon at p = " + to_string(place.prime) + " has slope " + to_string(place.slope) +
              "; a root has absolute value p^" + to_string(place.slope) + " > 1");
}

VerifyOutcome verify_archimedean(const WitnessCertificate& cert, const ArchimedeanPlace& place) {
  const auto* q = std::get_if<Rational>(&cert.norm_bound);
  if (!q) return fail("archimedean certificate needs a rational bound");
  if (*q <= 1) return fail("norm bound is not above 1");
  const RationalInterval m2 = place.root_box.modulus_squared();
  if (*q * *q > m2.lo) return fail("norm bound exceeds the modulus over the box");
  if (cert.modulus && (cert.modulus->lo * cert.modulus->lo > m2.lo || cert.modulus->hi * cert.modulus->hi < m2.hi ||
                       cert.modulus->lo < 0)) {
    return fail("modulus interval does not enclose the box");
  }
  const auto count = count_roots_in_box(cert.alpha_poly, place.root_box);
  if (!count) return fail("inclusion discs do not settle the root count in the box");
  if (*count != 1) return fail("box holds " + std::to_string(*count) + " roots, not exactly one");
  return pass("box " + place.root_box.to_string() + " holds one root of modulus >= " + to_decimal(*q, 12));
}

VerifyOutcome verify_order(const Json& doc) {
  const Json& input = doc.at("input");
  const std::string verdict = doc.at("verdict").get<std::string>();
  if (input.contains("matrix")) {
    const QMatrix m = QMatrix::parse(input.at("matrix").get<std::string>());
    if (!m.is_square() || m.determinant() == 0) return fail("matrix is not invertible");
    if (verdict == "finite") {
      const unsigned long n = doc.at("order").get<unsigned long>();
      if (n == 0 || !scalar_power(m, n)) return fail("M^n is not scalar");
      for (unsigned long q : prime_divisors(n)) {
        if (scalar_power(m, n / q)) return fail("M^" + std::to_string(n / q) + " is already scalar");
      }
      return pass("M^" + std::to_string(n) + " is scalar and no proper divisor power is");
    }
    const std::string reason = doc.at("reason").get<std::string>();
    if (reason == "not_semisimple") {
      const IntPolynomial mp = polynomial_from_json(doc.at("minimal_polynomial"));
      if (!m.evaluate(mp).is_zero()) return fail("claimed minimal polynomial does not annihilate M");
      if (m.evaluate(squarefree_part(mp)).is_zero()) return fail("squarefree part annihilates M; M is semisimple");
      return pass("M is annihilated by a polynomial but not by its squarefree part: a Jordan block");
    }
    const WitnessCertificate cert = witness_from_json(doc.at("certificate"));
    const IntPolynomial chi = characteristic_polynomial(m);
    if (!exact_quotient(ratio_polynomial(chi, chi), cert.alpha_poly)) {
      return fail("certified polynomial does not divide the eigenvalue ratio polynomial");
    }
    VerifyOutcome w = verify_witness(cert);
    if (!w.ok) return w;
    return pass("an eigenvalue ratio is large at a place: " + w.detail);
  }
  std::vector<IntPolynomial> eig;
  for (const auto& e : input.at("eigenvalues")) eig.push_back(polynomial_from_json(e));
  if (verdict == "finite") {
    const unsigned long n = doc.at("order").get<unsigned long>();
    if (n == 0) return fail("order must be positive");
    for (const auto& f : eig) {
      if (!is_squarefree(f) || !x_power_is_one(n, f)) return fail("an eigenvalue is not an n-th root of unity");
    }
    for (unsigned long q : prime_divisors(n)) {
      bool all = true;
      for (const auto& f : eig) all = all && x_power_is_one(n / q, f);
      if (all) return fail("a proper divisor of the order already works");
    }
    return pass("every eigenvalue is an n-th root of unity for n = " + std::to_string(n) + ", minimally");
  }
  if (doc.at("reason").get<std::string>() != "eigenvalue_witness") return fail("diagonal input is always semisimple");
  const std::size_t idx = doc.at("eigenvalue_index").get<std::size_t>();
  if (idx >= eig.size()) return fail("eigenvalue index out of range");
  const WitnessCertificate cert = witness_from_json(doc.at("certificate"));
  if (cert.alpha_poly.primitive_part() != eig[idx].primitive_part()) return fail("certificate is about another number");
  VerifyOutcome w = verify_witness(cert);
  if (!w.ok) return w;
  return pass("eigenvalue " + std::to_string(idx + 1) + ": " + w.detail);
}

VerifyOutcome verify_tile(const Json& doc) {
  const Integer p = rational_from_json({{"num", doc.at("prime")}, {"den", "1"}}).get_num();
  require_prime(p);
  const long s = doc.at("scale").get<long>(), range = doc.at("range").get<long>();
  if (s < 1 || range < 0) return fail("bad scale or range");
  const Rational pq(p);
  // Closed forms: mu(A) = p^(s-1) - p^-1, and the annulus as a sum over spheres.
  const Rational shell = pow(pq, s - 1) - 1 / pq;
  Rational total = 0;
  for (long n = -range; n <= range; ++n) total += pow(pq, n * s) * shell;
  Rational annulus = 0;
  for (long j = -range * s; j <= (range + 1) * s - 1; ++j) annulus += pow(pq, j) - pow(pq, j - 1);
  if (rational_from_json(doc.at("shell_measure")) != shell) return fail("shell measure mismatch");
  const Json& translates = doc.at("translates");
  if (translates.size() != static_cast<std::size_t>(2 * range + 1)) return fail("wrong number of translates");
  for (long n = -range; n <= range; ++n) {
    const Json& t = translates.at(static_cast<std::size_t>(n + range));
    if (t.at("power").get<long>() != n) return fail("translates out of order");
    const Json& spheres = t.at("spheres");
    if (spheres.at(0).get<long>() != n * s || spheres.at(1).get<long>() != n * s + s - 1) {
      return fail("translate " + std::to_string(n) + " covers the wrong spheres");
    }
    const Rational want = pow(pq, n * s) * shell;
    if (rational_from_json(t.at("measure")) != want || rational_from_json(t.at("predicted")) != want) {
      return fail("translate " + std::to_string(n) + " has the wrong measure");
    }
  }
  if (rational_from_json(doc.at("total")) != total) return fail("ledger total mismatch");
  if (rational_from_json(doc.at("annulus_measure")) != annulus) return fail("annulus measure mismatch");
  const bool balanced = total == annulus;
  if (doc.at("balanced").get<bool>() != balanced) return fail("balanced flag disagrees with the recomputation");
  if (!balanced) return fail("ledger does not balance");
  return pass("sum over translates = " + to_string(total) + " = measure of the annulus");
}

PolyDensity density_from_json(const Json& j) {
  return {MPoly::parse(j.at("f").get<std::string>(), j.at("variables").get<std::size_t>()),
          j.at("root_index").get<unsigned>()};
}

Cylinder cylinder_from_json(const Json& j) {
  Cylinder c;
  c.prime = rational_from_json({{"num", j.at("prime")}, {"den", "1"}}).get_num();
  for (const auto& q : j.at("center")) c.center.push_back(rational_from_json(q));
  c.depth = j.at("depth").get<long>();
  return c;
}

VerifyOutcome compare_result(const Json& doc, const MeasureLedger& ledger, const Integer& p, unsigned m, long depth,
                             const char* route) {
  if (ledger_from_json(doc.at("ledger")) != ledger) return fail(std::string("ledger differs from ") + route);
  if (interval_from_json(doc.at("value")) != ledger_interval(ledger, p, m, depth + 2)) {
    return fail("value is not the enclosure of the ledger");
  }
  return pass(std::string("ledger reproduced by ") + route);
}

constexpr double kEnumerationLimit = 1 << 20;

VerifyOutcome verify_integral(const Json& doc) {
  const PolyDensity d = density_from_json(doc.at("density"));
  const Cylinder region = cylinder_from_json(doc.at("region"));
  const long depth = doc.at("depth").get<long>();
  const double cells = std::pow(region.prime.get_d(), static_cast<double>((depth - region.depth) * d.f.nvars()));
  if (cells <= kEnumerationLimit) {
    return compare_result(doc, enumerate_residues(d, region, depth), region.prime, d.root_index, depth,
                          "residue enumeration");
  }
  const auto r = integrate(d, region, depth, Execution::Serial);
  return compare_result(doc, r.ledger, region.prime, d.root_index, depth, "the serial walk");
}

VerifyOutcome verify_measure(const Json& doc) {
  PolyMap pi;
  const std::size_t n = doc.at("map").at("variables").get<std::size_t>();
  for (const auto& c : doc.at("map").at("components")) pi.components.push_back(MPoly::parse(c.get<std::string>(), n));
  const Cylinder base = cylinder_from_json(doc.at("base"));
  const PolyDensity d = density_from_json(doc.at("density"));
  const long depth = doc.at("depth").get<long>();
  const auto r = pushforward_cylinder_measure(pi, base, d, depth, Execution::Serial);
  return compare_result(doc, r.ledger, base.prime, d.root_index, depth, "the serial walk");
}

}  // namespace

VerifyOutcome verify_root_of_unity(const IntPolynomial& f, unsigned long n) {
  if (f.degree() < 1) return fail("constant polynomial");
  if (n == 0) return fail("order must be positive");
  if (!is_squarefree(f)) return fail("polynomial is not squarefree");
  if (!x_power_is_one(n, f)) return fail("f does not divide x^" + std::to_string(n) + " - 1");
  for (unsigned long q : prime_divisors(n)) {
    if (x_power_is_one(n / q, f)) return fail("f already divides x^" + std::to_string(n / q) + " - 1");
  }
  return pass("f divides x^" + std::to_string(n) + " - 1 and no x^d - 1 for a proper divisor d");
}

VerifyOutcome verify_witness(const WitnessCertificate& cert) {
  if (cert.alpha_poly.degree() < 1) return fail("constant polynomial");
  if (cert.alpha_poly[0] == 0) return fail("polynomial has the root 0");
  if (const auto* na = std::get_if<NonArchimedeanPlace>(&cert.place)) return verify_padic(cert, *na);
  return verify_archimedean(cert, std::get<ArchimedeanPlace>(cert.place));
}

MeasureLedger enumerate_residues(const PolyDensity& d, const Cylinder& region, long max_depth) {
  const Integer& p = region.prime;
  require_prime(p);
  if (max_depth < region.depth) throw InvalidArgument("region deeper than the enumeration depth");
  const std::size_t n = region.dimension();
  const MPoly f = d.f.extended(n);
  const Integer step = pow(p, static_cast<unsigned long>(region.depth));
  const Integer count = pow(p, static_cast<unsigned long>(max_depth - region.depth));
  const Rational cell = pow(Rational(p), -max_depth * static_cast<long>(n));
  std::vector<Integer> digits(n, Integer(0));
  std::vector<Rational> point(n);
  MeasureLedger out;
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) point[i] = region.center[i] + Rational(step * digits[i]);
    const auto v = valuation(f.evaluate(std::span<const Rational>(point)), p);
    // f is constant mod p^D on the residue class, so v < D is exact there.
    if (v && *v < max_depth) {
      out.exact[*v] += cell;
    } else {
      out.capped[max_depth] += cell;
    }
    std::size_t i = 0;
    while (i < n && ++digits[i] == count) digits[i++] = 0;
    if (i == n) break;
  }
  return out;
}

namespace {

VerifyOutcome dispatch(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind")) return fail("not a certificate document");
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "witness") {
    const IntPolynomial f = polynomial_from_json(doc.at("alpha_poly"));
    if (doc.at("case").get<std::string>() == "root_of_unity") {
      return verify_root_of_unity(f, doc.at("order").get<unsigned long>());
    }
    return verify_witness(witness_from_json(doc));
  }
  if (kind == "order") return verify_order(doc);
  if (kind == "tile") return verify_tile(doc);
  if (kind == "integral") return verify_integral(doc);
  if (kind == "measure") return verify_measure(doc);
  return fail("unknown document kind '" + kind + "'");
}

}  // namespace

VerifyOutcome verify_document(const Json& doc) {
  try {
    return dispatch(doc);
  } catch (const Json::exception& e) {
    return fail(std::string("malformed document: ") + e.what());
  } catch (const Error& e) {
    return fail(std::string("malformed document: ") + e.what());
  }
}

}  // namespace padicert
