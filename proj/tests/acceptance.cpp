// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check compares against an oracle computed here, not by the
// code path under test.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "padicert/certificate.hpp"
#include "padicert/haar.hpp"
#include "padicert/projaut.hpp"
#include "padicert/verify.hpp"

using namespace padicert;

namespace {

struct Check {
  std::ostringstream failures;
  int count = 0;

  void expect(bool ok, const std::string& what) {
    if (!ok && count++ < 5) failures << "\n      " << what;
  }
};

int failed_criteria = 0;

void criterion(int number, const std::string& title, double time_limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0 && elapsed >= time_limit_s) {
    c.expect(false, "took " + std::to_string(elapsed) + " s, limit " + std::to_string(time_limit_s) + " s");
  }
  const bool ok = c.count == 0;
  if (!ok) ++failed_criteria;
  std::printf("[%s] %2d. %s (%.3f s)%s\n", ok ? "PASS" : "FAIL", number, title.c_str(), elapsed,
              c.failures.str().c_str());
  std::fflush(stdout);
}

Rational pw(const Integer& p, long e) { return pow(Rational(p), e); }

// Residue enumeration written independently of the integrator: the ledger of
// |f(x)|^(1/m) on Z_p from all residues mod p^D.
MeasureLedger residue_ledger(const IntPolynomial& f, long p, long depth) {
  MeasureLedger out;
  const Integer modulus = pow(Integer(p), static_cast<unsigned long>(depth));
  const Rational cell = pw(p, -depth);
  for (Integer a = 0; a < modulus; ++a) {
    const Integer value = f.evaluate(a);
    if (value != 0 && valuation(value, p) < depth) {
      out.exact[valuation(value, p)] += cell;
    } else {
      out.capped[depth] += cell;
    }
  }
  return out;
}

// sqrt(p) enclosed between integer square roots at scale 10^30.
RationalInterval sqrt_enclosure(long p) {
  const Integer scale = pow(Integer(10), 30);
  const Integer target = Integer(p) * scale * scale;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), target.get_mpz_t());
  return {Rational(s, scale), Rational(s + 1, scale)};
}

IntPolynomial random_polynomial(std::mt19937& rng, int max_degree, int height) {
  std::uniform_int_distribution<int> deg(1, max_degree), coef(-height, height);
  const int d = deg(rng);
  std::vector<Integer> c(d + 1);
  for (auto& x : c) x = coef(rng);
  while (c[d] == 0) c[d] = coef(rng);
  return IntPolynomial(c);
}

bool exact_projective_order(const QMatrix& m, unsigned long n) {
  if (!m.pow(n).is_scalar()) return false;
  for (const auto& [q, e] : factor(Integer(n))) {
    if (m.pow(n / q.get_ui()).is_scalar()) return false;
  }
  return true;
}

QMatrix random_invertible(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> dist(-3, 3);
  for (;;) {
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (auto& row : rows)
      for (auto& x : row) x = dist(rng);
    const QMatrix p = QMatrix::from_rows(rows);
    if (p.determinant() != 0) return p;
  }
}

QMatrix block_diagonal(const std::vector<QMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) rows[at + i][at + j] = b(i, j);
    at += b.rows();
  }
  return QMatrix::from_rows(rows);
}

// Verdict shape used for invariance checks: order n, or 0 for infinite order.
unsigned long order_or_zero(const OrderVerdict& v) {
  if (const auto* f = std::get_if<FiniteOrder>(&v)) return f->n;
  return 0;
}

std::string show(const RationalInterval& r) { return "[" + to_decimal(r.lo, 10) + ", " + to_decimal(r.hi, 10) + "]"; }

}  // namespace

int main() {
  criterion(1, "Haar normalization and cylinder law", 1.0, [](Check& c) {
    for (const long p : {2L, 3L, 5L, 7L}) {
      for (long m = 0; m <= 8; ++m) {
        for (std::size_t n = 1; n <= 3; ++n) {
          const Rational got = cylinder_measure({p, std::vector<Rational>(n, 0), m});
          Rational want = 1;
          for (long k = 0; k < m * static_cast<long>(n); ++k) want /= p;
          c.expect(got == want, "p=" + std::to_string(p) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
      }
    }
  });

  criterion(2, "integration agrees with exhaustive residue enumeration at D = 6", 10.0, [](Check& c) {
    struct Case {
      const char* f;
      unsigned m;
    };
    for (const long p : {2L, 3L}) {
      for (const Case k : {Case{"x", 1}, Case{"x - 1", 1}, Case{"x^2 - 1", 1}, Case{"x", 2}}) {
        const std::string tag = std::string(k.f) + " m=" + std::to_string(k.m) + " p=" + std::to_string(p);
        const PolyDensity d{MPoly::parse(k.f), k.m};
        const auto r = integrate(d, Cylinder::unit_polydisc(p, 1), 6);
        const MeasureLedger oracle = residue_ledger(IntPolynomial::parse(k.f), p, 6);
        c.expect(r.ledger == oracle, tag + ": ledger differs from enumeration");
        // The enumeration ledger turned into an interval the same way.
        const RationalInterval want = ledger_interval(oracle, p, k.m, 6 + 2);
        c.expect(r.value.contains(want) && want.contains(r.value), tag + ": intervals differ");
        c.expect(r.value.width() <= pw(p, -6), tag + ": width " + show(r.value));
        if (k.m == 1) {
          // m = 1 needs no irrational enclosure: recompute the interval outright.
          Rational lo = 0, cap = 0;
          for (const auto& [v, mu] : oracle.exact) lo += mu * pw(p, -v);
          for (const auto& [u, mu] : oracle.capped) cap += mu * pw(p, -u);
          c.expect(r.value == RationalInterval{lo, lo + cap}, tag + ": interval differs from oracle");
        } else {
          // Closed form (1 - 1/p) / (1 - p^(-3/2)) for |x|^(1/2).
          const RationalInterval s = sqrt_enclosure(p);
          const RationalInterval series{(1 - Rational(1, p)) / (1 - 1 / (p * s.hi)),
                                        (1 - Rational(1, p)) / (1 - 1 / (p * s.lo))};
          c.expect(r.value.overlaps(series), tag + ": misses the series value");
        }
      }
    }
  });

  criterion(3, "integral of |x| over Z_p encloses p/(p+1) at D = 12", 0, [](Check& c) {
    for (const long p : {2L, 3L, 5L}) {
      const auto r = integrate({MPoly::parse("x"), 1}, Cylinder::unit_polydisc(p, 1), 12);
      // sum_k (1 - 1/p) p^-k p^-k = (1 - 1/p) / (1 - p^-2)
      const Rational closed = (1 - Rational(1, p)) / (1 - Rational(1, p * p));
      c.expect(closed == Rational(p, p + 1), "closed form");
      c.expect(r.value.contains(closed), "p=" + std::to_string(p) + ": " + show(r.value));
      c.expect(r.value.width() <= pw(p, -12), "p=" + std::to_string(p) + ": width");
    }
  });

  criterion(4, "(3+4i)/5: not an algebraic integer, 5-adic witness with norm bound 5", 0.1, [](Check& c) {
    const IntPolynomial f{5, -6, 5};
    c.expect(!root_of_unity_order(f).has_value(), "reported as a root of unity");
    c.expect(!is_algebraic_integer(f), "reported as an algebraic integer");
    const WitnessResult w = find_witness(AlgebraicNumberSpec::make(f));
    const auto* cert = std::get_if<WitnessCertificate>(&w);
    c.expect(cert != nullptr, "no witness");
    if (!cert) return;
    const auto* place = std::get_if<NonArchimedeanPlace>(&cert->place);
    c.expect(place && place->prime == 5, "place is not 5-adic");
    const auto* bound = std::get_if<PPower>(&cert->norm_bound);
    c.expect(bound && bound->prime() == 5 && bound->to_rational() == Rational(5), "norm bound is not exactly 5");
    // Independent reading: the roots multiply to 1 and sum to 6/5, so one has
    // 5-adic valuation -1.
    c.expect(verify_witness(*cert).ok, "certificate does not re-verify");
    c.expect(verify_document(witness_document(f, w)).ok, "document does not re-verify");
  });

  criterion(5, "Kronecker suite", 0, [](Check& c) {
    int tested = 0;
    for (unsigned long d = 1; d <= 105; ++d) {
      if (euler_phi(d) > 48) continue;
      ++tested;
      const IntPolynomial phi = cyclotomic(d);
      c.expect(phi.degree() == static_cast<long>(euler_phi(d)), "deg Phi_" + std::to_string(d));
      c.expect(root_of_unity_order(phi) == d, "order of Phi_" + std::to_string(d));
      c.expect(verify_root_of_unity(phi, d).ok, "x^d == 1 mod Phi_" + std::to_string(d));
    }
    c.expect(tested > 80, "too few cyclotomic cases");
    for (const IntPolynomial& f : {IntPolynomial{-1, -1, 1}, IntPolynomial{-2, 1}, IntPolynomial{5, -6, 5},
                                   IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}}) {
      c.expect(!root_of_unity_order(f).has_value(), f.to_string() + " reported as a root of unity");
    }
  });

  criterion(6, "archimedean witnesses for the golden ratio and Lehmer's number", 0, [](Check& c) {
    const auto golden = archimedean_witness(IntPolynomial{-1, -1, 1});
    c.expect(golden && golden->modulus, "no golden-ratio witness");
    if (golden && golden->modulus) {
      const RationalInterval window{Rational(1618, 1000), Rational(1619, 1000)};
      c.expect(window.contains(*golden->modulus) && golden->modulus->lo > window.lo && golden->modulus->hi < window.hi,
               "golden modulus " + show(*golden->modulus));
      c.expect(verify_witness(*golden).ok, "golden certificate does not re-verify");
    }
    const auto lehmer = archimedean_witness(IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
    c.expect(lehmer && lehmer->modulus, "no Lehmer witness");
    if (lehmer && lehmer->modulus) {
      c.expect(lehmer->modulus->overlaps({Rational(117627, 100000), Rational(117629, 100000)}),
               "Lehmer modulus " + show(*lehmer->modulus));
      c.expect(verify_witness(*lehmer).ok, "Lehmer certificate does not re-verify");
    }
  });

  criterion(7, "witness trichotomy on 500 random squarefree primitive polynomials", 0, [](Check& c) {
    std::mt19937 rng(2024);
    int done = 0, unity = 0, padic = 0, arch = 0;
    while (done < 500) {
      IntPolynomial f = random_polynomial(rng, 6, 20);
      if (f[0] == 0 || f.content() != 1 || !is_squarefree(f)) continue;
      ++done;
      const WitnessResult w = find_witness(AlgebraicNumberSpec::make(f));
      const std::string tag = f.to_string();
      if (const auto* r = std::get_if<RootOfUnity>(&w)) {
        ++unity;
        c.expect(verify_root_of_unity(f, r->order).ok, tag + ": root-of-unity order does not verify");
        continue;
      }
      const auto& cert = std::get<WitnessCertificate>(w);
      const bool non_arch = std::holds_alternative<NonArchimedeanPlace>(cert.place);
      non_arch ? ++padic : ++arch;
      // p-adic exactly when f is not monic up to sign.
      c.expect(non_arch == (abs(f.leading()) != 1), tag + ": wrong kind of place");
      c.expect(verify_witness(cert).ok, tag + ": certificate does not re-verify");
      c.expect(verify_document(witness_document(f, w)).ok, tag + ": document does not re-verify");
    }
    c.expect(padic > 0 && arch > 0, "a branch was never exercised");
    std::printf("      (%d roots of unity, %d p-adic, %d archimedean)\n", unity, padic, arch);
  });

  criterion(8, "change of variables for 20 unit-Jacobian maps at D = 8", 0, [](Check& c) {
    std::mt19937 rng(8);
    const std::vector<const char*> densities = {"x", "x - 1", "x^2 - 1", "x^3 + x + 1"};
    for (int i = 0; i < 20; ++i) {
      const long p = i % 2 == 0 ? 2 : 3;
      std::uniform_int_distribution<long> unit(1, p - 1), coef(-2, 2), small(1, 5);
      long u = unit(rng) + p * coef(rng);
      if (u % p == 0) u += 1;
      MPoly phi = Rational(u) * MPoly::variable(0, 1);
      for (unsigned k = 0; k <= 3; ++k) {
        phi = phi + Rational(p * coef(rng)) * MPoly::variable(0, 1).pow(k);
      }
      const PolyDensity d{MPoly::parse(densities[i % densities.size()]), static_cast<unsigned>(1 + i % 2)};
      const auto report = change_of_variables_check({{phi}}, d, Cylinder::unit_polydisc(p, 1), 8);
      c.expect(report.overlap, "map " + std::to_string(i) + ": " + show(report.lhs) + " vs " + show(report.rhs));
    }
    for (const long p : {2L, 3L}) {
      for (const char* f : densities) {
        const auto id = change_of_variables_check({{MPoly::parse("x")}}, {MPoly::parse(f), 1},
                                                  Cylinder::unit_polydisc(p, 1), 8);
        c.expect(id.lhs == id.rhs, std::string("identity on ") + f);
      }
    }
  });

  criterion(9, "product formula on 100 random rationals", 0, [](Check& c) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<long> mag(1, 1000000);
    for (int i = 0; i < 100; ++i) {
      Rational q(mag(rng) * (i % 2 ? -1 : 1), mag(rng));
      q.canonicalize();
      c.expect(product_formula_check(q), "fails for " + to_string(q));
      // Oracle: |q| times p^-v_p(q) over the primes of num and den is 1.
      Rational prod = abs(q);
      for (const Integer& part : {q.get_num(), q.get_den()}) {
        for (const auto& [prime, e] : factor(abs(part))) prod *= pw(prime, -*valuation(q, prime));
      }
      c.expect(prod == 1, "oracle product for " + to_string(q));
    }
  });

  criterion(10, "projective order: Jordan block, cyclotomic companions, invariance", 0, [](Check& c) {
    const auto jordan = projective_order(QMatrix::parse("1,1;0,1"));
    const auto* inf = std::get_if<InfiniteOrder>(&jordan);
    c.expect(inf && std::holds_alternative<NotSemisimple>(inf->reason), "[[1,1],[0,1]] is not NotSemisimple");
    for (const unsigned long d : {3UL, 4UL, 5UL, 6UL, 8UL, 12UL}) {
      const QMatrix m = QMatrix::companion(cyclotomic(d));
      const std::string tag = "companion(Phi_" + std::to_string(d) + ")";
      // As a linear map the companion matrix has order exactly d.
      c.expect(m.pow(d) == QMatrix::identity(m.rows()), tag + ": M^d != I");
      for (const auto& [q, e] : factor(Integer(d))) {
        c.expect(m.pow(d / q.get_ui()) != QMatrix::identity(m.rows()), tag + ": a proper power is I");
      }
      c.expect(linear_order(m) == d, tag + ": linear order");
      // In PGL the order is that of the eigenvalue ratios z^(a-b), a, b
      // units mod d: d / gcd(d, all differences of units).
      unsigned long g = d;
      for (unsigned long a = 1; a < d; ++a) {
        for (unsigned long b = 1; b < d; ++b) {
          if (std::gcd(a, d) == 1 && std::gcd(b, d) == 1) g = std::gcd(g, (a + d - b) % d);
        }
      }
      const unsigned long projective = d / g;
      const unsigned long got = order_or_zero(projective_order(m));
      c.expect(got == projective, tag + ": projective order " + std::to_string(got) + ", expected " +
                                      std::to_string(projective));
      c.expect(exact_projective_order(m, projective), tag + ": M^n scalar / proper powers not");
      if (d % 2 == 1) c.expect(got == d, tag + ": odd d must keep order d");
    }
    std::mt19937 rng(10);
    const std::vector<QMatrix> bases = {
        QMatrix::companion(cyclotomic(3)), QMatrix::companion(cyclotomic(5)), QMatrix::companion(cyclotomic(8)),
        QMatrix::diagonal({1, -1, 1}),     QMatrix::parse("2,1;1,1"),         QMatrix::parse("1,1;0,1"),
        QMatrix::diagonal({1, 2, 3}),      QMatrix::companion(IntPolynomial{5, -6, 5})};
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    for (int i = 0; i < 50; ++i) {
      const QMatrix& m = bases[i % bases.size()];
      const unsigned long want = order_or_zero(projective_order(m));
      const QMatrix p = random_invertible(rng, m.rows());
      const QMatrix conj = p * m * p.inverse();
      long a = num(rng);
      if (a == 0) a = 1;
      const Rational scalar(a, den(rng));
      const auto v1 = projective_order(conj);
      const auto v2 = projective_order(Rational(scalar) * m);
      c.expect(order_or_zero(v1) == want && v1.index() == projective_order(m).index(),
               "conjugation changed the verdict, instance " + std::to_string(i));
      c.expect(order_or_zero(v2) == want, "scaling changed the verdict, instance " + std::to_string(i));
      if (want != 0) c.expect(exact_projective_order(conj, want), "conjugate order, instance " + std::to_string(i));
    }
  });

  criterion(11, "shell tiling ledgers balance", 0, [](Check& c) {
    for (const long p : {2L, 3L, 5L}) {
      for (long s = 1; s <= 3; ++s) {
        for (long range = 0; range <= 6; ++range) {
          const TilingLedger t = verify_shell_tiling(p, s, range);
          const std::string tag = "p=" + std::to_string(p) + " s=" + std::to_string(s) + " M=" + std::to_string(range);
          c.expect(t.balanced && t.disjoint_union && t.translate_law, tag + ": ledger flags");
          // Sphere-by-sphere sum over p^(-Ms) .. p^((M+1)s - 1).
          Rational spheres = 0;
          for (long j = -range * s; j <= (range + 1) * s - 1; ++j) spheres += pw(p, j) * (1 - Rational(1, p));
          c.expect(t.total == spheres, tag + ": total differs from the sphere sum");
          c.expect(t.annulus_measure == spheres, tag + ": annulus differs from the sphere sum");
        }
      }
    }
  });

  criterion(12, "diagonal dichotomy: finite order verified, or a re-checkable witness", 0, [](Check& c) {
    std::mt19937 rng(12);
    std::vector<IntPolynomial> pool;
    for (const unsigned long d : {1UL, 2UL, 3UL, 4UL, 5UL, 6UL, 8UL, 10UL, 12UL}) pool.push_back(cyclotomic(d));
    for (const IntPolynomial& f : {IntPolynomial{5, -6, 5}, IntPolynomial{-1, -1, 1}, IntPolynomial{-2, 1},
                                   IntPolynomial{1, -3, 1}, IntPolynomial{1, 0, 0, 4}}) {
      pool.push_back(f);
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), count(1, 3);
    int finite = 0, infinite = 0;
    for (int i = 0; i < 40; ++i) {
      DiagonalAutomorphism spec;
      std::vector<QMatrix> blocks{QMatrix::identity(1)};
      std::vector<IntPolynomial> polys;
      for (std::size_t k = count(rng); k > 0; --k) {
        polys.push_back(pool[pick(rng)]);
        spec.eigenvalues.push_back(AlgebraicNumberSpec::make(polys.back()));
        blocks.push_back(QMatrix::companion(polys.back()));
      }
      const auto v = certify_diagonal(spec);
      const std::string tag = "instance " + std::to_string(i);
      c.expect(verify_document(order_document(ProjAutSpec{spec}, v)).ok, tag + ": document does not re-verify");
      if (const auto* f = std::get_if<FiniteOrder>(&v)) {
        ++finite;
        for (const auto& g : polys) {
          const auto po = power_of_x_mod(f->n, g);
          c.expect(po && *po == IntPolynomial{1}, tag + ": eigenvalue^n != 1");
        }
        // The same automorphism as a matrix, eigenvalues realized by
        // companion blocks, has the same projective order when the blocks
        // are distinct (so the matrix is diagonalizable over C).
        const QMatrix m = block_diagonal(blocks);
        if (is_semisimple(m)) c.expect(order_or_zero(projective_order(m)) == f->n, tag + ": matrix route disagrees");
      } else {
        ++infinite;
        const auto& w = std::get<EigenvalueWitness>(std::get<InfiniteOrder>(v).reason);
        c.expect(w.eigenvalue_index.has_value(), tag + ": witness without an eigenvalue index");
        if (w.eigenvalue_index) {
          c.expect(!root_of_unity_order(polys[*w.eigenvalue_index]).has_value(), tag + ": witness for a root of unity");
        }
        c.expect(verify_witness(w.certificate).ok, tag + ": witness does not re-verify");
      }
    }
    c.expect(finite > 0 && infinite > 0, "one side of the dichotomy was never exercised");
    std::printf("      (%d finite, %d infinite)\n", finite, infinite);
  });

  std::printf("%s: %d criteria failed\n", failed_criteria ? "FAILED" : "OK", failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
