#include <doctest.h>

#include <random>

#include "padicert/error.hpp"
#include "padicert/places.hpp"
#include "padicert/verify.hpp"

using namespace padicert;

namespace {

const IntPolynomial kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

// Sum of slope * length over the polygon telescopes to the height difference.
void check_polygon(const IntPolynomial& f, const Integer& p) {
  const NewtonPolygon np = newton_polygon(f, p);
  Rational rise = 0;
  long run = 0;
  for (const auto& s : np.segments) {
    rise += s.slope * s.length;
    run += s.length;
  }
  CHECK(rise == np.points.back().second - np.points.front().second);
  CHECK(run == f.degree() - np.points.front().first);
  CHECK(static_cast<long>(np.segments.size()) <= f.degree());
  for (std::size_t k = 1; k < np.segments.size(); ++k) CHECK(np.segments[k - 1].slope < np.segments[k].slope);
}

}  // namespace

TEST_CASE("Newton polygons") {
  SUBCASE("x^2 - p: one segment of slope -1/2") {
    const NewtonPolygon np = newton_polygon(IntPolynomial{-3, 0, 1}, 3);
    REQUIRE(np.segments.size() == 1);
    CHECK(np.segments[0].slope == Rational(-1, 2));
    CHECK(np.segments[0].length == 2);
  }
  SUBCASE("p x - 1: slope +1, root 1/p") {
    const NewtonPolygon np = newton_polygon(IntPolynomial{-1, 7}, 7);
    REQUIRE(np.segments.size() == 1);
    CHECK(np.segments[0].slope == 1);
  }
  SUBCASE("5x^2 - 6x + 5 at 5: slopes -1 and +1") {
    const NewtonPolygon np = newton_polygon(IntPolynomial{5, -6, 5}, 5);
    REQUIRE(np.segments.size() == 2);
    CHECK(np.segments[0].slope == -1);
    CHECK(np.segments[0].length == 1);
    CHECK(np.segments[1].slope == 1);
    CHECK(np.segments[1].length == 1);
    // The roots (3 +- 4i)/5 multiply to 1 and sum to 6/5, so their 5-adic
    // valuations are opposite and one of them is -1.
  }
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> c(-50, 50);
  for (int t = 0; t < 100; ++t) {
    IntPolynomial f{c(rng), c(rng), c(rng), c(rng), c(rng)};
    if (f.degree() < 1) continue;
    for (const long p : {2L, 3L, 5L}) check_polygon(f, p);
  }
}

TEST_CASE("p-adic witnesses") {
  const auto w = padic_witness(IntPolynomial{5, -6, 5});
  REQUIRE(w.has_value());
  const auto& place = std::get<NonArchimedeanPlace>(w->place);
  CHECK(place.prime == 5);
  CHECK(place.slope == 1);
  CHECK(*std::get<PPower>(w->norm_bound).to_rational() == 5);
  CHECK(verify_witness(*w).ok);

  CHECK_FALSE(padic_witness(IntPolynomial{-1, -1, 1}).has_value());

  const auto w2 = padic_witness(IntPolynomial{-3, 2});  // 3/2
  REQUIRE(w2.has_value());
  CHECK(std::get<NonArchimedeanPlace>(w2->place).prime == 2);
  CHECK(*std::get<PPower>(w2->norm_bound).to_rational() == 2);

  // Non-monic primitive input always yields a witness.
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> c(-20, 20);
  for (int t = 0; t < 200; ++t) {
    IntPolynomial f = IntPolynomial{c(rng), c(rng), c(rng), c(rng)}.primitive_part();
    if (f.degree() < 1 || f[0] == 0 || !is_squarefree(f) || abs(f.leading()) == 1) continue;
    const auto cert = padic_witness(f);
    REQUIRE(cert.has_value());
    CHECK(verify_witness(*cert).ok);
  }
}

TEST_CASE("archimedean witnesses") {
  const auto golden = archimedean_witness(IntPolynomial{-1, -1, 1});
  REQUIRE(golden.has_value());
  REQUIRE(golden->modulus.has_value());
  // (1 + sqrt 5)/2 = 1.6180339887...
  CHECK(golden->modulus->contains(Rational(16180339887, 10000000000)));
  CHECK(std::get<Rational>(golden->norm_bound) > Rational(1618, 1000));
  CHECK(verify_witness(*golden).ok);

  const auto two = archimedean_witness(IntPolynomial{-2, 1});
  REQUIRE(two.has_value());
  CHECK(std::get<Rational>(two->norm_bound) <= 2);
  CHECK(std::get<Rational>(two->norm_bound) > Rational(19, 10));

  const auto lehmer = archimedean_witness(kLehmer);
  REQUIRE(lehmer.has_value());
  CHECK(lehmer->modulus->overlaps({Rational(117627, 100000), Rational(117629, 100000)}));
  CHECK(verify_witness(*lehmer).ok);

  // Roots strictly inside the disc: certified absence of a witness.
  CHECK_FALSE(archimedean_witness(IntPolynomial{-1, 2}).has_value());
  CHECK_FALSE(archimedean_witness(IntPolynomial{1, 0, 9}).has_value());
  // Roots on the circle straddle it at every precision, so the search gives
  // up; find_witness never gets here because it detects roots of unity first.
  WitnessOptions few;
  few.max_doublings = 3;
  CHECK_THROWS_AS(archimedean_witness(IntPolynomial{1, -1, 1}, few), MaxPrecisionExceeded);
}

TEST_CASE("find_witness trichotomy") {
  const auto r = find_witness(AlgebraicNumberSpec::make(IntPolynomial{1, 0, -1, 0, 1}));
  REQUIRE(std::holds_alternative<RootOfUnity>(r));
  CHECK(std::get<RootOfUnity>(r).order == 12);

  const auto p = find_witness(AlgebraicNumberSpec::make(IntPolynomial{5, -6, 5}));
  REQUIRE(std::holds_alternative<WitnessCertificate>(p));
  CHECK(std::holds_alternative<NonArchimedeanPlace>(std::get<WitnessCertificate>(p).place));
  CHECK(std::get<WitnessCertificate>(p).conditionality == Conditionality::Unconditional);

  const auto a = find_witness(AlgebraicNumberSpec::make(IntPolynomial{-1, -1, 1}));
  REQUIRE(std::holds_alternative<WitnessCertificate>(a));
  CHECK(std::holds_alternative<ArchimedeanPlace>(std::get<WitnessCertificate>(a).place));

  const auto u = find_witness(AlgebraicNumberSpec::unchecked(IntPolynomial{-1, -1, 1}));
  CHECK(std::get<WitnessCertificate>(u).conditionality == Conditionality::ConditionalOnIrreducibility);

  CHECK_THROWS_AS(find_witness(AlgebraicNumberSpec::make(IntPolynomial{0, -1, 1})), InvalidArgument);
  CHECK_THROWS_AS(find_witness(AlgebraicNumberSpec::unchecked(IntPolynomial{1, 2, 1})), NotSquarefree);
}

TEST_CASE("Kronecker agreement: roots of unity have boxes on the circle") {
  for (unsigned long d : {3ul, 5ul, 7ul, 8ul, 12ul, 15ul}) {
    const IntPolynomial f = cyclotomic(d);
    const auto w = find_witness(AlgebraicNumberSpec::make(f));
    REQUIRE(std::holds_alternative<RootOfUnity>(w));
    CHECK(std::get<RootOfUnity>(w).order == d);
    CHECK(is_algebraic_integer(f));
    for (const auto& b : isolate_roots(f, Rational(1, 1024))) {
      CHECK(b.modulus_squared().lo <= 1);
      CHECK(b.modulus_squared().hi >= 1);
    }
  }
}

TEST_CASE("root selectors") {
  const auto boxes = isolate_roots(IntPolynomial{-1, -1, 1}, Rational(1, 1024));
  CHECK_NOTHROW(AlgebraicNumberSpec::make(IntPolynomial{-1, -1, 1}, boxes[1]));
  const ComplexBox both{{-2, 2}, {-1, 1}};
  CHECK_THROWS_AS(AlgebraicNumberSpec::make(IntPolynomial{-1, -1, 1}, both), InvalidArgument);
}

TEST_CASE("product formula") {
  CHECK(product_formula_check(50));
  CHECK(product_formula_check(1));
  CHECK(product_formula_check(Rational(-3, 4)));
  CHECK_THROWS_AS(product_formula_check(0), InvalidArgument);
}
