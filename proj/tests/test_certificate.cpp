#include <doctest.h>

#include "padicert/certificate.hpp"
#include "padicert/verify.hpp"

using namespace padicert;

namespace {

Json witness_doc(const IntPolynomial& f) { return witness_document(f, find_witness(AlgebraicNumberSpec::make(f))); }

Json order_doc(const char* matrix) {
  const ProjAutSpec spec = MatrixAutomorphism{QMatrix::parse(matrix)};
  return order_document(spec, projective_order(spec));
}

Json integral_doc(const char* f, long p, long depth, unsigned m = 1) {
  const PolyDensity d{MPoly::parse(f), m};
  const Cylinder region = Cylinder::unit_polydisc(p, 1);
  return integral_document(d, region, depth, integrate(d, region, depth));
}

bool accepted(const Json& doc) { return verify_document(doc).ok; }

}  // namespace

TEST_CASE("rational and polynomial encodings round-trip") {
  const Integer big = pow(Integer(10), 40) + 7;
  for (const Rational& q : {Rational(0), Rational(-3, 7), Rational(big, 11), Rational(1, big)}) {
    CHECK(rational_from_json(to_json(q)) == q);
    CHECK(rational_from_json(Json::parse(to_json(q).dump())) == q);
  }
  const IntPolynomial f{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  CHECK(polynomial_from_json(to_json(f)) == f);
  CHECK(to_json(IntPolynomial{3, 0, -2})[0] == "3");  // ascending order
  const RationalInterval r{Rational(-1, 3), Rational(5, 2)};
  CHECK(interval_from_json(to_json(r)) == r);
  const ComplexBox b{{Rational(1, 2), Rational(3, 4)}, {Rational(-1, 8), Rational(1, 8)}};
  const ComplexBox back = box_from_json(to_json(b));
  CHECK(back.re == b.re);
  CHECK(back.im == b.im);
}

TEST_CASE("ledger encoding round-trips") {
  const PolyDensity d{MPoly::parse("x^2 - 1"), 2};
  const auto r = integrate(d, Cylinder::unit_polydisc(3, 1), 6);
  CHECK(ledger_from_json(to_json(r.ledger)) == r.ledger);
}

TEST_CASE("witness certificates round-trip and verify") {
  for (const IntPolynomial& f : {IntPolynomial{5, -6, 5}, IntPolynomial{-1, -1, 1}, IntPolynomial{1, 0, 0, 4},
                                 IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}}) {
    const Json doc = witness_doc(f);
    CHECK(doc.at("kind") == "witness");
    const WitnessCertificate cert = witness_from_json(doc);
    CHECK(to_json(witness_from_json(Json::parse(to_json(cert).dump()))) == to_json(cert));
    CHECK(cert.alpha_poly == f);
    CHECK(accepted(doc));
    CHECK(accepted(Json::parse(doc.dump())));
  }
  const Json unity = witness_doc(IntPolynomial{1, -1, 1});
  CHECK(unity.at("case") == "root_of_unity");
  CHECK(unity.at("order") == 6);
  CHECK(accepted(unity));
}

TEST_CASE("tampered witness documents are rejected") {
  SUBCASE("wrong slope") {
    Json doc = witness_doc(IntPolynomial{5, -6, 5});
    doc["place"]["slope"] = to_json(Rational(2));
    doc["norm_bound"]["exponent"] = to_json(Rational(2));
    CHECK_FALSE(accepted(doc));
  }
  SUBCASE("prime that does not divide the leading coefficient") {
    Json doc = witness_doc(IntPolynomial{5, -6, 5});
    doc["place"]["prime"] = "7";
    doc["norm_bound"]["p"] = "7";
    CHECK_FALSE(accepted(doc));
  }
  SUBCASE("inflated norm bound") {
    Json doc = witness_doc(IntPolynomial{5, -6, 5});
    doc["norm_bound"]["exponent"] = to_json(Rational(3));
    CHECK_FALSE(accepted(doc));
  }
  SUBCASE("swapped polynomial") {
    Json doc = witness_doc(IntPolynomial{-1, -1, 1});
    doc["alpha_poly"] = to_json(IntPolynomial{1, 0, 1});
    CHECK_FALSE(accepted(doc));
  }
  SUBCASE("box moved onto the unit circle") {
    Json doc = witness_doc(IntPolynomial{-1, -1, 1});
    const Rational shift = rational_from_json(doc["place"]["box"]["re"]["lo"]);
    doc["place"]["box"]["re"]["lo"] = to_json(shift / 2);
    doc["place"]["box"]["re"]["hi"] = to_json(shift / 2 + Rational(1, 1 << 20));
    CHECK_FALSE(accepted(doc));
  }
  SUBCASE("non-minimal root-of-unity order") {
    Json doc = witness_doc(IntPolynomial{1, 0, 1});
    doc["order"] = 8;
    CHECK_FALSE(accepted(doc));
    doc["order"] = 2;
    CHECK_FALSE(accepted(doc));
  }
  SUBCASE("malformed") {
    CHECK_FALSE(accepted(Json::parse(R"({"kind": "witness"})")));
    CHECK_FALSE(accepted(Json::parse(R"({"kind": "nonsense"})")));
    CHECK_FALSE(accepted(Json::parse("[1, 2]")));
  }
}

TEST_CASE("order documents") {
  for (const char* m : {"0,-1;1,0", "1,1;0,1", "2,1;1,1", "0,-1;1,-1", "3,0;0,3"}) {
    const Json doc = order_doc(m);
    CHECK(doc.at("kind") == "order");
    CHECK(accepted(doc));
  }
  Json finite = order_doc("0,-1;1,0");
  finite["order"] = 4;
  CHECK_FALSE(accepted(finite));
  finite["order"] = 1;
  CHECK_FALSE(accepted(finite));

  Json jordan = order_doc("1,1;0,1");
  jordan["input"]["matrix"] = "1,0;0,1";
  CHECK_FALSE(accepted(jordan));

  Json hyperbolic = order_doc("2,1;1,1");
  hyperbolic["verdict"] = "finite";
  hyperbolic["order"] = 6;
  CHECK_FALSE(accepted(hyperbolic));

  DiagonalAutomorphism d;
  d.eigenvalues = {AlgebraicNumberSpec::make(IntPolynomial{1, 1}), AlgebraicNumberSpec::make(IntPolynomial{1, 0, 1})};
  const Json diag = order_document(ProjAutSpec{d}, certify_diagonal(d));
  CHECK(diag.at("order") == 4);
  CHECK(accepted(diag));
  Json bad = diag;
  bad["order"] = 2;
  CHECK_FALSE(accepted(bad));
}

TEST_CASE("tile documents") {
  const Json doc = tile_document(verify_shell_tiling(3, 1, 2));
  CHECK(rational_from_json(doc.at("total")) == Rational(242, 27));
  CHECK(accepted(doc));
  Json bad = doc;
  bad["total"] = to_json(Rational(27) - Rational(1, 9));
  CHECK_FALSE(accepted(bad));
  bad = doc;
  bad["translates"][0]["measure"] = to_json(Rational(1));
  CHECK_FALSE(accepted(bad));
}

TEST_CASE("integral documents") {
  const Json doc = integral_doc("x", 3, 10);
  CHECK(accepted(doc));
  CHECK(accepted(integral_doc("x^2 - 1", 2, 8, 2)));
  Json bad = doc;
  bad["ledger"]["exact"][0]["measure"] = to_json(Rational(1, 2));
  CHECK_FALSE(accepted(bad));
  bad = doc;
  bad["value"]["lo"] = to_json(Rational(3, 4));
  bad["value"]["hi"] = to_json(Rational(3, 4));
  CHECK_FALSE(accepted(bad));
  bad = doc;
  bad["density"]["f"] = "x^2 + 1";
  CHECK_FALSE(accepted(bad));
}

TEST_CASE("measure documents") {
  const PolyMap square{{MPoly::parse("x^2")}};
  const Cylinder base{3, {Rational(1)}, 1};
  const PolyDensity one{MPoly::parse("1"), 1};
  const Json doc = measure_document(square, base, one, 6, pushforward_cylinder_measure(square, base, one, 6));
  CHECK(rational_from_json(doc.at("value").at("lo")) == Rational(2, 3));
  CHECK(accepted(doc));
  Json bad = doc;
  bad["value"]["lo"] = to_json(Rational(1, 3));
  bad["value"]["hi"] = to_json(Rational(1, 3));
  CHECK_FALSE(accepted(bad));
}
