#include "padicert/certificate.hpp"

#include "padicert/error.hpp"

namespace padicert {

namespace {

Integer integer_from_json(const Json& j) {
  if (!j.is_string()) throw InvalidArgument("expected an integer string");
  Integer n;
  if (n.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("malformed integer string");
  return n;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidArgument(std::string("document lacks field '") + name + "'");
  return j.at(name);
}

Json point_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Json cylinder_to_json(const Cylinder& c) {
  return {{"prime", to_string(c.prime)}, {"center", point_to_json(c.center)}, {"depth", c.depth}};
}

Json density_to_json(const PolyDensity& d) {
  return {{"f", d.f.to_string()}, {"variables", d.f.nvars()}, {"root_index", d.root_index}};
}

Json result_fields(const IntegrationResult& r) {
  return {{"value", to_json(r.value)},
          {"approximate_decimal", to_decimal(r.value.midpoint(), 15)},
          {"ledger", to_json(r.ledger)}};
}

Json place_to_json(const Place& place) {
  if (const auto* a = std::get_if<ArchimedeanPlace>(&place)) {
    return {{"type", "archimedean"}, {"box", to_json(a->root_box)}, {"root_index", a->root_index}};
  }
  const auto& na = std::get<NonArchimedeanPlace>(place);
  return {{"type", "non_archimedean"},
          {"prime", to_string(na.prime)},
          {"slope", to_json(na.slope)},
          {"segment_index", na.segment_index}};
}

Json spec_to_json(const ProjAutSpec& spec) {
  if (const auto* m = std::get_if<MatrixAutomorphism>(&spec)) return {{"matrix", m->entries.to_string()}};
  Json eig = Json::array();
  for (const auto& a : std::get<DiagonalAutomorphism>(spec).eigenvalues) eig.push_back(to_json(a.defining_poly()));
  return {{"eigenvalues", eig}, {"normalization", "leading eigenvalue 1"}};
}

}  // namespace

Json to_json(const Rational& q) { return {{"num", to_string(q.get_num())}, {"den", to_string(q.get_den())}}; }

Rational rational_from_json(const Json& j) {
  Rational q(integer_from_json(field(j, "num")), integer_from_json(field(j, "den")));
  if (q.get_den() == 0) throw InvalidArgument("zero denominator in document");
  q.canonicalize();
  return q;
}

Json to_json(const IntPolynomial& f) {
  Json out = Json::array();
  for (const auto& c : f.coefficients()) out.push_back(to_string(c));
  return out;
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial must be a coefficient list");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return IntPolynomial(std::move(c));
}

Json to_json(const RationalInterval& r) { return {{"lo", to_json(r.lo)}, {"hi", to_json(r.hi)}}; }

RationalInterval interval_from_json(const Json& j) {
  RationalInterval r{rational_from_json(field(j, "lo")), rational_from_json(field(j, "hi"))};
  if (r.lo > r.hi) throw InvalidArgument("interval with lo > hi");
  return r;
}

Json to_json(const ComplexBox& b) { return {{"re", to_json(b.re)}, {"im", to_json(b.im)}}; }

ComplexBox box_from_json(const Json& j) { return {interval_from_json(field(j, "re")), interval_from_json(field(j, "im"))}; }

Json to_json(const WitnessCertificate& cert) {
  Json out;
  out["alpha_poly"] = to_json(cert.alpha_poly);
  const bool arch = std::holds_alternative<ArchimedeanPlace>(cert.place);
  out["case"] = arch ? "archimedean" : "non_archimedean";
  out["place"] = place_to_json(cert.place);
  if (const auto* q = std::get_if<Rational>(&cert.norm_bound)) {
    out["norm_bound"] = to_json(*q);
  } else {
    const auto& pp = std::get<PPower>(cert.norm_bound);
    // Written as the power itself: the bound is p^exponent.
    out["norm_bound"] = {{"p", to_string(pp.prime())}, {"exponent", to_json(-pp.exponent())}};
  }
  out["conditionality"] = cert.conditionality == Conditionality::Unconditional ? "unconditional"
                                                                               : "conditional_on_irreducibility";
  if (!arch) out["slope_convention"] = kSlopeConvention;
  if (cert.modulus) out["modulus"] = to_json(*cert.modulus);
  return out;
}

WitnessCertificate witness_from_json(const Json& j) {
  WitnessCertificate cert;
  cert.alpha_poly = polynomial_from_json(field(j, "alpha_poly"));
  const Json& place = field(j, "place");
  const std::string type = field(place, "type").get<std::string>();
  const Json& bound = field(j, "norm_bound");
  if (type == "archimedean") {
    cert.place = ArchimedeanPlace{box_from_json(field(place, "box")), field(place, "root_index").get<std::size_t>()};
    cert.norm_bound = rational_from_json(bound);
  } else if (type == "non_archimedean") {
    const Integer p = integer_from_json(field(place, "prime"));
    cert.place = NonArchimedeanPlace{p, rational_from_json(field(place, "slope")),
                                     field(place, "segment_index").get<std::size_t>()};
    cert.norm_bound = PPower(integer_from_json(field(bound, "p")), -rational_from_json(field(bound, "exponent")));
  } else {
    throw InvalidArgument("unknown place type '" + type + "'");
  }
  const std::string cond = field(j, "conditionality").get<std::string>();
  if (cond == "unconditional") {
    cert.conditionality = Conditionality::Unconditional;
  } else if (cond == "conditional_on_irreducibility") {
    cert.conditionality = Conditionality::ConditionalOnIrreducibility;
  } else {
    throw InvalidArgument("unknown conditionality '" + cond + "'");
  }
  if (j.contains("modulus")) cert.modulus = interval_from_json(j.at("modulus"));
  return cert;
}

Json witness_document(const IntPolynomial& f, const WitnessResult& result) {
  Json out;
  if (const auto* r = std::get_if<RootOfUnity>(&result)) {
    out["alpha_poly"] = to_json(f.primitive_part());
    out["case"] = "root_of_unity";
    out["order"] = r->order;
  } else {
    out = to_json(std::get<WitnessCertificate>(result));
  }
  out["kind"] = "witness";
  return out;
}

Json order_document(const ProjAutSpec& spec, const OrderVerdict& verdict) {
  Json out;
  out["kind"] = "order";
  out["input"] = spec_to_json(spec);
  if (const auto* fin = std::get_if<FiniteOrder>(&verdict)) {
    out["verdict"] = "finite";
    out["order"] = fin->n;
    out["ratios_checked"] = fin->ratios_checked;
    return out;
  }
  out["verdict"] = "infinite";
  const auto& reason = std::get<InfiniteOrder>(verdict).reason;
  if (const auto* ns = std::get_if<NotSemisimple>(&reason)) {
    out["reason"] = "not_semisimple";
    out["minimal_polynomial"] = to_json(ns->minimal_polynomial);
  } else {
    const auto& ew = std::get<EigenvalueWitness>(reason);
    out["reason"] = "eigenvalue_witness";
    out["certificate"] = to_json(ew.certificate);
    if (ew.eigenvalue_index) {
      out["eigenvalue_index"] = *ew.eigenvalue_index;
    } else {
      out["certificate_subject"] = "eigenvalue ratio";
    }
  }
  return out;
}

Json tile_document(const TilingLedger& ledger) {
  Json translates = Json::array();
  for (const auto& t : ledger.translates) {
    translates.push_back({{"power", t.power},
                          {"spheres", {t.first_sphere, t.last_sphere}},
                          {"measure", to_json(t.measure)},
                          {"predicted", to_json(t.predicted)}});
  }
  return {{"kind", "tile"},
          {"prime", to_string(ledger.prime)},
          {"scale", ledger.scale},
          {"range", ledger.range},
          {"shell_measure", to_json(ledger.shell_measure)},
          {"translates", translates},
          {"disjoint_union", ledger.disjoint_union},
          {"translate_law", ledger.translate_law},
          {"total", to_json(ledger.total)},
          {"annulus_measure", to_json(ledger.annulus_measure)},
          {"balanced", ledger.balanced}};
}

Json to_json(const MeasureLedger& ledger) {
  Json exact = Json::array(), capped = Json::array();
  for (const auto& [v, mu] : ledger.exact) exact.push_back({{"valuation", v}, {"measure", to_json(mu)}});
  for (const auto& [u, mu] : ledger.capped) capped.push_back({{"bound", u}, {"measure", to_json(mu)}});
  return {{"exact", exact}, {"capped", capped}};
}

MeasureLedger ledger_from_json(const Json& j) {
  MeasureLedger out;
  for (const auto& e : field(j, "exact")) out.exact[field(e, "valuation").get<long>()] = rational_from_json(field(e, "measure"));
  for (const auto& e : field(j, "capped")) out.capped[field(e, "bound").get<long>()] = rational_from_json(field(e, "measure"));
  return out;
}

Json integral_document(const PolyDensity& d, const Cylinder& region, long max_depth, const IntegrationResult& r) {
  Json out = result_fields(r);
  out["kind"] = "integral";
  out["density"] = density_to_json(d);
  out["region"] = cylinder_to_json(region);
  out["depth"] = max_depth;
  return out;
}

Json measure_document(const PolyMap& pi, const Cylinder& base, const PolyDensity& d, long max_depth,
                      const IntegrationResult& r) {
  Json out = result_fields(r);
  Json comps = Json::array();
  for (const auto& c : pi.components) comps.push_back(c.to_string());
  out["kind"] = "measure";
  out["map"] = {{"components", comps}, {"variables", pi.source_dimension()}};
  out["base"] = cylinder_to_json(base);
  out["density"] = density_to_json(d);
  out["depth"] = max_depth;
  return out;
}

}  // namespace padicert
