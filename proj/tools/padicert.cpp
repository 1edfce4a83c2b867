// padicert: command-line front end.
//
// Exit codes: 0 finite order / root of unity / balanced ledger / accepted
// certificate, 2 infinite order / witness found, 1 any error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "padicert/certificate.hpp"
#include "padicert/error.hpp"
#include "padicert/verify.hpp"

using namespace padicert;

namespace {

struct RunConfig {
  long max_depth = 10;
  unsigned max_doublings = 40;
  unsigned long prime_search_bound = 1000;
  bool json = false;
};

WitnessOptions witness_options(const RunConfig& cfg) {
  WitnessOptions o;
  o.max_doublings = cfg.max_doublings;
  o.prime_search_bound = cfg.prime_search_bound;
  return o;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_rational(part));
  return out;
}

void emit(const RunConfig& cfg, const Json& doc, const std::string& text) {
  if (cfg.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string describe(const WitnessCertificate& cert) {
  std::ostringstream out;
  if (const auto* na = std::get_if<NonArchimedeanPlace>(&cert.place)) {
    out << "non-archimedean place p = " << to_string(na->prime) << ", Newton slope " << to_string(na->slope)
        << " (root valuation = -slope), |alpha|_p = " << std::get<PPower>(cert.norm_bound).to_string() << " > 1";
  } else {
    const auto& a = std::get<ArchimedeanPlace>(cert.place);
    const Rational& q = std::get<Rational>(cert.norm_bound);
    out << "archimedean place, root box " << a.root_box.to_string() << ", |alpha| >= " << to_string(q)
        << " (approximately " << to_decimal(q, 12) << ")";
    if (cert.modulus) {
      out << ", |alpha| in [" << to_decimal(cert.modulus->lo, 12) << ", " << to_decimal(cert.modulus->hi, 12)
          << "] (approximate decimals)";
    }
  }
  if (cert.conditionality == Conditionality::ConditionalOnIrreducibility) out << ", conditional on irreducibility";
  return out.str();
}

std::string describe(const IntegrationResult& r) {
  std::ostringstream out;
  out << "lo = " << to_string(r.value.lo) << "\nhi = " << to_string(r.value.hi) << "\n";
  if (r.value.is_exact()) {
    out << "exact value " << to_string(r.value.lo) << "\n";
  } else {
    out << "approximately " << to_decimal(r.value.midpoint(), 15) << " (width " << to_string(r.value.width())
        << ")\n";
  }
  return out.str();
}

int cmd_witness(const std::string& poly, const RunConfig& cfg) {
  const IntPolynomial f = IntPolynomial::parse(poly);
  const WitnessResult w = find_witness(AlgebraicNumberSpec::make(f), witness_options(cfg));
  if (const auto* r = std::get_if<RootOfUnity>(&w)) {
    emit(cfg, witness_document(f, w), "root of unity of order " + std::to_string(r->order) + "\n");
    return 0;
  }
  emit(cfg, witness_document(f, w), "witness: " + describe(std::get<WitnessCertificate>(w)) + "\n");
  return 2;
}

int cmd_order(const std::string& matrix, const std::string& eigenvalues, const RunConfig& cfg) {
  if (matrix.empty() == eigenvalues.empty()) throw InvalidArgument("give exactly one of --matrix, --eigenvalues");
  ProjAutSpec spec;
  if (!matrix.empty()) {
    spec = MatrixAutomorphism{QMatrix::parse(matrix)};
  } else {
    DiagonalAutomorphism diag;
    for (const auto& part : split(eigenvalues, ';')) diag.eigenvalues.push_back(AlgebraicNumberSpec::make(IntPolynomial::parse(part)));
    spec = diag;
  }
  const OrderVerdict verdict = projective_order(spec, witness_options(cfg));
  const Json doc = order_document(spec, verdict);
  if (const auto* fin = std::get_if<FiniteOrder>(&verdict)) {
    std::string text = "finite projective order " + std::to_string(fin->n) + "\n";
    if (!fin->ratios_checked) text += "note: eigenvalue ratios not cross-checked (degree above bound)\n";
    emit(cfg, doc, text);
    return 0;
  }
  const auto& reason = std::get<InfiniteOrder>(verdict).reason;
  if (const auto* ns = std::get_if<NotSemisimple>(&reason)) {
    emit(cfg, doc, "infinite order: not semisimple, minimal polynomial " + ns->minimal_polynomial.to_string() + "\n");
  } else {
    const auto& ew = std::get<EigenvalueWitness>(reason);
    const std::string subject =
        ew.eigenvalue_index ? "eigenvalue " + std::to_string(*ew.eigenvalue_index + 1) : "an eigenvalue ratio";
    emit(cfg, doc, "infinite order: " + subject + " is large at a " + describe(ew.certificate) + "\n");
  }
  return 2;
}

int cmd_integrate(const std::string& prime, const std::string& density, unsigned root_index,
                  const std::string& center, long region_depth, const RunConfig& cfg) {
  const Integer p = parse_rational(prime).get_num();
  const PolyDensity d{MPoly::parse(density), root_index};
  Cylinder region = Cylinder::unit_polydisc(p, d.f.nvars());
  if (!center.empty()) region.center = parse_point(center);
  region.depth = region_depth;
  const IntegrationResult r = integrate(d, region, cfg.max_depth);
  emit(cfg, integral_document(d, region, cfg.max_depth, r), describe(r));
  return 0;
}

int cmd_measure(const std::string& prime, const std::string& map, const std::string& base_center, long base_depth,
                const std::string& density, unsigned root_index, const RunConfig& cfg) {
  const Integer p = parse_rational(prime).get_num();
  PolyMap pi;
  std::size_t n = 1;
  for (const auto& c : split(map, ';')) {
    pi.components.push_back(MPoly::parse(c));
    n = std::max(n, pi.components.back().nvars());
  }
  for (auto& c : pi.components) c = c.extended(n);
  const PolyDensity d{MPoly::parse(density, n), root_index};
  Cylinder base = Cylinder::unit_polydisc(p, pi.target_dimension());
  if (!base_center.empty()) base.center = parse_point(base_center);
  base.depth = base_depth;
  const IntegrationResult r = pushforward_cylinder_measure(pi, base, d, cfg.max_depth);
  emit(cfg, measure_document(pi, base, d, cfg.max_depth, r), describe(r));
  return 0;
}

int cmd_tile(const std::string& prime, long scale, long range, const RunConfig& cfg) {
  const TilingLedger ledger = verify_shell_tiling(parse_rational(prime).get_num(), scale, range);
  std::ostringstream text;
  text << "shell measure " << to_string(ledger.shell_measure) << "\n";
  for (const auto& t : ledger.translates) {
    text << "N = " << t.power << ": spheres " << t.first_sphere << ".." << t.last_sphere << ", measure "
         << to_string(t.measure) << "\n";
  }
  text << "total " << to_string(ledger.total) << ", annulus " << to_string(ledger.annulus_measure) << "\n";
  text << (ledger.balanced ? "balanced" : "NOT balanced") << "\n";
  emit(cfg, tile_document(ledger), text.str());
  return ledger.balanced ? 0 : 2;
}

int cmd_verify(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON", e.byte);
  }
  const VerifyOutcome outcome = verify_document(doc);
  if (!outcome.ok) {
    std::cerr << "rejected: " << outcome.detail << "\n";
    return 1;
  }
  std::cout << "verified: " << outcome.detail << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact p-adic integration, root-of-unity detection and finite-order certificates"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "Print the JSON certificate document");
    sub->add_option("--max-doublings", cfg.max_doublings, "Refinement rounds for root isolation")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--prime-bound", cfg.prime_search_bound, "Trial-division bound for witness primes")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };
  auto add_depth = [&](CLI::App* sub) {
    sub->add_option("--depth", cfg.max_depth, "Subdivision depth D")->capture_default_str()->check(CLI::PositiveNumber);
  };

  std::string poly;
  auto* witness = app.add_subcommand("witness", "Find a place where a root is large, or its root-of-unity order");
  witness->add_option("poly", poly, "Polynomial: [c0, c1, ...] ascending, or e.g. \"5x^2 - 6x + 5\"")->required();
  add_common(witness);

  std::string matrix, eigenvalues;
  auto* order = app.add_subcommand("order", "Decide the order of a projective automorphism");
  auto* matrix_opt = order->add_option("--matrix", matrix, "Rows separated by ';', entries by ','");
  auto* eig_opt = order->add_option("--eigenvalues", eigenvalues,
                                    "Defining polynomials of a_1..a_N separated by ';' (a_0 = 1 is implicit)");
  matrix_opt->excludes(eig_opt);
  add_common(order);

  std::string prime, density = "1", center;
  unsigned root_index = 1;
  long region_depth = 0;
  auto* integ = app.add_subcommand("integrate", "Integrate |f|^(1/m) over a cylinder");
  integ->add_option("--prime", prime, "Prime p")->required();
  integ->add_option("--density", density, "Density polynomial f in x (or x1..xn)")->capture_default_str();
  integ->add_option("--root-index", root_index, "m in |f|^(1/m)")->capture_default_str()->check(CLI::PositiveNumber);
  integ->add_option("--center", center, "Cylinder centre, comma separated (default 0)");
  integ->add_option("--region-depth", region_depth, "Cylinder depth")->capture_default_str()->check(CLI::NonNegativeNumber);
  add_depth(integ);
  add_common(integ);

  std::string map = "x", base_center;
  long base_depth = 0;
  auto* measure = app.add_subcommand("measure", "Pushforward of a density to a base cylinder");
  measure->add_option("--prime", prime, "Prime p")->required();
  measure->add_option("--map", map, "Map components separated by ';'")->capture_default_str();
  measure->add_option("--base-center", base_center, "Base cylinder centre, comma separated (default 0)");
  measure->add_option("--base-depth", base_depth, "Base cylinder depth")->capture_default_str()->check(CLI::NonNegativeNumber);
  measure->add_option("--density", density, "Density polynomial on the source")->capture_default_str();
  measure->add_option("--root-index", root_index, "m in |f|^(1/m)")->capture_default_str()->check(CLI::PositiveNumber);
  add_depth(measure);
  add_common(measure);

  long scale = 1, range = 1;
  auto* tile = app.add_subcommand("tile", "Exact shell-tiling ledger for |alpha| = p^s");
  tile->add_option("--prime", prime, "Prime p")->required();
  tile->add_option("--scale", scale, "s with |alpha| = p^s")->capture_default_str()->check(CLI::PositiveNumber);
  tile->add_option("--range", range, "Translates N = -M..M")->capture_default_str()->check(CLI::NonNegativeNumber);
  add_common(tile);

  std::string path;
  auto* verify = app.add_subcommand("verify", "Re-check a JSON certificate document from scratch");
  verify->add_option("file", path, "Document path, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*witness) return cmd_witness(poly, cfg);
    if (*order) return cmd_order(matrix, eigenvalues, cfg);
    if (*integ) return cmd_integrate(prime, density, root_index, center, region_depth, cfg);
    if (*measure) return cmd_measure(prime, map, base_center, base_depth, density, root_index, cfg);
    if (*tile) return cmd_tile(prime, scale, range, cfg);
    if (*verify) return cmd_verify(path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
