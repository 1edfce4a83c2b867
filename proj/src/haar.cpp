#include "padicert/haar.hpp"

#include <omp.h>

#include <functional>

#include "padicert/error.hpp"
#include "padicert/padic.hpp"

namespace padicert {

Cylinder Cylinder::unit_polydisc(const Integer& prime, std::size_t dimension) {
  return Cylinder{prime, std::vector<Rational>(dimension, Rational(0)), 0};
}

Rational cylinder_measure(const Cylinder& c) {
  if (c.depth < 0) throw InvalidArgument("cylinder depth must be nonnegative");
  return pow(Rational(c.prime), -c.depth * static_cast<long>(c.dimension()));
}

std::size_t PolyMap::source_dimension() const {
  std::size_t n = 1;
  for (const auto& c : components) n = std::max(n, c.nvars());
  return n;
}

MPoly PolyMap::jacobian_det() const {
  const std::size_t n = source_dimension();
  if (components.size() != n) throw InvalidArgument("Jacobian determinant needs a square map");
  std::vector<std::vector<MPoly>> jac(n);
  for (std::size_t i = 0; i < n; ++i) {
    const MPoly ci = components[i].extended(n);
    for (std::size_t j = 0; j < n; ++j) jac[i].push_back(ci.derivative(j));
  }
  return determinant(jac).extended(n);
}

std::vector<Rational> PolyMap::apply(std::span<const Rational> x) const {
  std::vector<Rational> out;
  for (const auto& c : components) out.push_back(c.extended(x.size()).evaluate(x));
  return out;
}

void MeasureLedger::merge(const MeasureLedger& other) {
  for (const auto& [v, m] : other.exact) exact[v] += m;
  for (const auto& [u, m] : other.capped) capped[u] += m;
}

Rational MeasureLedger::exact_measure() const {
  Rational s = 0;
  for (const auto& [v, m] : exact) s += m;
  return s;
}

Rational MeasureLedger::capped_measure() const {
  Rational s = 0;
  for (const auto& [u, m] : capped) s += m;
  return s;
}

RationalInterval ledger_interval(const MeasureLedger& ledger, const Integer& p, unsigned root_index,
                                 long slack_exponent) {
  const unsigned bits =
      static_cast<unsigned>(std::max<long>(slack_exponent, 1) * static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 2)) + 2);
  RationalInterval out{0, 0};
  for (const auto& [v, m] : ledger.exact) {
    const auto [lo, hi] = PPower(p, Rational(v, root_index)).enclose(bits);
    out.lo += m * lo;
    out.hi += m * hi;
  }
  for (const auto& [u, m] : ledger.capped) out.hi += m * PPower(p, Rational(u, root_index)).enclose(bits).second;
  return out;
}

namespace {

struct Node {
  std::vector<Integer> center;  // canonical residues in [0, p^depth)
  long depth = 0;
};

// Returns true when the node must be split; otherwise records its contribution.
using Visitor = std::function<bool(const Node&, MeasureLedger&)>;

std::vector<Node> children(const Node& node, const Integer& p) {
  const std::size_t n = node.center.size();
  const Integer step = pow(p, static_cast<unsigned long>(node.depth));
  const unsigned long pu = p.get_ui();
  std::vector<Node> out;
  std::vector<unsigned long> digit(n, 0);
  for (;;) {
    Node child{node.center, node.depth + 1};
    for (std::size_t i = 0; i < n; ++i) child.center[i] += step * digit[i];
    out.push_back(std::move(child));
    std::size_t i = 0;
    while (i < n && ++digit[i] == pu) digit[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// Serial reference: depth-first walk.
MeasureLedger walk_serial(const Node& root, const Integer& p, const Visitor& visit) {
  MeasureLedger ledger;
  std::vector<Node> stack{root};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (visit(node, ledger)) {
      for (auto& c : children(node, p)) stack.push_back(std::move(c));
    }
  }
  return ledger;
}

// Breadth-first until there is enough independent work, then one serial walk
// per frontier node in parallel. Ledgers are exact, so the merge order does
// not affect the result.
MeasureLedger walk_parallel(const Node& root, const Integer& p, const Visitor& visit) {
  const std::size_t target = 16 * static_cast<std::size_t>(omp_get_max_threads());
  MeasureLedger ledger;
  std::vector<Node> frontier{root};
  while (!frontier.empty() && frontier.size() < target) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      if (visit(node, ledger)) {
        for (auto& c : children(node, p)) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  const long count = static_cast<long>(frontier.size());
  std::vector<MeasureLedger> partial(frontier.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) partial[k] = walk_serial(frontier[k], p, visit);
  for (const auto& part : partial) ledger.merge(part);
  return ledger;
}

MeasureLedger walk(const Node& root, const Integer& p, const Visitor& visit, Execution execution) {
  return execution == Execution::Parallel ? walk_parallel(root, p, visit) : walk_serial(root, p, visit);
}

Integer canonical_residue(const Rational& x, const Integer& p, long depth) {
  const Integer modulus = pow(p, static_cast<unsigned long>(depth));
  if (x.get_den() % p == 0) throw InvalidArgument("cylinder center is not p-integral: " + to_string(x));
  if (depth == 0) return 0;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), modulus.get_mpz_t());
  Integer r = x.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

Node root_node(const Cylinder& c) {
  require_prime(c.prime);
  if (c.depth < 0) throw InvalidArgument("cylinder depth must be nonnegative");
  if (c.dimension() == 0) throw InvalidArgument("cylinder dimension must be positive");
  Node node{{}, c.depth};
  for (const auto& x : c.center) node.center.push_back(canonical_residue(x, c.prime, c.depth));
  return node;
}

// v_p(x - y) >= k, with x, y p-integral.
bool congruent(const Rational& x, const Rational& y, const Integer& p, long k) {
  if (k <= 0 || x == y) return true;
  return *valuation(Rational(x - y), p) >= k;
}

void validate_density(const PolyDensity& d, const Integer& p) {
  if (d.root_index == 0) throw InvalidArgument("density root index must be at least 1");
  if (d.f.is_zero()) throw InvalidArgument("density polynomial must be nonzero");
  if (!d.f.is_p_integral(p)) throw NonIntegralDensity("density polynomial has coefficients outside Z_p");
}

// Integration step on a single node; pure, so safe to call concurrently.
bool integrate_step(const MPoly& f, const Integer& p, long max_depth, const Node& node, MeasureLedger& out) {
  const Rational value = f.evaluate(std::span<const Integer>(node.center));
  const auto v = valuation(value, p);
  const Rational mu = pow(Rational(p), -node.depth * static_cast<long>(node.center.size()));
  if (v && *v < node.depth) {
    out.exact[*v] += mu;
    return false;
  }
  if (node.depth >= max_depth) {
    out.capped[node.depth] += mu;
    return false;
  }
  return true;
}

}  // namespace

IntegrationResult integrate(const PolyDensity& d, const Cylinder& region, long max_depth, Execution execution) {
  validate_density(d, region.prime);
  if (max_depth <= 0) throw DepthZero("integration depth must be positive");
  if (region.depth > max_depth) throw InvalidArgument("region is deeper than the integration depth");
  if (d.f.nvars() > region.dimension()) throw InvalidArgument("density has more variables than the region");
  const MPoly f = d.f.extended(region.dimension());
  const Integer& p = region.prime;
  const Visitor visit = [&](const Node& node, MeasureLedger& out) {
    return integrate_step(f, p, max_depth, node, out);
  };
  IntegrationResult result;
  result.ledger = walk(root_node(region), p, visit, execution);
  result.value = ledger_interval(result.ledger, p, d.root_index, max_depth + 2);
  return result;
}

DensityScaling clear_denominators(const PolyDensity& d, const Integer& p) {
  require_prime(p);
  if (d.f.is_zero()) throw InvalidArgument("density polynomial must be nonzero");
  const long shift = -*d.f.min_valuation(p);
  return {{pow(Rational(p), shift) * d.f, d.root_index}, shift};
}

IntegrationResult pushforward_cylinder_measure(const PolyMap& pi, const Cylinder& base, const PolyDensity& d,
                                               long max_depth, Execution execution) {
  const Integer& p = base.prime;
  validate_density(d, p);
  if (max_depth <= 0) throw DepthZero("integration depth must be positive");
  if (pi.target_dimension() != base.dimension()) throw InvalidArgument("map target dimension differs from base");
  for (const auto& c : pi.components) {
    if (!c.is_p_integral(p)) throw NonIntegralDensity("map component has coefficients outside Z_p");
  }
  const std::size_t n = std::max(pi.source_dimension(), d.f.nvars());
  std::vector<MPoly> comps;
  for (const auto& c : pi.components) comps.push_back(c.extended(n));
  const MPoly f = d.f.extended(n);
  const Node base_node = root_node(base);
  std::vector<Rational> target;
  for (const auto& b : base_node.center) target.emplace_back(b);

  const Visitor visit = [&](const Node& node, MeasureLedger& out) {
    std::vector<Rational> image;
    for (const auto& c : comps) image.push_back(c.evaluate(std::span<const Integer>(node.center)));
    // pi(x) == pi(a) mod p^depth on the node
    const long decided = std::min(node.depth, base.depth);
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (!congruent(image[i], target[i], p, decided)) return false;  // outside the preimage
    }
    if (node.depth >= base.depth) return integrate_step(f, p, max_depth, node, out);
    if (node.depth >= max_depth) {
      // Straddles the preimage boundary; the density is bounded by its value here.
      const Rational mu = pow(Rational(p), -node.depth * static_cast<long>(n));
      const auto v = valuation(f.evaluate(std::span<const Integer>(node.center)), p);
      out.capped[v && *v < node.depth ? *v : node.depth] += mu;
      return false;
    }
    return true;
  };
  IntegrationResult result;
  result.ledger = walk(root_node(Cylinder::unit_polydisc(p, n)), p, visit, execution);
  result.value = ledger_interval(result.ledger, p, d.root_index, max_depth + 2);
  return result;
}

namespace {

void require_unit_jacobian(const MPoly& jac, const Integer& p) {
  const Monomial zero(jac.nvars(), 0);
  bool unit_constant = false;
  for (const auto& [m, c] : jac.terms()) {
    const long v = *valuation(c, p);
    if (m == zero) {
      unit_constant = v == 0;
    } else if (v < 1) {
      throw NonUnitJacobian("Jacobian determinant has a non-constant term outside pZ_p");
    }
  }
  if (!unit_constant) throw NonUnitJacobian("Jacobian determinant has no unit constant term");
}

std::vector<Rational> reduce_mod(const std::vector<Rational>& x, const Integer& p, long depth) {
  std::vector<Rational> out;
  for (const auto& v : x) out.emplace_back(canonical_residue(v, p, depth));
  return out;
}

}  // namespace

ChangeOfVariablesReport change_of_variables_check(const PolyMap& phi, const PolyDensity& d, const Cylinder& region,
                                                  long max_depth) {
  const Integer& p = region.prime;
  const std::size_t n = region.dimension();
  if (phi.target_dimension() != n || phi.source_dimension() > n) {
    throw InvalidArgument("change of variables needs a map from the region's space to itself");
  }
  PolyMap square{{}};
  for (const auto& c : phi.components) {
    if (!c.is_p_integral(p)) throw NonIntegralDensity("map component has coefficients outside Z_p");
    square.components.push_back(c.extended(n));
  }
  ChangeOfVariablesReport report;
  report.jacobian = square.jacobian_det();
  require_unit_jacobian(report.jacobian, p);
  validate_density(d, p);
  const MPoly f = d.f.extended(n);

  // Left side: the image of a cylinder of depth >= 1 under a unit-Jacobian map
  // is the cylinder of the same depth around the image of its centre
  // (Hensel); the unit polydisc is covered by its residue classes mod p.
  std::vector<Cylinder> image_cells;
  if (region.depth >= 1) {
    image_cells.push_back({p, reduce_mod(square.apply(region.center), p, region.depth), region.depth});
  } else {
    const unsigned long pu = p.get_ui();
    double cells = 1;
    for (std::size_t i = 0; i < n; ++i) cells *= static_cast<double>(pu);
    if (cells > (1 << 20)) throw InvalidArgument("too many residue classes to check injectivity mod p");
    std::map<std::vector<Rational>, int> seen;
    std::vector<unsigned long> digit(n, 0);
    for (;;) {
      std::vector<Rational> a;
      for (auto dgt : digit) a.emplace_back(Integer(dgt));
      auto image = reduce_mod(square.apply(a), p, 1);
      if (!seen.emplace(image, 0).second) throw InvalidArgument("map is not injective modulo p");
      image_cells.push_back({p, std::move(image), 1});
      std::size_t i = 0;
      while (i < n && ++digit[i] == pu) digit[i++] = 0;
      if (i == n) break;
    }
  }
  MeasureLedger lhs_ledger;
  for (const auto& cell : image_cells) lhs_ledger.merge(integrate({f, d.root_index}, cell, max_depth).ledger);
  report.lhs = ledger_interval(lhs_ledger, p, d.root_index, max_depth + 2);

  // Right side: |f o phi|^(1/m) |J| = |(f o phi) J^m|^(1/m).
  const MPoly pulled = f.compose(square.components) * report.jacobian.pow(d.root_index);
  const IntegrationResult rhs = integrate({pulled, d.root_index}, region, max_depth);
  report.rhs = rhs.value;
  report.overlap = report.lhs.overlaps(report.rhs);
  report.identical = report.lhs == report.rhs;
  return report;
}

ScalingReport scaling_law_check(const Rational& c, const PolyDensity& d, const Cylinder& region, long max_depth) {
  if (c == 0) throw InvalidArgument("scaling constant must be nonzero");
  const Integer& p = region.prime;
  const long v = *valuation(c, p);
  ScalingReport report;
  report.reference = integrate(d, region, max_depth);
  report.scaled = integrate({c * d.f, d.root_index}, region, max_depth + std::max(v, 0L));

  MeasureLedger shifted;
  for (const auto& [w, m] : report.reference.ledger.exact) shifted.exact[w + v] = m;
  for (const auto& [u, m] : report.reference.ledger.capped) shifted.capped[u + v] = m;
  report.ledger_shift_exact = shifted == report.scaled.ledger;

  const auto [flo, fhi] = PPower(p, Rational(v, d.root_index)).enclose(
      static_cast<unsigned>((max_depth + 2 + std::abs(v)) * static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 2)) + 2));
  report.predicted = {report.reference.value.lo * flo, report.reference.value.hi * fhi};
  // With m == 1 every quantity is rational and the identity is exact.
  const bool interval_ok = d.root_index == 1 ? report.scaled.value == report.predicted
                                             : report.scaled.value.overlaps(report.predicted);
  report.holds = report.ledger_shift_exact && interval_ok;
  return report;
}

}  // namespace padicert
