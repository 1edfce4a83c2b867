#include "padicert/places.hpp"

#include "padicert/error.hpp"

namespace padicert {

NewtonPolygon newton_polygon(const IntPolynomial& f, const Integer& p) {
  if (f.is_zero()) throw InvalidArgument("Newton polygon of the zero polynomial");
  require_prime(p);
  NewtonPolygon np;
  np.prime = p;
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) np.points.emplace_back(static_cast<long>(i), valuation(c[i], p));
  }
  // Lower hull, monotone chain; collinear middle points are dropped.
  auto& h = np.vertices;
  for (const auto& pt : np.points) {
    while (h.size() >= 2) {
      const auto& o = h[h.size() - 2];
      const auto& a = h.back();
      const long cross = (a.first - o.first) * (pt.second - o.second) - (a.second - o.second) * (pt.first - o.first);
      if (cross > 0) break;
      h.pop_back();
    }
    h.push_back(pt);
  }
  for (std::size_t k = 1; k < h.size(); ++k) {
    const long dx = h[k].first - h[k - 1].first;
    Rational slope(h[k].second - h[k - 1].second, dx);
    slope.canonicalize();
    np.segments.push_back({slope, dx, h[k - 1].first});
  }
  return np;
}

std::optional<WitnessCertificate> padic_witness(const IntPolynomial& f, const WitnessOptions& options) {
  if (f.degree() < 1) throw InvalidArgument("witness search needs a nonconstant polynomial");
  if (!is_squarefree(f)) throw NotSquarefree("padic_witness needs a squarefree polynomial");
  const IntPolynomial g = f.primitive_part();
  if (abs(g.leading()) == 1) return std::nullopt;
  const auto p = smallest_prime_factor(g.leading(), options.prime_search_bound);
  if (!p) throw InvalidArgument("no prime factor of the leading coefficient found below the search bound");
  const NewtonPolygon np = newton_polygon(g, *p);
  for (std::size_t k = 0; k < np.segments.size(); ++k) {
    const Rational& slope = np.segments[k].slope;
    if (slope > 0) {
      return WitnessCertificate{g, NonArchimedeanPlace{*p, slope, k}, PPower(*p, -slope),
                                Conditionality::Unconditional, std::nullopt};
    }
  }
  // Unreachable for primitive g: the hull climbs from a height-0 point to v_p(lc) >= 1.
  throw Error("Newton polygon has no positive slope at a prime dividing the leading coefficient");
}

std::optional<WitnessCertificate> archimedean_witness(const IntPolynomial& f, const WitnessOptions& options) {
  if (f.degree() < 1) throw InvalidArgument("witness search needs a nonconstant polynomial");
  if (!is_squarefree(f)) throw NotSquarefree("archimedean_witness needs a squarefree polynomial");
  const IntPolynomial g = f.primitive_part();
  Rational eps = options.initial_eps;
  IsolationOptions iso;
  iso.execution = options.execution;
  for (unsigned round = 0; round <= options.max_doublings; ++round) {
    const auto boxes = isolate_roots(g, eps, iso);
    std::optional<std::size_t> best;
    bool all_inside = true;
    for (std::size_t k = 0; k < boxes.size(); ++k) {
      const RationalInterval m2 = boxes[k].modulus_squared();
      if (m2.hi > 1) all_inside = false;
      if (m2.lo > 1 && (!best || m2.lo > boxes[*best].modulus_squared().lo)) best = k;
    }
    if (best) {
      const ComplexBox& box = boxes[*best];
      const Rational q = sqrt_lower(box.modulus_squared().lo, 64 + round);
      if (q > 1) {
        return WitnessCertificate{g, ArchimedeanPlace{box, *best}, q, Conditionality::Unconditional, box.modulus()};
      }
    }
    if (all_inside) return std::nullopt;
    eps /= 2;
  }
  throw MaxPrecisionExceeded("no root box certified modulus > 1 after " + std::to_string(options.max_doublings) +
                             " refinements");
}

WitnessResult find_witness(const AlgebraicNumberSpec& alpha, const WitnessOptions& options) {
  const IntPolynomial& f = alpha.defining_poly();
  if (f[0] == 0) throw InvalidArgument("defining polynomial has the root 0, which has no witness place");
  if (!is_squarefree(f)) throw NotSquarefree("find_witness needs a squarefree defining polynomial");
  if (auto order = root_of_unity_order(f)) return RootOfUnity{*order};
  const Conditionality cond = alpha.irreducibility() == IrreducibilityStatus::Proven
                                  ? Conditionality::Unconditional
                                  : Conditionality::ConditionalOnIrreducibility;
  auto cert = padic_witness(f, options);
  if (!cert) cert = archimedean_witness(f, options);
  // Monic, nonzero constant term, some factor not cyclotomic: Kronecker puts a
  // root strictly outside the unit disc, so the archimedean branch succeeds.
  if (!cert) throw Error("no witness place found for a non-cyclotomic algebraic integer");
  cert->conditionality = cond;
  return *cert;
}

bool product_formula_check(const Rational& r) {
  if (r == 0) throw InvalidArgument("product formula needs a nonzero rational");
  Rational product = abs(r);
  auto apply = [&](const Integer& n) {
    for (const auto& [p, e] : factor(n)) product *= pow(Rational(p), -*valuation(r, p));
  };
  apply(r.get_num());
  apply(r.get_den());
  return product == 1;
}

}  // namespace padicert
