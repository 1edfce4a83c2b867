#pragma once

// Places of a number field where an algebraic number is large.
//
// For a number that is not a root of unity there is always a place with
// |rho(alpha)| > 1: a prime dividing the leading coefficient when the number
// is not an algebraic integer (read off the Newton polygon), otherwise a
// complex embedding, since an algebraic integer with every conjugate on the
// closed unit disc is a root of unity.
//
// Slope convention: Newton polygon slopes are read left to right over the
// points (i, v_p(c_i)); a segment of slope s carries roots of valuation -s,
// so a positive slope means |root|_p = p^s > 1.

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "padicert/algebraic.hpp"
#include "padicert/padic.hpp"
#include "padicert/roots.hpp"

namespace padicert {

struct HullSegment {
  Rational slope;
  long length = 0;
  long start = 0;  // abscissa of the left vertex
};

struct NewtonPolygon {
  Integer prime;
  std::vector<std::pair<long, long>> points;    // (i, v_p(c_i)) for c_i != 0
  std::vector<std::pair<long, long>> vertices;  // lower hull, increasing abscissa
  std::vector<HullSegment> segments;
};

NewtonPolygon newton_polygon(const IntPolynomial& f, const Integer& p);

struct ArchimedeanPlace {
  ComplexBox root_box;
  std::size_t root_index = 0;  // position in the isolate_roots output
};

struct NonArchimedeanPlace {
  Integer prime;
  Rational slope;
  std::size_t segment_index = 0;
};

using Place = std::variant<ArchimedeanPlace, NonArchimedeanPlace>;

/// Exact rational bound (archimedean) or exact power of p (non-archimedean).
using NormBound = std::variant<Rational, PPower>;

enum class Conditionality { Unconditional, ConditionalOnIrreducibility };

struct WitnessCertificate {
  IntPolynomial alpha_poly;
  Place place;
  NormBound norm_bound;
  Conditionality conditionality = Conditionality::Unconditional;
  /// Enclosure of |root| over the certifying box (archimedean only).
  std::optional<RationalInterval> modulus;
};

struct RootOfUnity {
  unsigned long order = 1;
};

using WitnessResult = std::variant<RootOfUnity, WitnessCertificate>;

struct WitnessOptions {
  Rational initial_eps{1, 1 << 20};
  unsigned max_doublings = 40;
  unsigned long prime_search_bound = 1000;
  Execution execution = Execution::Parallel;
};

/// Non-archimedean branch: the smallest prime dividing the leading
/// coefficient of the primitive part yields a positive slope. nullopt iff f is
/// monic up to sign. Throws NotSquarefree.
std::optional<WitnessCertificate> padic_witness(const IntPolynomial& f, const WitnessOptions& options = {});

/// Archimedean branch: refines isolation (halving the width each round) until
/// a box has modulus strictly above 1. nullopt when no root can exceed 1,
/// i.e. every root lies in the closed unit disc by exact bound. Throws
/// NotSquarefree, MaxPrecisionExceeded.
std::optional<WitnessCertificate> archimedean_witness(const IntPolynomial& f, const WitnessOptions& options = {});

/// Root of unity (with its order), a p-adic witness, or an archimedean one.
/// Certificates are conditional when irreducibility was not proven. Throws
/// InvalidArgument for polynomials with the root 0, which has no witness.
WitnessResult find_witness(const AlgebraicNumberSpec& alpha, const WitnessOptions& options = {});

/// |r|_inf * prod_p |r|_p == 1, evaluated exactly.
bool product_formula_check(const Rational& r);

}  // namespace padicert
