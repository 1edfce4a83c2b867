#pragma once

// Haar measure on Z_p^n and certified integration of |f|^(1/m) densities.
//
// Integration walks residue classes. On a cylinder a + p^k Z_p^n with
// v_p(f(a)) < k the valuation of f is constant (f(x) == f(a) mod p^k for
// p-integral f), so the cylinder contributes p^(-v/m) times its measure
// exactly. Cylinders still unresolved at the depth cap contribute
// [0, p^(-D/m)] times their measure. Results are exact rational ledgers
// (measure per valuation), turned into a RationalInterval at the end.

#include <map>
#include <vector>

#include "padicert/interval.hpp"
#include "padicert/mpoly.hpp"
#include "padicert/roots.hpp"  // Execution

namespace padicert {

/// center + p^depth Z_p^n. Centers must be p-integral.
struct Cylinder {
  Integer prime;
  std::vector<Rational> center;
  long depth = 0;

  static Cylinder unit_polydisc(const Integer& prime, std::size_t dimension);
  std::size_t dimension() const noexcept { return center.size(); }
};

/// p^(-depth * n), exactly.
Rational cylinder_measure(const Cylinder& c);

/// The density |f|^(1/root_index).
struct PolyDensity {
  MPoly f;
  unsigned root_index = 1;
};

struct PolyMap {
  std::vector<MPoly> components;

  std::size_t source_dimension() const;
  std::size_t target_dimension() const noexcept { return components.size(); }
  /// Determinant of the Jacobian matrix; square maps only.
  MPoly jacobian_det() const;
  /// phi(x) for a point of the source.
  std::vector<Rational> apply(std::span<const Rational> x) const;
};

struct MeasureLedger {
  /// valuation v -> measure of the set where v_p(f) == v
  std::map<long, Rational> exact;
  /// bound u -> measure of a set where the density lies in [0, p^(-u/m)]
  std::map<long, Rational> capped;

  void merge(const MeasureLedger& other);
  Rational exact_measure() const;
  Rational capped_measure() const;
  friend bool operator==(const MeasureLedger&, const MeasureLedger&) = default;
};

/// Enclosure of sum exact[v] p^(-v/m) + [0, sum capped[u] p^(-u/m)]; every
/// irrational power is enclosed with error at most p^-(slack_exponent).
RationalInterval ledger_interval(const MeasureLedger& ledger, const Integer& p, unsigned root_index,
                                 long slack_exponent);

struct IntegrationResult {
  RationalInterval value;
  MeasureLedger ledger;
};

/// Integral of |f|^(1/m) over the region, subdividing down to absolute depth
/// max_depth. Throws NonIntegralDensity (f not p-integral), DepthZero
/// (max_depth == 0), InvalidArgument (region deeper than max_depth).
IntegrationResult integrate(const PolyDensity& d, const Cylinder& region, long max_depth,
                            Execution execution = Execution::Parallel);

/// p^shift * f has p-integral coefficients with shift minimal (possibly
/// negative), so |f|^(1/m) = p^(shift/m) |p^shift f|^(1/m).
struct DensityScaling {
  PolyDensity integral;
  long shift = 0;
};
DensityScaling clear_denominators(const PolyDensity& d, const Integer& p);

/// Integral of the density over pi^-1(base) inside Z_p^n.
IntegrationResult pushforward_cylinder_measure(const PolyMap& pi, const Cylinder& base, const PolyDensity& d,
                                               long max_depth, Execution execution = Execution::Parallel);

struct ChangeOfVariablesReport {
  RationalInterval lhs;  // integral of the density over phi(U)
  RationalInterval rhs;  // integral of |f o phi|^(1/m) |det J| over U
  bool overlap = false;
  bool identical = false;
  MPoly jacobian;
};

/// Requires p-integral phi whose Jacobian determinant has a unit constant term
/// and all other coefficients in pZ_p (NonUnitJacobian otherwise); for U of
/// depth 0, phi must also be injective modulo p.
ChangeOfVariablesReport change_of_variables_check(const PolyMap& phi, const PolyDensity& d, const Cylinder& region,
                                                  long max_depth);

struct ScalingReport {
  IntegrationResult scaled;     // |c f|^(1/m), at depth max_depth + v_p(c)
  IntegrationResult reference;  // |f|^(1/m), at depth max_depth
  RationalInterval predicted;   // |c|^(1/m) * reference
  bool ledger_shift_exact = false;
  bool holds = false;
};

ScalingReport scaling_law_check(const Rational& c, const PolyDensity& d, const Cylinder& region, long max_depth);

}  // namespace padicert
