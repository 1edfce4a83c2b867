#pragma once

// Certified isolation of the complex roots of an integer polynomial.
//
// Isolation runs a quadtree subdivision from a box enclosing all roots. A cell
// is discarded when the Taylor expansion at its centre proves it root-free;
// surviving cells are grouped into connected components, and a component is
// accepted when a Pellet-type test proves that a disc around it holds exactly
// one root and meets no other component. All predicates are exact rational
// comparisons.

#include <optional>
#include <vector>

#include "padicert/interval.hpp"
#include "padicert/polynomial.hpp"

namespace padicert {

enum class Execution { Serial, Parallel };

struct IsolationOptions {
  Execution execution = Execution::Parallel;
  /// Subdivision levels before giving up with MaxPrecisionExceeded.
  unsigned max_levels = 400;
};

/// Pairwise disjoint boxes of width <= eps, one per root, covering all roots.
/// Deterministic in (f, eps); halving eps yields boxes contained in the
/// previous ones. Throws NotSquarefree.
std::vector<ComplexBox> isolate_roots(const IntPolynomial& f, const Rational& eps, IsolationOptions options = {});

/// Disc with rational centre and radius.
struct InclusionDisc {
  ComplexRational center;
  Rational radius;
};

/// Independent inclusion route: floating-point Aberth iteration polished in
/// exact arithmetic, then certified with Smith's Weierstrass-correction bound
/// (all roots lie in the union of discs, and each component of m discs holds m
/// roots). Returns discs only when they are pairwise disjoint, so each holds
/// exactly one root; nullopt when the certificate cannot be established.
std::optional<std::vector<InclusionDisc>> smith_inclusion(const IntPolynomial& f, unsigned polish_bits = 160);

/// Number of roots of f inside a closed box, decided with smith_inclusion;
/// nullopt when some inclusion disc straddles the box boundary.
std::optional<std::size_t> count_roots_in_box(const IntPolynomial& f, const ComplexBox& box);

}  // namespace padicert
