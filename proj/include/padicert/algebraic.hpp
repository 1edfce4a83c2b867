#pragma once

// Algebraic numbers by defining polynomial, and the exact root-of-unity test.

#include <optional>
#include <string>
#include <vector>

#include "padicert/interval.hpp"
#include "padicert/polynomial.hpp"

namespace padicert {

bool is_squarefree(const IntPolynomial& f);

/// The d-th cyclotomic polynomial (cached).
IntPolynomial cyclotomic(unsigned long d);

/// Indices of the cyclotomic factors of f and the cofactor left after
/// dividing them out. f must be squarefree; the cofactor is primitive.
struct CyclotomicSplit {
  std::vector<unsigned long> indices;
  IntPolynomial cofactor;
};
CyclotomicSplit split_cyclotomic(const IntPolynomial& f);

/// Multiplicative order shared by all roots of f when every irreducible factor
/// is cyclotomic, i.e. lcm of the indices. nullopt otherwise.
/// Throws NotSquarefree; f must be nonconstant.
std::optional<unsigned long> root_of_unity_order(const IntPolynomial& f);

/// Primitive part is monic up to sign.
bool is_algebraic_integer(const IntPolynomial& f);

enum class Irreducibility { Proven, Unknown };

struct IrreducibilityReport {
  Irreducibility status = Irreducibility::Unknown;
  /// Which criterion fired, e.g. "irreducible mod 3".
  std::string reason;
};

/// Sound irreducibility test over Q: degree one, Eisenstein (also on the
/// reversed polynomial), or incompatible factor-degree patterns modulo the
/// first `prime_count` good primes. Never reports Proven for a reducible f.
IrreducibilityReport check_irreducible(const IntPolynomial& f, unsigned prime_count = 24);

enum class IrreducibilityStatus { Proven, Unchecked };

/// A root of a defining polynomial, optionally pinned by an isolating box.
class AlgebraicNumberSpec {
 public:
  /// Runs check_irreducible to fill the status; a selector must isolate
  /// exactly one root (InvalidArgument otherwise).
  static AlgebraicNumberSpec make(const IntPolynomial& defining_poly,
                                  std::optional<ComplexBox> root_selector = std::nullopt);
  /// Status supplied by the caller.
  static AlgebraicNumberSpec unchecked(const IntPolynomial& defining_poly);

  const IntPolynomial& defining_poly() const noexcept { return poly_; }
  const std::optional<ComplexBox>& root_selector() const noexcept { return selector_; }
  IrreducibilityStatus irreducibility() const noexcept { return status_; }

 private:
  IntPolynomial poly_;
  std::optional<ComplexBox> selector_;
  IrreducibilityStatus status_ = IrreducibilityStatus::Unchecked;
};

}  // namespace padicert
