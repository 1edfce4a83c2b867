#pragma once

// Projective automorphisms: semisimplicity, finite order in PGL, certificates
// of infinite order, and the exact shell-tiling ledger behind the measure
// argument.
//
// A matrix M has finite order in PGL iff the conjugation operator
// R : X -> M X M^-1 has finite linear order. The eigenvalues of R are the
// ratios of eigenvalues of M, so everything stays in exact rational linear
// algebra; no eigenvalue is ever extracted.

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "padicert/matrix.hpp"
#include "padicert/places.hpp"

namespace padicert {

using LinearOperator = std::function<std::vector<Rational>(const std::vector<Rational>&)>;

/// Minimal polynomial of a linear operator on Q^dim (primitive, positive
/// leading coefficient), as the lcm of Krylov annihilators of the unit vectors.
IntPolynomial minimal_polynomial(std::size_t dim, const LinearOperator& apply);
IntPolynomial minimal_polynomial(const QMatrix& m);

bool is_semisimple(const QMatrix& m);

/// Smallest n with M^n = I, when one exists.
std::optional<unsigned long> linear_order(const QMatrix& m);

/// The conjugation operator X -> M X M^-1 on row-major n x n matrices,
/// i.e. M (x) M^-T.
QMatrix conjugation_operator(const QMatrix& m);

/// Characteristic polynomial det(xI - M), by Faddeev-LeVerrier.
IntPolynomial characteristic_polynomial(const QMatrix& m);

/// Res_y(g(y), f(x*y)): its roots are the quotients a/b with f(a) = 0 and
/// g(b) = 0. Both polynomials need a nonzero constant term.
IntPolynomial ratio_polynomial(const IntPolynomial& f, const IntPolynomial& g);

struct MatrixAutomorphism {
  QMatrix entries;
};

/// diag(1, a_1, ..., a_N); the leading eigenvalue is normalized to 1.
struct DiagonalAutomorphism {
  std::vector<AlgebraicNumberSpec> eigenvalues;
};

using ProjAutSpec = std::variant<MatrixAutomorphism, DiagonalAutomorphism>;

struct FiniteOrder {
  unsigned long n = 1;
  /// Eigenvalue ratios were checked through exact ratio polynomials.
  bool ratios_checked = true;
};

struct NotSemisimple {
  /// Minimal polynomial of M; it has a repeated factor (a Jordan block).
  IntPolynomial minimal_polynomial;
};

struct EigenvalueWitness {
  WitnessCertificate certificate;
  /// Position among a_1..a_N for diagonal input; absent for matrix input,
  /// where the certificate is about a factor of the minimal polynomial of R.
  std::optional<std::size_t> eigenvalue_index;
};

struct InfiniteOrder {
  std::variant<NotSemisimple, EigenvalueWitness> reason;
};

using OrderVerdict = std::variant<FiniteOrder, InfiniteOrder>;

/// Throws InvalidArgument for a singular or non-square matrix.
OrderVerdict projective_order(const QMatrix& m, const WitnessOptions& options = {});

/// Ratio polynomials are cross-checked when every defining polynomial has
/// degree at most this bound.
inline constexpr long kRatioDegreeBound = 8;

/// Throws InvalidArgument when an eigenvalue is 0.
OrderVerdict certify_diagonal(const DiagonalAutomorphism& spec, const WitnessOptions& options = {});

OrderVerdict projective_order(const ProjAutSpec& spec, const WitnessOptions& options = {});

/// alpha^N A for A = {1 <= |y| < p^s}, recorded as the spheres |y| = p^j it
/// contains.
struct ShellTranslate {
  long power = 0;         // N
  long first_sphere = 0;  // N s
  long last_sphere = 0;   // N s + s - 1
  Rational measure;       // sum of p^j (1 - 1/p) over its spheres
  Rational predicted;     // p^(N s) mu(A)
};

struct TilingLedger {
  Integer prime;
  long scale = 1;
  long range = 0;
  Rational shell_measure;  // mu(A)
  std::vector<ShellTranslate> translates;
  /// Every sphere p^-Ms .. p^((M+1)s - 1) is hit exactly once, no other.
  bool disjoint_union = false;
  bool translate_law = false;
  Rational total;            // sum of the translate measures
  Rational annulus_measure;  // mu(ball p^((M+1)s - 1)) - mu(ball p^(-Ms - 1))
  bool balanced = false;
};

/// Exact measure ledger for the tiling of {p^-Ms <= |y| < p^((M+1)s)} by
/// alpha^N A, |N| <= M, |alpha| = p^s. Throws InvalidArgument for s < 1 or
/// M < 0.
TilingLedger verify_shell_tiling(const Integer& p, long s, long range);

}  // namespace padicert
