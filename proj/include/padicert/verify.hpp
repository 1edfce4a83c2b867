#pragma once

// Re-checks certificates from their data alone. The checks deliberately avoid
// the code that produced them: divisibility of x^n - 1 instead of cyclotomic
// splitting, a supporting-line test instead of the convex hull, Smith
// inclusion discs instead of the quadtree, explicit matrix powers instead of
// minimal polynomials, and residue enumeration instead of the cylinder walk.

#include <string>

#include "padicert/certificate.hpp"

namespace padicert {

struct VerifyOutcome {
  bool ok = false;
  std::string detail;
};

/// Every root of f has multiplicative order dividing n, and n is minimal.
VerifyOutcome verify_root_of_unity(const IntPolynomial& f, unsigned long n);

VerifyOutcome verify_witness(const WitnessCertificate& cert);

/// Integral of |f(x)|^(1/m) over a one-variable region by enumerating every
/// residue mod p^max_depth; returns the ledger the walk must reproduce.
MeasureLedger enumerate_residues(const PolyDensity& d, const Cylinder& region, long max_depth);

/// Dispatches on "kind".
VerifyOutcome verify_document(const Json& doc);

}  // namespace padicert
