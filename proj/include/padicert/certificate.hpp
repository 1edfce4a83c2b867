#pragma once

// JSON documents for every result the CLI emits. Rationals are encoded as
// {"num": "...", "den": "..."} with decimal integer strings, so documents
// round-trip bit-exactly. Polynomials are coefficient lists, ascending.

#include <json.hpp>

#include "padicert/haar.hpp"
#include "padicert/places.hpp"
#include "padicert/projaut.hpp"

namespace padicert {

using Json = nlohmann::json;

inline constexpr const char* kSlopeConvention = "root valuation = -slope";

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const IntPolynomial& f);
IntPolynomial polynomial_from_json(const Json& j);
Json to_json(const RationalInterval& r);
RationalInterval interval_from_json(const Json& j);
Json to_json(const ComplexBox& b);
ComplexBox box_from_json(const Json& j);

/// Certificate body: alpha_poly, case, place, norm_bound, conditionality.
Json to_json(const WitnessCertificate& cert);
WitnessCertificate witness_from_json(const Json& j);

/// {"kind": "witness", ...}: either a certificate or case "root_of_unity".
Json witness_document(const IntPolynomial& f, const WitnessResult& result);

/// {"kind": "order", "input": ..., "verdict": ..., "order"?, "reason"?, ...}
Json order_document(const ProjAutSpec& spec, const OrderVerdict& verdict);

/// {"kind": "tile", ...}
Json tile_document(const TilingLedger& ledger);

Json to_json(const MeasureLedger& ledger);
MeasureLedger ledger_from_json(const Json& j);

/// {"kind": "integral", ...}
Json integral_document(const PolyDensity& d, const Cylinder& region, long max_depth, const IntegrationResult& r);

/// {"kind": "measure", ...}: pushforward of the density to a base cylinder.
Json measure_document(const PolyMap& pi, const Cylinder& base, const PolyDensity& d, long max_depth,
                      const IntegrationResult& r);

}  // namespace padicert
