#pragma once

// JSON forms of every value the library hands out. Rationals are strings
// ("3/2"), roots are {"root": {"radicand": "3", "index": 2}}.

#include "seshadri/degeneration.hpp"
#include "seshadri/estimator.hpp"
#include "seshadri/orbit.hpp"
#include "seshadri/polytope.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace seshadri {

using Json = nlohmann::ordered_json;

/// Parses text, turning syntax errors into ErrorCode::Parse with the
/// line and column.
Json parse_json(std::string_view text);

Rational rational_from_json(const Json& j, const std::string& where);
Integer integer_from_json(const Json& j, const std::string& where);
Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(std::span<const Rational> v);
Json to_json(std::span<const Integer> v);

Json to_json(const BoundValue& v);
BoundValue bound_value_from_json(const Json& j, const std::string& where);

Json polytope_to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);
CertificatePtr certificate_from_json(const Json& j);

Json to_json(const BoundReport& r);
Json to_json(const OrbitReport& r);
Json orbit_profile_to_json(std::span<const OrbitReport> profile);

Json to_json(const NefCertificate& c);
Json to_json(const MultipointBound& b, unsigned n, const Integer& d, std::span<const Integer> m);
Json complete_intersection_to_json(const CIDescriptor& desc);
Json fano_table_to_json(std::span<const FanoRow> rows);
std::string fano_table_to_text(std::span<const FanoRow> rows);

} // namespace seshadri
