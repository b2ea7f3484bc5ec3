#pragma once

#include "canord/birgeom.hpp"
#include "canord/cyclotomic.hpp"
#include "canord/families.hpp"
#include "canord/reps.hpp"

#include <json.hpp>

#include <gmpxx.h>

#include <string>

namespace canord {

using Json = nlohmann::ordered_json;

/// Toolkit version carried by every report.
std::string version();

/// "p/q", or "p" for integers.
std::string rational_to_string(const mpq_class& q);
/// Parses "p/q" or "p"; throws SchemaError.
mpq_class rational_from_string(const std::string& s);

/// {"conductor": N, "coeffs": ["p/q", ...]} over the power basis of Q(zeta_N).
Json to_json(const CycNumber& x);
CycNumber cyc_from_json(const Json& j);
/// Array of rows of cyclotomic numbers.
Json to_json(const CycMatrix& m);
CycMatrix matrix_from_json(const Json& j);

/// {"centre": "smooth" | {"Ak": k}, "branches": [{"eq": ..., "eC": ..., "eP": ...}]}
GermConfig germ_from_json(const Json& j);
Json to_json(const GermConfig& g);

FamilySpec family_spec_from_json(const Json& j);
Json to_json(const FamilySpec& s);

Json to_json(const ResolutionConfig& cfg);
ResolutionConfig resolution_from_json(const Json& j);

/// {"vertices": [{"label", "dim"}], "arrows": [[...]], "tau": [...]}.
Json to_json(const Quiver& q);
/// Accepts the same layout, or undirected "edges": [[i, j, m]] in place of
/// "arrows" (each edge gives m arrows both ways, a loop gives m arrows).
Quiver quiver_from_json(const Json& j);

Json classification_report(const GermConfig& germ, const Classification& c);
Json resolution_report(const GermConfig& germ, const ResolutionConfig& cfg);
Json family_report(const FamilySpec& spec, const FamilyReport& r);
Json quiver_report(const FamilySpec& spec, const Quiver& q);

/// {"error": {"kind": ..., "message": ...}, "version": ...}.
Json error_report(const std::string& kind, const std::string& message);

} // namespace canord
