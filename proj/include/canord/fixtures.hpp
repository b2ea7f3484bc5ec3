#pragma once

#include "canord/birgeom.hpp"
#include "canord/families.hpp"
#include "canord/reps.hpp"

#include <string>
#include <vector>

namespace canord {

/// Environment variable that overrides the fixture directory.
inline constexpr const char* kFixtureDirEnv = "CANORD_FIXTURE_DIR";

/// Fixture directory: the environment override, else the directory configured at build time.
std::string fixture_dir();

/// Reads <fixture_dir>/<name>; throws SchemaError when missing or malformed.
std::string read_fixture(const std::string& name);

/// Quiver fixture <fixture_dir>/quivers/<name>.json.
Quiver load_quiver_fixture(const std::string& name);

/// A quiver fixture together with the family it describes.
struct QuiverCase {
    std::string fixture;
    FamilySpec spec;
};

/// The families whose quivers are drawn in the appendix, plus Kleinian A2 and D4.
std::vector<QuiverCase> quiver_cases();

/// Decorated dual graph of the minimal resolution drawn for a table row.
ResolutionConfig figure_resolution(const FamilySpec& spec);

/// Every table row with n in 1..4 (at the per-type minimum or above), e in 2..4
/// and every valid l.
std::vector<FamilySpec> table_runs();

} // namespace canord
