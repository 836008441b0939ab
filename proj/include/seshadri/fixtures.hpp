#pragma once

// Reproduction fixtures: named inputs with exact expected outputs. Each
// fixture is {"name", "group", "kind", "input", "expected"}; a fixture passes
// when every field of "expected" equals the same field of the computed result.

#include "seshadri/serialize.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace seshadri {

/// The built-in fixture set as JSON text.
std::string_view builtin_fixtures();

/// Computes the result object for one fixture's kind and input.
Json evaluate_fixture(const Json& fixture);

struct FixtureResult {
    std::string name;
    std::string group;
    bool passed = false;
    Json expected;
    Json actual;
    std::string error;
};

/// Runs fixtures whose group equals `filter` or whose name contains it
/// (all when empty).
std::vector<FixtureResult> run_fixtures(const Json& fixtures, std::string_view filter);

} // namespace seshadri
