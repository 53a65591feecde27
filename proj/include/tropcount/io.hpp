#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "tropcount/acceptance.hpp"
#include "tropcount/count.hpp"
#include "tropcount/lattice.hpp"
#include "tropcount/quadcusp.hpp"
#include "tropcount/subdivision.hpp"
#include "tropcount/tropical_curve.hpp"

namespace tropcount {

using Json = nlohmann::ordered_json;

/// {"vertices": [[x,y], ...]}; canonicalized on load. Throws SchemaError.
Json to_json(const LatticePolygon& p);
LatticePolygon polygon_from_json(const Json& j);

/// {"cells": [[[x,y],...], ...], "nu": [[x,y,"p/q"], ...]}; "nu" optional on load.
Json to_json(const Subdivision& s, const LiftingFunction* nu = nullptr);
std::pair<Subdivision, std::optional<LiftingFunction>> subdivision_from_json(const Json& j);

/// {"points": [["p/q","p/q"], ...]}
Json to_json(const MarkedConfiguration& m);
MarkedConfiguration configuration_from_json(const Json& j);

/// Vertices, edges and rays with weights, directions and dual references.
Json to_json(const PlaneTropicalCurve& c);

Json to_json(const CountResult& r);
Json to_json(const NonexistenceCertificate& c);
Json to_json(const AcceptanceReport& r);

/// Throws IoError when unreadable, SchemaError when not JSON.
Json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline. Throws IoError.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace tropcount
