#pragma once

// JSON round-tripping for configs, reports and artifacts.

#include <json.hpp>

#include "wander/approx.hpp"
#include "wander/scaffold.hpp"
#include "wander/targets.hpp"

namespace wander {

using Json = nlohmann::json;

Json to_json(const ScaffoldConfig& cfg);
ScaffoldConfig scaffold_from_json(const Json& j);

Json to_json(const ValidationReport& r);   // array of {constraint, pass, detail}
Json to_json(const StructuralReport& r);

Json to_json(const PiecewiseTarget& t);

Json to_json(const PolyApproximant& p);
PolyApproximant approximant_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace wander
