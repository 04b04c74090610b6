#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "vvilab/catalog.hpp"
#include "vvilab/config.hpp"
#include "vvilab/properties.hpp"
#include "vvilab/vi_lab.hpp"

namespace vvilab {

inline constexpr const char* kSchemaVersion = "vvilab-report-v1";
inline constexpr const char* kToolVersion = "0.3.0";

using nlohmann::json;

/// Doubles as JSON numbers; infinities become the strings "inf" / "-inf".
json number_json(double x);
double number_from_json(const json& j);

json to_json(const Point& p);
Point point_from_json(const json& j);
json to_json(const Witness& w);
Witness witness_from_json(const json& j);
json to_json(const CheckOutcome& o);
json to_json(const SolutionSet& s);
json to_json(const InclusionCheck& c);
json to_json(const TheoremReport& r);
json to_json(const ProblemInstance& inst);
ProblemInstance instance_from_json(const json& j);
json to_json(const CatalogEntry& e);

/// Seed, tolerance, Dini schedule, form flag and parameterization mode.
json config_json(const RunConfig& cfg, GeodesicMode mode);

/// Schema, tool version and command; callers add the payload and runtime_ms.
json envelope(const std::string& command);

/// Copy of `report` without runtime_ms, for byte-level comparisons.
std::string dump_without_runtime(json report);

/// Human-readable and CSV renderings of a finished JSON report.
std::string render_text(const json& report);
std::string render_csv(const json& report);

}  // namespace vvilab
