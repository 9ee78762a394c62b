#pragma once

// Scenario and trace files. Exponents are JSON unsigned integers, or decimal
// strings when they do not fit in 64 bits.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "toroidal/descent.hpp"
#include "toroidal/scenario.hpp"

namespace toroidal {

using nlohmann::json;

struct ScenarioFile {
  Scenario scenario;
  std::vector<TargetPoint> y_blowups;
};

/// Throws ValidationError whose field() is the JSON path of the offending value.
ScenarioFile parse_scenario(const json& j);
/// Syntax errors are reported with line and column.
ScenarioFile parse_scenario_text(std::string_view text);
ScenarioFile load_scenario(const std::filesystem::path& path);
/// Parses JSON text; syntax errors become ValidationError with "line L, column C".
json parse_json_text(std::string_view text);

json exponent_to_json(const Exponent& e);
Exponent exponent_from_json(const json& j, const std::string& field);
json row_to_json(const ExponentRow& row);
ExponentRow row_from_json(const json& j, const std::string& field);

json presentation_to_json(const MonomialPresentation& p);
/// `s` supplies n and the chart contexts.
MonomialPresentation presentation_from_json(const json& j, std::size_t n,
                                            const std::vector<bool>& q_in_E, const std::string& field);

json template_to_json(const ToroidalTemplate& t);
ToroidalTemplate template_from_json(const json& j, const std::string& field);

json center_to_json(const Center& c);
Center center_from_json(const json& j, const std::string& field);

json scenario_to_json(const ScenarioFile& f);
json locus_to_json(const LocusReport& r);
json step_to_json(const TraceStep& step);
json round_to_json(const RoundResult& r);

/// {"canonical": {...}, "timing": {...}}; only "canonical" is deterministic.
json trace_document(const ScenarioFile& f, const std::vector<RoundResult>& rounds,
                    const json& timing);

/// Two-space indented dump with a trailing newline.
std::string dump(const json& j);

}  // namespace toroidal
