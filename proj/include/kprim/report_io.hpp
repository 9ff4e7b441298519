#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kprim/report.hpp"

namespace kprim {

inline constexpr const char* kToolVersion = "kprim 0.1.0";

enum class OutputFormat { json, csv, md };

OutputFormat format_from_string(const std::string& s);

nlohmann::ordered_json to_json(const MarginReport& r);

// {tool_version, params, reports: [...]} rendered in the chosen format;
// CSV flattens term names into dotted columns in first-appearance order.
std::string render_reports(const std::vector<MarginReport>& reports, OutputFormat f,
                           const nlohmann::ordered_json& params);

} // namespace kprim
