#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "discrimina/analyzer.hpp"

namespace discrimina {

std::string_view tool_version();

nlohmann::json to_json(const RootCountReport& r);
nlohmann::json to_json(const AnalysisReport& r);

/// Report for the count-real / count-positive commands.
nlohmann::json real_count_report(const Polynomial& f);
nlohmann::json positive_count_report(const Polynomial& f);

std::string summary(const AnalysisReport& r);
std::string count_summary(const nlohmann::json& count_report);

}  // namespace discrimina
