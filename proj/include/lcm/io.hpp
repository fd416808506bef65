#pragma once

// JSON and CSV rendering of reports. CSV is RFC-4180-style: header row,
// comma separators, decimal point, floats at 17 significant digits.

#include <string>
#include <vector>

#include <json.hpp>

#include "lcm/check.hpp"
#include "lcm/tau.hpp"

namespace lcm {

std::string format_double(double v);  // %.17g, locale-independent

void to_json(nlohmann::json& j, const Interval& iv);
void from_json(const nlohmann::json& j, Interval& iv);
void to_json(nlohmann::json& j, const OrderRecord& r);
void from_json(const nlohmann::json& j, OrderRecord& r);
void to_json(nlohmann::json& j, const CheckReport& r);
void from_json(const nlohmann::json& j, CheckReport& r);
void to_json(nlohmann::json& j, const TauResult& r);
void from_json(const nlohmann::json& j, TauResult& r);

std::string report_to_csv(const CheckReport& r);
std::string tau_results_to_csv(const std::vector<TauResult>& rows);

}  // namespace lcm
