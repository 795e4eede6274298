#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "iwasawa/factors.hpp"

namespace iwasawa {

inline constexpr std::string_view kScenarioVersion = "scenario_v1";
inline constexpr std::string_view kReportVersion = "report_v1";

/// Tower data for the compatibility check. Element fields hold grammar_v1 text.
struct Scenario {
    RingSpec top;
    std::string theta_l;
    std::string theta_lp;
    GlobalTorsionData global;
    std::vector<Place> places;

    RingSpec lower() const { return top.with_nvars(top.nvars - 1); }
    IwasawaElement theta_l_element() const;
    IwasawaElement theta_lp_element() const;
};

/// Parses a scenario_v1 JSON document. Group words are JSON arrays or "[a, b]"
/// strings; eigenvalues are integers, constant expressions, or {level, coeffs}.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string& path);
std::string scenario_to_json(const Scenario& s);

std::string report_to_json(const CompatibilityReport& r);
std::string screen_to_json(const ScreenResult& r);

}  // namespace iwasawa
