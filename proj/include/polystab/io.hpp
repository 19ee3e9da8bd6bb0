#pragma once

#include <string>

#include <json.hpp>

#include "polystab/analysis.hpp"
#include "polystab/integrate.hpp"

namespace polystab::io {

inline constexpr const char* kSchema = "polystab/1";

/// Significant digits for machine-readable and human-readable output.
inline constexpr int kMachineDigits = 17;
inline constexpr int kHumanDigits = 6;

nlohmann::json to_json(const Analysis& analysis);
std::string to_text(const Analysis& analysis);
std::string to_csv(const Analysis& analysis);

nlohmann::json to_json(const StabilityTable& table);
std::string to_text(const StabilityTable& table);
std::string to_csv(const StabilityTable& table);

nlohmann::json to_json(const Profile& profile);
std::string to_csv(const Profile& profile);
/// Inverse of to_json(const Profile&).
Profile profile_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PhasePortrait& portrait);
std::string to_csv(const PhasePortrait& portrait);

/// Text of a JSON document as written by the CLI.
std::string dump(const nlohmann::json& j);

}  // namespace polystab::io
