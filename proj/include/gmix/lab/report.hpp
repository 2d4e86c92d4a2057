#pragma once

#include <string>

#include <json.hpp>

#include "gmix/lab/properties.hpp"

namespace gmix::lab {

/// One line, `key=value` fields separated by spaces; numbers use %.17g so a
/// report read back compares equal.
std::string to_text(const PropertyReport& report);

nlohmann::json to_json(const PropertyReport& report);
PropertyReport report_from_json(const nlohmann::json& doc);

/// Compact single-line JSON.
std::string to_json_line(const PropertyReport& report);

}  // namespace gmix::lab
