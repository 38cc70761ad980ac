#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace coxred {

// Validator for the JSON-Schema subset the report schema uses: type (single
// or list, with "null"), properties / required / additionalProperties,
// items, enum, pattern.  Returns human-readable problems; empty means valid.
std::vector<std::string> schema_validate(const nlohmann::json& value, const nlohmann::json& schema,
                                         const std::string& path = "$");

} // namespace coxred
