#include "coxred/schema.hpp"

#include <regex>

namespace coxred {

namespace {

bool type_matches(const nlohmann::json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

} // namespace

std::vector<std::string> schema_validate(const nlohmann::json& value, const nlohmann::json& schema,
                                         const std::string& path) {
    std::vector<std::string> errs;

    if (schema.contains("type")) {
        const auto& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(value, t.get<std::string>());
        } else {
            for (const auto& alt : t)
                if (type_matches(value, alt.get<std::string>())) { ok = true; break; }
        }
        if (!ok) {
            errs.push_back(path + ": type mismatch (got " + std::string(value.type_name()) + ")");
            return errs;
        }
    }

    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"])
            if (value == alt) { ok = true; break; }
        if (!ok) errs.push_back(path + ": value not in enum");
    }

    if (schema.contains("pattern") && value.is_string()) {
        std::regex re(schema["pattern"].get<std::string>());
        if (!std::regex_search(value.get<std::string>(), re))
            errs.push_back(path + ": string does not match pattern");
    }

    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    errs.push_back(path + ": missing required key " + key.get<std::string>());
        const nlohmann::json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props && props->contains(it.key())) {
                auto sub = schema_validate(it.value(), (*props)[it.key()], path + "." + it.key());
                errs.insert(errs.end(), sub.begin(), sub.end());
            } else if (schema.contains("additionalProperties") &&
                       schema["additionalProperties"].is_boolean() &&
                       !schema["additionalProperties"].get<bool>()) {
                errs.push_back(path + ": unexpected key " + it.key());
            }
        }
    }

    if (value.is_array() && schema.contains("items")) {
        for (size_t i = 0; i < value.size(); ++i) {
            auto sub = schema_validate(value[i], schema["items"], path + "[" + std::to_string(i) + "]");
            errs.insert(errs.end(), sub.begin(), sub.end());
        }
    }

    return errs;
}

} // namespace coxred
