#pragma once

// Minimal JSON-Schema-subset validator for the shipped schemas: type, required, properties,
// items (single schema), enum, pattern, minimum, and local-file $ref. Test-only.

#include <fstream>
#include <regex>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace schema_check {

using nlohmann::json;

inline json load_schema(const std::string& name) {
    std::ifstream in(std::string(HRDC_SOURCE_DIR) + "/schemas/" + name);
    if (!in) throw std::runtime_error("cannot open schema " + name);
    json j;
    in >> j;
    return j;
}

inline void validate(const json& schema, const json& value, const std::string& path = "$") {
    if (schema.contains("$ref")) {
        validate(load_schema(schema["$ref"].get<std::string>()), value, path);
        return;
    }
    if (schema.contains("type")) {
        const std::string type = schema["type"].get<std::string>();
        bool ok = (type == "object" && value.is_object()) || (type == "array" && value.is_array()) ||
                  (type == "string" && value.is_string()) ||
                  (type == "integer" && value.is_number_integer()) ||
                  (type == "number" && value.is_number()) ||
                  (type == "boolean" && value.is_boolean());
        if (!ok) throw std::runtime_error(path + ": expected type " + type);
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const json& cand : schema["enum"]) found = found || cand == value;
        if (!found) throw std::runtime_error(path + ": value not in enum");
    }
    if (schema.contains("pattern") && value.is_string()) {
        std::regex re(schema["pattern"].get<std::string>());
        if (!std::regex_match(value.get<std::string>(), re))
            throw std::runtime_error(path + ": \"" + value.get<std::string>() +
                                     "\" does not match " + schema["pattern"].get<std::string>());
    }
    if (schema.contains("minimum") && value.is_number_integer()) {
        if (value.get<long long>() < schema["minimum"].get<long long>())
            throw std::runtime_error(path + ": below minimum");
    }
    if (schema.contains("required")) {
        for (const json& key : schema["required"])
            if (!value.contains(key.get<std::string>()))
                throw std::runtime_error(path + ": missing required key " + key.get<std::string>());
    }
    if (schema.contains("properties") && value.is_object()) {
        for (auto& [key, sub] : schema["properties"].items())
            if (value.contains(key)) validate(sub, value.at(key), path + "." + key);
    }
    if (schema.contains("items") && value.is_array()) {
        size_t idx = 0;
        for (const json& item : value)
            validate(schema["items"], item, path + "[" + std::to_string(idx++) + "]");
    }
}

inline void validate_against(const std::string& schema_name, const json& value) {
    validate(load_schema(schema_name), value, schema_name + ":$");
}

}  // namespace schema_check
