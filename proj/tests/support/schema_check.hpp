#pragma once
// Minimal JSON Schema checker covering exactly the keywords the published
// report schema uses: $ref into #/definitions, oneOf, type, enum, required,
// properties, additionalProperties (boolean or schema), and items.  Returns
// a path-annotated diagnostic so failures say which field broke the shape.

#include <string>

#include <json.hpp>

namespace schema_check {

using Json = nlohmann::json;

inline bool type_matches(const Json& value, const std::string& type) {
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "array") return value.is_array();
    if (type == "object") return value.is_object();
    if (type == "null") return value.is_null();
    return false;
}

inline const Json& resolve_ref(const Json& root, const std::string& ref) {
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) throw std::invalid_argument("unsupported $ref: " + ref);
    return root.at("definitions").at(ref.substr(prefix.size()));
}

inline bool validate(const Json& root, const Json& schema, const Json& value, std::string path,
                     std::string* why) {
    if (schema.contains("$ref"))
        return validate(root, resolve_ref(root, schema.at("$ref").get<std::string>()), value,
                        path, why);
    if (schema.contains("oneOf")) {
        int matched = 0;
        std::string first_reason;
        for (const Json& alt : schema.at("oneOf")) {
            std::string reason;
            if (validate(root, alt, value, path, &reason))
                ++matched;
            else if (first_reason.empty())
                first_reason = reason;
        }
        if (matched != 1) {
            if (why)
                *why = path + ": matched " + std::to_string(matched) +
                       " of the oneOf alternatives" +
                       (matched == 0 && !first_reason.empty() ? "; first: " + first_reason : "");
            return false;
        }
        return true;
    }
    if (schema.contains("enum")) {
        for (const Json& allowed : schema.at("enum"))
            if (value == allowed) return true;
        if (why) *why = path + ": value " + value.dump() + " not in enum";
        return false;
    }
    if (schema.contains("type") && !type_matches(value, schema.at("type").get<std::string>())) {
        if (why)
            *why = path + ": expected " + schema.at("type").get<std::string>() + ", got " +
                   value.dump().substr(0, 80);
        return false;
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const Json& key : schema.at("required"))
                if (!value.contains(key.get<std::string>())) {
                    if (why) *why = path + ": missing required key " + key.get<std::string>();
                    return false;
                }
        const Json* props = schema.contains("properties") ? &schema.at("properties") : nullptr;
        for (const auto& [key, sub] : value.items()) {
            if (props && props->contains(key)) {
                if (!validate(root, props->at(key), sub, path + "." + key, why)) return false;
            } else if (schema.contains("additionalProperties")) {
                const Json& ap = schema.at("additionalProperties");
                if (ap.is_boolean()) {
                    if (!ap.get<bool>()) {
                        if (why) *why = path + ": unexpected key " + key;
                        return false;
                    }
                } else if (!validate(root, ap, sub, path + "." + key, why)) {
                    return false;
                }
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (size_t i = 0; i < value.size(); ++i)
            if (!validate(root, schema.at("items"), value[i], path + "[" + std::to_string(i) + "]",
                          why))
                return false;
    }
    return true;
}

// Validate a document against the whole schema file (its top level).
inline bool validate_report(const Json& schema_file, const Json& doc, std::string* why) {
    return validate(schema_file, schema_file, doc, "$", why);
}

}  // namespace schema_check
