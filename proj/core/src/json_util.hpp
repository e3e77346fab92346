#pragma once

// Internal helpers for the canonical JSON file formats. Not installed.

#include <initializer_list>
#include <string>
#include <string_view>

#include "json.hpp"
#include "takeoff/errors.hpp"

namespace takeoff::detail {

using json = nlohmann::ordered_json;

/// Parses JSON, rejecting duplicate object keys anywhere in the document.
json parse_json_strict(std::string_view text);

/// Requires every `required` key, allows `optional` ones, rejects the rest.
void require_keys(const json& obj, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional, const std::string& where);

std::string get_string(const json& obj, const char* key, const std::string& where);

double get_finite_number(const json& obj, const char* key, const std::string& where);

}  // namespace takeoff::detail
