#include "json_util.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

namespace takeoff::detail {

json parse_json_strict(std::string_view text) {
  // Track object keys per nesting level; the stock parser silently keeps
  // the last duplicate.
  std::vector<std::set<std::string>> scopes;
  json::parser_callback_t cb = [&scopes](int /*depth*/, json::parse_event_t event,
                                         json& parsed) -> bool {
    switch (event) {
      case json::parse_event_t::object_start:
        scopes.emplace_back();
        break;
      case json::parse_event_t::object_end:
        scopes.pop_back();
        break;
      case json::parse_event_t::key:
        if (!scopes.back().insert(parsed.get<std::string>()).second) {
          throw SyntaxError("duplicate key '" + parsed.get<std::string>() + "'");
        }
        break;
      default:
        break;
    }
    return true;
  };
  try {
    return json::parse(text, cb);
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("malformed JSON: ") + e.what());
  }
}

void require_keys(const json& obj, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional, const std::string& where) {
  if (!obj.is_object()) throw SyntaxError(where + " must be an object");
  for (const char* key : required) {
    if (!obj.contains(key)) throw SyntaxError(where + " is missing field '" + key + "'");
  }
  const auto known = [&](const std::string& key) {
    return std::any_of(required.begin(), required.end(),
                       [&](const char* k) { return key == k; }) ||
           std::any_of(optional.begin(), optional.end(),
                       [&](const char* k) { return key == k; });
  };
  for (const auto& item : obj.items()) {
    if (!known(item.key())) throw SyntaxError(where + " has unknown field '" + item.key() + "'");
  }
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_string()) throw SyntaxError(where + "." + key + " must be a string");
  return v.get<std::string>();
}

double get_finite_number(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number()) throw SyntaxError(where + "." + key + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SyntaxError(where + "." + key + " must be finite");
  return d;
}

}  // namespace takeoff::detail
