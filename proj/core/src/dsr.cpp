#include "takeoff/dsr.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "json_util.hpp"
#include "takeoff/format.hpp"

namespace takeoff {

namespace {

using detail::json;
using detail::get_string;
using detail::parse_json_strict;

void require_keys(const json& obj, std::initializer_list<const char*> keys,
                  const std::string& where) {
  detail::require_keys(obj, keys, {}, where);
}

Cell cell_from_json(const json& v, const std::string& where, bool is_unit_cell) {
  if (v.is_null()) return Cell::missing();
  if (v.is_number()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw SyntaxError(where + ": non-finite number");
    return Cell::number(d);
  }
  if (v.is_string()) {
    std::string raw = v.get<std::string>();
    if (is_unit_cell) raw = canonical_unit_text(raw);
    return Cell::text(std::move(raw));
  }
  throw SyntaxError(where + " must be a number, string, or null");
}

json cell_to_json(const Cell& cell) {
  if (cell.is_missing()) return nullptr;
  if (cell.is_number()) return cell.number();
  return cell.text();
}

std::vector<DeviationEntry> parse_deviation_table(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw SyntaxError(where + " must be an array");
  std::vector<DeviationEntry> entries;
  bool seen_always = false;
  std::set<double> seen_times;
  for (const auto& item : arr) {
    const std::string entry_where = where + " entry";
    require_keys(item, {"when", "bound", "unit"}, entry_where);
    DeviationEntry entry;
    const auto& when = item.at("when");
    if (when.is_string()) {
      if (when.get<std::string>() != "always") {
        throw SyntaxError(entry_where + ": 'when' string must be \"always\"");
      }
      if (seen_always) throw SyntaxError(where + " has more than one always entry");
      seen_always = true;
    } else if (when.is_number()) {
      const double t = when.get<double>();
      if (!std::isfinite(t) || t <= 0.0) {
        throw SyntaxError(entry_where + ": time step must be a positive number of seconds");
      }
      if (!seen_times.insert(t).second) {
        throw SyntaxError(where + " has duplicate time step " + format_number(t));
      }
      entry.at_time = t;
    } else {
      throw SyntaxError(entry_where + ": 'when' must be \"always\" or a number of seconds");
    }
    entry.bound = cell_from_json(item.at("bound"), entry_where + ".bound", false);
    entry.unit = cell_from_json(item.at("unit"), entry_where + ".unit", true);
    entries.push_back(std::move(entry));
  }
  std::sort(entries.begin(), entries.end(), [](const DeviationEntry& a, const DeviationEntry& b) {
    if (a.is_always() != b.is_always()) return a.is_always();
    if (a.is_always()) return false;
    return *a.at_time < *b.at_time;
  });
  return entries;
}

json deviation_table_to_json(const std::vector<DeviationEntry>& entries) {
  json arr = json::array();
  for (const auto& entry : entries) {
    json item;
    if (entry.is_always()) {
      item["when"] = "always";
    } else {
      item["when"] = *entry.at_time;
    }
    item["bound"] = cell_to_json(entry.bound);
    item["unit"] = cell_to_json(entry.unit);
    arr.push_back(std::move(item));
  }
  return arr;
}

}  // namespace

bool ConditionsRow::dbt_clean() const {
  if (!initial_min.is_number() || !initial_max.is_number() || !final_min.is_number() ||
      !final_max.is_number()) {
    return false;
  }
  if (initial_min.number() > initial_max.number()) return false;
  if (final_min.number() > final_max.number()) return false;
  return unit.as_unit().has_value();
}

std::string DeviationEntry::row_key() const {
  return is_always() ? "always" : format_number(*at_time);
}

const ParameterDecl* TakeOffDsr::find_parameter(std::string_view symbol) const {
  for (const auto& p : parameters) {
    if (p.symbol == symbol) return &p;
  }
  return nullptr;
}

const ConditionsRow* TakeOffDsr::find_row(std::string_view symbol) const {
  for (const auto& row : conditions) {
    if (row.symbol == symbol) return &row;
  }
  return nullptr;
}

TakeOffDsr parse_dsr_document(std::string_view text) {
  const json doc = parse_json_strict(text);
  require_keys(doc,
               {"dsr_type", "id", "parameters", "conditions", "horizontal_deviation",
                "altitude_deviation"},
               "document");

  const std::string dsr_type = get_string(doc, "dsr_type", "document");
  if (dsr_type != "take_off_performance") {
    throw UnsupportedDsrType("unsupported dsr_type '" + dsr_type + "'");
  }

  TakeOffDsr dsr;
  dsr.id = get_string(doc, "id", "document");

  const auto& params = doc.at("parameters");
  if (!params.is_array()) throw SyntaxError("document.parameters must be an array");
  std::set<std::string> param_symbols;
  for (const auto& item : params) {
    require_keys(item, {"symbol", "name", "unit", "role"}, "parameter");
    ParameterDecl decl;
    decl.symbol = get_string(item, "symbol", "parameter");
    decl.display_name = get_string(item, "name", "parameter");
    decl.unit = canonical_unit_text(get_string(item, "unit", "parameter"));
    const std::string role = get_string(item, "role", "parameter");
    if (role == "state") {
      decl.role = ParameterRole::state;
    } else if (role == "performance") {
      decl.role = ParameterRole::performance;
    } else {
      throw SyntaxError("parameter role must be \"state\" or \"performance\", got '" + role + "'");
    }
    if (!param_symbols.insert(decl.symbol).second) {
      throw SyntaxError("duplicate parameter symbol '" + decl.symbol + "'");
    }
    dsr.parameters.push_back(std::move(decl));
  }

  const auto& conditions = doc.at("conditions");
  if (!conditions.is_array()) throw SyntaxError("document.conditions must be an array");
  std::set<std::string> row_symbols;
  for (const auto& item : conditions) {
    require_keys(item, {"symbol", "initial_min", "initial_max", "final_min", "final_max", "unit"},
                 "conditions row");
    ConditionsRow row;
    row.symbol = get_string(item, "symbol", "conditions row");
    const std::string where = "conditions row '" + row.symbol + "'";
    row.initial_min = cell_from_json(item.at("initial_min"), where + ".initial_min", false);
    row.initial_max = cell_from_json(item.at("initial_max"), where + ".initial_max", false);
    row.final_min = cell_from_json(item.at("final_min"), where + ".final_min", false);
    row.final_max = cell_from_json(item.at("final_max"), where + ".final_max", false);
    row.unit = cell_from_json(item.at("unit"), where + ".unit", true);
    if (!row_symbols.insert(row.symbol).second) {
      throw SyntaxError("duplicate conditions row for symbol '" + row.symbol + "'");
    }
    dsr.conditions.push_back(std::move(row));
  }

  dsr.horizontal_deviation =
      parse_deviation_table(doc.at("horizontal_deviation"), "horizontal_deviation");
  dsr.altitude_deviation =
      parse_deviation_table(doc.at("altitude_deviation"), "altitude_deviation");
  return dsr;
}

std::string serialize_dsr_document(const TakeOffDsr& dsr) {
  json doc;
  doc["dsr_type"] = "take_off_performance";
  doc["id"] = dsr.id;

  json params = json::array();
  for (const auto& decl : dsr.parameters) {
    json item;
    item["symbol"] = decl.symbol;
    item["name"] = decl.display_name;
    item["unit"] = decl.unit;
    item["role"] = decl.role == ParameterRole::state ? "state" : "performance";
    params.push_back(std::move(item));
  }
  doc["parameters"] = std::move(params);

  json rows = json::array();
  for (const auto& row : dsr.conditions) {
    json item;
    item["symbol"] = row.symbol;
    item["initial_min"] = cell_to_json(row.initial_min);
    item["initial_max"] = cell_to_json(row.initial_max);
    item["final_min"] = cell_to_json(row.final_min);
    item["final_max"] = cell_to_json(row.final_max);
    item["unit"] = cell_to_json(row.unit);
    rows.push_back(std::move(item));
  }
  doc["conditions"] = std::move(rows);

  doc["horizontal_deviation"] = deviation_table_to_json(dsr.horizontal_deviation);
  doc["altitude_deviation"] = deviation_table_to_json(dsr.altitude_deviation);
  return doc.dump(2) + "\n";
}

std::optional<double> effective_bound(std::span<const DeviationEntry> table, double t) {
  if (t < 0.0 || std::isnan(t)) throw std::invalid_argument("time must be >= 0");
  std::optional<double> bound;
  for (const auto& entry : table) {
    if (!entry.is_always() && *entry.at_time > t) continue;
    if (!entry.bound.is_number()) {
      throw NonNumericBound("deviation entry '" + entry.row_key() + "' has a non-numeric bound");
    }
    bound = bound ? std::min(*bound, entry.bound.number()) : entry.bound.number();
  }
  return bound;
}

std::vector<std::string> dbt_blockers(const TakeOffDsr& dsr) {
  std::vector<std::string> blockers;
  for (const auto& row : dsr.conditions) {
    if (!row.dbt_clean()) {
      blockers.push_back("conditions row '" + row.symbol +
                         "' is not clean (numeric ranges with min <= max and a recognized unit)");
    }
  }
  const auto check_table = [&](const std::vector<DeviationEntry>& table, const char* name) {
    bool numeric_always = false;
    for (const auto& entry : table) {
      if (!entry.bound.is_number()) {
        blockers.push_back(std::string(name) + " entry '" + entry.row_key() +
                           "' has a non-numeric bound");
      } else if (entry.is_always()) {
        numeric_always = true;
      }
    }
    if (!numeric_always) {
      blockers.push_back(std::string(name) + " table has no numeric always entry");
    }
  };
  check_table(dsr.horizontal_deviation, "horizontal_deviation");
  check_table(dsr.altitude_deviation, "altitude_deviation");
  return blockers;
}

}  // namespace takeoff
