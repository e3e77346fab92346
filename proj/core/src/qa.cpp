#include "takeoff/qa.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <tuple>

#include "json_util.hpp"
#include "takeoff/format.hpp"

namespace takeoff::qa {

namespace {

constexpr std::array<std::string_view, 3> kAngleSymbols = {"theta", "psi", "phi"};
constexpr std::array<std::string_view, 4> kStateSymbols = {"theta", "psi", "phi", "h"};

bool is_angle_symbol(std::string_view symbol) {
  return std::find(kAngleSymbols.begin(), kAngleSymbols.end(), symbol) != kAngleSymbols.end();
}

DefectFinding make_finding(DefectCategory category, Element element, std::string row,
                           std::string cell, std::string message,
                           Severity severity = Severity::error) {
  return DefectFinding{category, Location{element, std::move(row), std::move(cell)},
                       std::move(message), severity};
}

struct NamedCell {
  const char* name;
  const Cell* cell;
};

std::array<NamedCell, 4> range_cells(const ConditionsRow& row) {
  return {{{"initial_min", &row.initial_min},
           {"initial_max", &row.initial_max},
           {"final_min", &row.final_min},
           {"final_max", &row.final_max}}};
}

Element table_element(bool horizontal) {
  return horizontal ? Element::horizontal_deviation : Element::altitude_deviation;
}

const char* table_symbol(bool horizontal) { return horizontal ? "dxy" : "dh_ov"; }

/// True when the cell spells exactly the declared unit. Anything else —
/// missing, numeric, or a different spelling — counts as a mismatch.
bool unit_matches(const Cell& cell, const std::string& declared_unit) {
  return cell.is_text() && cell.text() == declared_unit;
}

void check_entry_units(const TakeOffDsr& dsr, bool horizontal,
                       std::vector<DefectFinding>& findings) {
  const ParameterDecl* decl = dsr.find_parameter(table_symbol(horizontal));
  if (decl == nullptr) return;
  const auto& table = horizontal ? dsr.horizontal_deviation : dsr.altitude_deviation;
  for (const auto& entry : table) {
    if (!unit_matches(entry.unit, decl->unit)) {
      findings.push_back(make_finding(
          DefectCategory::contradiction, table_element(horizontal), entry.row_key(), "unit",
          "entry unit does not match declared unit '" + decl->unit + "' of " + decl->symbol));
    }
  }
}

std::string cell_repr(const Cell& cell) {
  if (cell.is_missing()) return "(missing)";
  if (cell.is_number()) return format_number(cell.number());
  return "'" + cell.text() + "'";
}

/// Dedup by (category, location) keeping the first message, then sort by
/// (element, row, cell, category) so reports are deterministic.
std::vector<DefectFinding> aggregate(std::vector<DefectFinding> findings) {
  std::vector<DefectFinding> unique;
  for (auto& finding : findings) {
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const DefectFinding& other) {
      return other.category == finding.category && other.location == finding.location;
    });
    if (!seen) unique.push_back(std::move(finding));
  }
  std::stable_sort(unique.begin(), unique.end(),
                   [](const DefectFinding& a, const DefectFinding& b) {
                     return std::tie(a.location.element, a.location.row, a.location.cell,
                                     a.category) <
                            std::tie(b.location.element, b.location.row, b.location.cell,
                                     b.category);
                   });
  return unique;
}

DefectReport build_report(const TakeOffDsr& dsr, std::vector<DefectFinding> findings) {
  DefectReport report;
  report.dsr_id = dsr.id;
  report.findings = aggregate(std::move(findings));
  const bool has_error =
      std::any_of(report.findings.begin(), report.findings.end(),
                  [](const DefectFinding& f) { return f.severity == Severity::error; });
  report.dbt_ready = !has_error && dbt_blockers(dsr).empty();
  return report;
}

}  // namespace

std::string_view category_name(DefectCategory category) {
  switch (category) {
    case DefectCategory::omission: return "omission";
    case DefectCategory::imprecise: return "imprecise";
    case DefectCategory::contradiction: return "contradiction";
    case DefectCategory::incorrect_domain_law: return "incorrect_domain_law";
    case DefectCategory::superfluous: return "superfluous";
    case DefectCategory::traceability: return "traceability";
  }
  return "?";
}

std::string_view element_name(Element element) {
  switch (element) {
    case Element::conditions: return "conditions";
    case Element::horizontal_deviation: return "horizontal_deviation";
    case Element::altitude_deviation: return "altitude_deviation";
    case Element::parameters: return "parameters";
  }
  return "?";
}

const Constraint* ConstraintSet::find(std::string_view symbol) const {
  for (const auto& c : constraints) {
    if (c.symbol == symbol) return &c;
  }
  return nullptr;
}

ConstraintSet parse_constraint_set(std::string_view text) {
  const detail::json doc = detail::parse_json_strict(text);
  detail::require_keys(doc, {"allowed_symbols", "constraints"}, {}, "baseline");

  ConstraintSet set;
  const auto& allowed = doc.at("allowed_symbols");
  if (!allowed.is_array()) throw SyntaxError("baseline.allowed_symbols must be an array");
  for (const auto& item : allowed) {
    if (!item.is_string()) throw SyntaxError("baseline.allowed_symbols entries must be strings");
    set.allowed_symbols.insert(item.get<std::string>());
  }

  const auto& constraints = doc.at("constraints");
  if (!constraints.is_array()) throw SyntaxError("baseline.constraints must be an array");
  for (const auto& item : constraints) {
    detail::require_keys(item, {"symbol", "min", "max", "unit"}, {"rationale"}, "constraint");
    Constraint c;
    c.symbol = detail::get_string(item, "symbol", "constraint");
    c.min = detail::get_finite_number(item, "min", "constraint");
    c.max = detail::get_finite_number(item, "max", "constraint");
    const std::string unit_text = detail::get_string(item, "unit", "constraint");
    const auto unit = parse_unit(unit_text);
    if (!unit) throw SyntaxError("constraint '" + c.symbol + "' has unknown unit '" + unit_text + "'");
    c.unit = *unit;
    if (item.contains("rationale")) {
      c.rationale = detail::get_string(item, "rationale", "constraint");
    }
    if (c.min > c.max) throw SyntaxError("constraint '" + c.symbol + "' has min > max");
    if (set.find(c.symbol) != nullptr) {
      throw SyntaxError("duplicate constraint for symbol '" + c.symbol + "'");
    }
    if (!set.allowed_symbols.contains(c.symbol)) {
      throw SyntaxError("constraint symbol '" + c.symbol + "' is not in allowed_symbols");
    }
    set.constraints.push_back(std::move(c));
  }
  return set;
}

std::vector<DefectFinding> check_omission(const TakeOffDsr& dsr) {
  std::vector<DefectFinding> findings;
  for (const auto& row : dsr.conditions) {
    for (const auto& [name, cell] : range_cells(row)) {
      if (cell->is_missing()) {
        findings.push_back(make_finding(DefectCategory::omission, Element::conditions, row.symbol,
                                        name, "value is missing"));
      }
    }
    if (row.unit.is_missing()) {
      findings.push_back(make_finding(DefectCategory::omission, Element::conditions, row.symbol,
                                      "unit", "unit is missing"));
    }
  }
  for (const auto& decl : dsr.parameters) {
    if (decl.role == ParameterRole::state && dsr.find_row(decl.symbol) == nullptr) {
      findings.push_back(make_finding(DefectCategory::omission, Element::conditions, decl.symbol,
                                      "",
                                      "no conditions row for declared state parameter '" +
                                          decl.symbol + "'"));
    }
  }
  for (bool horizontal : {true, false}) {
    const auto& table = horizontal ? dsr.horizontal_deviation : dsr.altitude_deviation;
    bool has_always = false;
    for (const auto& entry : table) {
      if (entry.is_always()) has_always = true;
      if (entry.bound.is_missing()) {
        findings.push_back(make_finding(DefectCategory::omission, table_element(horizontal),
                                        entry.row_key(), "bound", "bound is missing"));
      }
      if (entry.unit.is_missing()) {
        findings.push_back(make_finding(DefectCategory::omission, table_element(horizontal),
                                        entry.row_key(), "unit", "unit is missing"));
      }
    }
    if (!has_always) {
      findings.push_back(make_finding(DefectCategory::omission, table_element(horizontal),
                                      "always", "", "table has no always entry"));
    }
  }
  return aggregate(std::move(findings));
}

std::vector<DefectFinding> check_imprecision(const TakeOffDsr& dsr) {
  std::vector<DefectFinding> findings;
  const auto flag_value = [&](Element element, const std::string& row, const char* cell_name,
                              const Cell& cell) {
    if (cell.is_text() && !parse_number(cell.text())) {
      findings.push_back(make_finding(DefectCategory::imprecise, element, row, cell_name,
                                      "value " + cell_repr(cell) + " is not a single number"));
    }
  };
  const auto flag_unit = [&](Element element, const std::string& row, const Cell& cell) {
    if (cell.is_text() && !cell.as_unit()) {
      findings.push_back(make_finding(DefectCategory::imprecise, element, row, "unit",
                                      "unit " + cell_repr(cell) + " is not a recognized unit"));
    }
  };
  for (const auto& row : dsr.conditions) {
    for (const auto& [name, cell] : range_cells(row)) {
      flag_value(Element::conditions, row.symbol, name, *cell);
    }
    flag_unit(Element::conditions, row.symbol, row.unit);
  }
  for (bool horizontal : {true, false}) {
    const auto& table = horizontal ? dsr.horizontal_deviation : dsr.altitude_deviation;
    for (const auto& entry : table) {
      flag_value(table_element(horizontal), entry.row_key(), "bound", entry.bound);
      flag_unit(table_element(horizontal), entry.row_key(), entry.unit);
    }
  }
  return aggregate(std::move(findings));
}

std::vector<DefectFinding> check_contradiction(const TakeOffDsr& dsr) {
  std::vector<DefectFinding> findings;

  // (a) inverted ranges within one side of a row
  for (const auto& row : dsr.conditions) {
    const auto check_side = [&](const Cell& min_cell, const Cell& max_cell, const char* side) {
      if (min_cell.is_number() && max_cell.is_number() &&
          min_cell.number() > max_cell.number()) {
        findings.push_back(make_finding(
            DefectCategory::contradiction, Element::conditions, row.symbol, side,
            std::string(side) + "_min " + format_number(min_cell.number()) + " exceeds " + side +
                "_max " + format_number(max_cell.number())));
      }
    };
    check_side(row.initial_min, row.initial_max, "initial");
    check_side(row.final_min, row.final_max, "final");
  }

  // (b) unit differs from the declared parameter unit
  for (const auto& row : dsr.conditions) {
    const ParameterDecl* decl = dsr.find_parameter(row.symbol);
    if (decl != nullptr && !unit_matches(row.unit, decl->unit)) {
      findings.push_back(make_finding(DefectCategory::contradiction, Element::conditions,
                                      row.symbol, "unit",
                                      "row unit " + cell_repr(row.unit) +
                                          " does not match declared unit '" + decl->unit + "'"));
    }
  }
  check_entry_units(dsr, true, findings);
  check_entry_units(dsr, false, findings);

  // (c) angle rows must agree on one unit; the reference is the most common
  // recognized unit among them (ties broken by unit order)
  std::map<Unit, int> votes;
  for (const auto& row : dsr.conditions) {
    if (!is_angle_symbol(row.symbol)) continue;
    if (auto unit = row.unit.as_unit()) votes[*unit] += 1;
  }
  if (!votes.empty()) {
    const Unit reference =
        std::max_element(votes.begin(), votes.end(),
                         [](const auto& a, const auto& b) { return a.second < b.second; })
            ->first;
    const std::string reference_text{unit_name(reference)};
    for (const auto& row : dsr.conditions) {
      if (!is_angle_symbol(row.symbol)) continue;
      if (!unit_matches(row.unit, reference_text)) {
        findings.push_back(make_finding(
            DefectCategory::contradiction, Element::conditions, row.symbol, "unit",
            "angle rows use inconsistent units: " + row.symbol + " has " + cell_repr(row.unit) +
                " while the common unit is '" + reference_text + "'"));
      }
    }
  }
  return aggregate(std::move(findings));
}

std::vector<DefectFinding> check_adequacy(const TakeOffDsr& dsr, const ConstraintSet& baseline) {
  std::vector<DefectFinding> findings;
  for (const auto& row : dsr.conditions) {
    const Constraint* constraint = baseline.find(row.symbol);
    if (constraint == nullptr) {
      findings.push_back(make_finding(DefectCategory::traceability, Element::conditions,
                                      row.symbol, "",
                                      "no baseline constraint for symbol '" + row.symbol + "'"));
      continue;
    }
    for (const auto& [name, cell] : range_cells(row)) {
      if (cell->is_number() &&
          (cell->number() < constraint->min || cell->number() > constraint->max)) {
        findings.push_back(make_finding(
            DefectCategory::incorrect_domain_law, Element::conditions, row.symbol, name,
            "value " + format_number(cell->number()) + " is outside the allowed range [" +
                format_number(constraint->min) + "," + format_number(constraint->max) + "]"));
      }
    }
  }
  return aggregate(std::move(findings));
}

std::vector<DefectFinding> check_pertinence(const TakeOffDsr& dsr, const ConstraintSet& baseline) {
  std::vector<DefectFinding> findings;
  for (const auto& row : dsr.conditions) {
    if (!baseline.allowed_symbols.contains(row.symbol)) {
      findings.push_back(make_finding(DefectCategory::superfluous, Element::conditions,
                                      row.symbol, "",
                                      "symbol '" + row.symbol +
                                          "' is not part of the take-off parameter set"));
    }
  }
  for (const auto& decl : dsr.parameters) {
    const bool relevant = decl.role == ParameterRole::state
                              ? baseline.allowed_symbols.contains(decl.symbol)
                              : (decl.symbol == "dxy" || decl.symbol == "dh_ov");
    if (!relevant) {
      findings.push_back(make_finding(DefectCategory::superfluous, Element::parameters,
                                      decl.symbol, "",
                                      "declared parameter '" + decl.symbol +
                                          "' is not part of the take-off parameter set"));
    }
  }
  // Time-step bounds looser than the always bound can never tighten the
  // effective bound; warning-grade since they cannot change any verdict.
  for (bool horizontal : {true, false}) {
    const auto& table = horizontal ? dsr.horizontal_deviation : dsr.altitude_deviation;
    const DeviationEntry* always = nullptr;
    for (const auto& entry : table) {
      if (entry.is_always() && entry.bound.is_number()) always = &entry;
    }
    if (always == nullptr) continue;
    for (const auto& entry : table) {
      if (entry.is_always() || !entry.bound.is_number()) continue;
      if (entry.bound.number() > always->bound.number()) {
        findings.push_back(make_finding(
            DefectCategory::superfluous, table_element(horizontal), entry.row_key(), "bound",
            "bound " + format_number(entry.bound.number()) + " is looser than the always bound " +
                format_number(always->bound.number()) + " and can never apply",
            Severity::warning));
      }
    }
  }
  return aggregate(std::move(findings));
}

std::vector<DefectFinding> check_traceability(const TakeOffDsr& dsr,
                                              const ConstraintSet* baseline) {
  std::vector<DefectFinding> findings;
  for (const auto& row : dsr.conditions) {
    if (dsr.find_parameter(row.symbol) == nullptr) {
      findings.push_back(make_finding(DefectCategory::traceability, Element::conditions,
                                      row.symbol, "symbol",
                                      "symbol '" + row.symbol +
                                          "' is not declared in parameters"));
    }
  }
  for (bool horizontal : {true, false}) {
    const auto& table = horizontal ? dsr.horizontal_deviation : dsr.altitude_deviation;
    const char* symbol = table_symbol(horizontal);
    if (!table.empty() && dsr.find_parameter(symbol) == nullptr) {
      findings.push_back(make_finding(DefectCategory::traceability, table_element(horizontal),
                                      symbol, "",
                                      "performance symbol '" + std::string(symbol) +
                                          "' is not declared in parameters"));
    }
  }
  if (baseline != nullptr) {
    for (const auto& row : dsr.conditions) {
      if (baseline->find(row.symbol) == nullptr) {
        findings.push_back(make_finding(DefectCategory::traceability, Element::conditions,
                                        row.symbol, "",
                                        "no baseline constraint for symbol '" + row.symbol +
                                            "'"));
      }
    }
  }
  return aggregate(std::move(findings));
}

DefectReport run_all_checks(const TakeOffDsr& dsr, const ConstraintSet& baseline) {
  std::vector<DefectFinding> findings;
  const auto append = [&](std::vector<DefectFinding> more) {
    findings.insert(findings.end(), std::make_move_iterator(more.begin()),
                    std::make_move_iterator(more.end()));
  };
  append(check_omission(dsr));
  append(check_imprecision(dsr));
  append(check_contradiction(dsr));
  append(check_adequacy(dsr, baseline));
  append(check_pertinence(dsr, baseline));
  append(check_traceability(dsr, &baseline));
  return build_report(dsr, std::move(findings));
}

DefectReport run_structural_checks(const TakeOffDsr& dsr) {
  std::vector<DefectFinding> findings;
  const auto append = [&](std::vector<DefectFinding> more) {
    findings.insert(findings.end(), std::make_move_iterator(more.begin()),
                    std::make_move_iterator(more.end()));
  };
  append(check_omission(dsr));
  append(check_imprecision(dsr));
  append(check_contradiction(dsr));
  append(check_traceability(dsr, nullptr));
  return build_report(dsr, std::move(findings));
}

std::string DefectReport::to_json() const {
  detail::json doc;
  doc["dsr_id"] = dsr_id;
  doc["dbt_ready"] = dbt_ready;
  detail::json arr = detail::json::array();
  for (const auto& finding : findings) {
    detail::json item;
    item["category"] = std::string(category_name(finding.category));
    item["element"] = std::string(element_name(finding.location.element));
    item["row"] = finding.location.row;
    item["cell"] = finding.location.cell;
    item["message"] = finding.message;
    arr.push_back(std::move(item));
  }
  doc["findings"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::string DefectReport::to_text() const {
  std::ostringstream out;
  std::size_t warnings = 0;
  for (const auto& f : findings) {
    if (f.severity == Severity::warning) warnings++;
  }
  out << "DSR '" << dsr_id << "': " << findings.size() << " finding(s)";
  if (warnings > 0) out << " (" << warnings << " warning(s))";
  out << ", dbt_ready=" << (dbt_ready ? "true" : "false") << "\n";
  for (const auto& finding : findings) {
    out << "  [" << category_name(finding.category) << "] "
        << element_name(finding.location.element);
    if (!finding.location.row.empty()) out << "/" << finding.location.row;
    if (!finding.location.cell.empty()) out << "/" << finding.location.cell;
    out << ": " << finding.message;
    if (finding.severity == Severity::warning) out << " (warning)";
    out << "\n";
  }
  return out.str();
}

}  // namespace takeoff::qa
