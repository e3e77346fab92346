#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "takeoff/cell.hpp"
#include "takeoff/dsr.hpp"

namespace takeoff::qa {

/// Defect categories, each tied to the quality characteristic it violates:
/// completeness, unambiguity, consistency, adequacy, pertinence,
/// traceability.
enum class DefectCategory {
  omission,
  imprecise,
  contradiction,
  incorrect_domain_law,
  superfluous,
  traceability,
};

enum class Element { conditions, horizontal_deviation, altitude_deviation, parameters };

enum class Severity { error, warning };

std::string_view category_name(DefectCategory category);
std::string_view element_name(Element element);

struct Location {
  Element element = Element::conditions;
  std::string row;   // row symbol, deviation row key, or "" for table-level
  std::string cell;  // cell name within the row, or "" for row-level

  auto operator<=>(const Location&) const = default;
};

struct DefectFinding {
  DefectCategory category = DefectCategory::omission;
  Location location;
  std::string message;
  Severity severity = Severity::error;

  bool operator==(const DefectFinding&) const = default;
};

/// Admissible range for one parameter, in its canonical unit.
struct Constraint {
  std::string symbol;
  double min = 0.0;
  double max = 0.0;
  Unit unit = Unit::degree;
  std::string rationale;

  bool operator==(const Constraint&) const = default;
};

/// Domain baseline the documents are checked against: per-parameter ranges
/// plus the set of symbols that belong to the maneuver at all.
struct ConstraintSet {
  std::vector<Constraint> constraints;
  std::set<std::string> allowed_symbols;

  const Constraint* find(std::string_view symbol) const;
};

/// Parses the baseline JSON ({allowed_symbols, constraints}); throws
/// SyntaxError on malformed input or violated invariants (duplicate
/// constraint symbols, min > max, unknown unit, constraint symbol outside
/// allowed_symbols).
ConstraintSet parse_constraint_set(std::string_view text);

struct DefectReport {
  std::string dsr_id;
  std::vector<DefectFinding> findings;
  bool dbt_ready = false;

  std::string to_json() const;
  std::string to_text() const;
};

/// Completeness: missing cells, declared state parameters without a
/// conditions row, deviation tables without an always entry.
std::vector<DefectFinding> check_omission(const TakeOffDsr& dsr);

/// Unambiguity: text cells that are not a single number, unit cells that do
/// not name a recognized unit. Numeric cells never trigger this.
std::vector<DefectFinding> check_imprecision(const TakeOffDsr& dsr);

/// Consistency: min > max within a side, row/entry units that differ from
/// the declared parameter unit, angle rows with mutually different units.
std::vector<DefectFinding> check_contradiction(const TakeOffDsr& dsr);

/// Adequacy: numeric range cells outside the baseline range for their
/// symbol. A symbol without a baseline constraint yields a traceability
/// finding instead of an error.
std::vector<DefectFinding> check_adequacy(const TakeOffDsr& dsr, const ConstraintSet& baseline);

/// Pertinence: rows or declarations for symbols outside the domain set, and
/// (warning-grade) time-step bounds looser than the table's always bound,
/// which can never tighten anything.
std::vector<DefectFinding> check_pertinence(const TakeOffDsr& dsr, const ConstraintSet& baseline);

/// Traceability: table symbols never declared in `parameters`; with a
/// baseline, conditions symbols that lack a constraint.
std::vector<DefectFinding> check_traceability(const TakeOffDsr& dsr,
                                              const ConstraintSet* baseline);

/// Runs every check, deduplicates by (category, location), sorts findings
/// canonically (element, row, cell, category) and computes dbt_ready:
/// no error-grade findings, every row clean, both tables with a numeric
/// always entry. Warnings do not block readiness.
DefectReport run_all_checks(const TakeOffDsr& dsr, const ConstraintSet& baseline);

/// The baseline-free subset (omission, imprecision, contradiction,
/// declaration traceability), aggregated the same way.
DefectReport run_structural_checks(const TakeOffDsr& dsr);

}  // namespace takeoff::qa
