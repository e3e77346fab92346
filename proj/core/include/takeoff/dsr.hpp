#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "takeoff/cell.hpp"
#include "takeoff/errors.hpp"

namespace takeoff {

enum class ParameterRole { state, performance };

/// One declared maneuver parameter. The canonical state symbols are
/// "theta" (pitch), "psi" (yaw), "phi" (roll) and "h" (target height);
/// the performance symbols are "dxy" (horizontal deviation) and "dh_ov"
/// (altitude overshoot). Other symbols parse fine and are left to the
/// pertinence check.
struct ParameterDecl {
  std::string symbol;
  std::string display_name;
  std::string unit;  // canonicalized spelling; may be unrecognized
  ParameterRole role = ParameterRole::state;

  bool operator==(const ParameterDecl&) const = default;
};

/// Initial/final range row for one state parameter.
struct ConditionsRow {
  std::string symbol;
  Cell initial_min;
  Cell initial_max;
  Cell final_min;
  Cell final_max;
  Cell unit;

  /// True when all four range cells are numbers, min <= max on both sides,
  /// and the unit cell names a recognized unit. Only such rows can feed the
  /// test-campaign pipeline.
  bool dbt_clean() const;

  bool operator==(const ConditionsRow&) const = default;
};

/// One deviation-table entry: a global bound (`at_time` empty) or a bound
/// that starts to apply `*at_time` seconds into the table's time scale.
struct DeviationEntry {
  std::optional<double> at_time;  // empty = "always"
  Cell bound;
  Cell unit;

  bool is_always() const { return !at_time.has_value(); }
  /// "always" or the canonical spelling of the time step, used to address
  /// the entry in findings and reports.
  std::string row_key() const;

  bool operator==(const DeviationEntry&) const = default;
};

/// In-memory form of one take-off performance requirement document.
///
/// The horizontal table constrains the planar distance from the take-off
/// point, with time measured from maneuver start. The altitude table
/// constrains |z - h_target|, with time measured from the moment the target
/// height is first reached. Both tables reference their performance symbol
/// ("dxy" / "dh_ov") implicitly.
struct TakeOffDsr {
  std::string id;
  std::vector<ParameterDecl> parameters;
  std::vector<ConditionsRow> conditions;
  std::vector<DeviationEntry> horizontal_deviation;
  std::vector<DeviationEntry> altitude_deviation;

  const ParameterDecl* find_parameter(std::string_view symbol) const;
  const ConditionsRow* find_row(std::string_view symbol) const;

  bool operator==(const TakeOffDsr&) const = default;
};

/// Parses the canonical UTF-8 JSON document format (`.dsr.json`).
///
/// Parsing is total over defective values: cells that are null, numeric, or
/// arbitrary strings always produce a TakeOffDsr. Only broken container
/// syntax raises SyntaxError (bad JSON, duplicate keys, unknown or missing
/// fields, duplicate row symbols or time steps), and a foreign `dsr_type`
/// raises UnsupportedDsrType. Deviation entries are sorted (always first,
/// then ascending time) and unit spellings are canonicalized.
TakeOffDsr parse_dsr_document(std::string_view text);

/// Canonical serialization: stable key order, shortest round-trip number
/// formatting, missing cells as explicit nulls. parse(serialize(d)) == d
/// for every d produced by parse_dsr_document.
std::string serialize_dsr_document(const TakeOffDsr& dsr);

/// Tightest bound applicable at time `t` (seconds on the table's own time
/// scale): the minimum over the always entry and every time-step entry with
/// step <= t. Returns nullopt when no entry applies. Throws NonNumericBound
/// if an applicable entry's bound cell is not a number.
std::optional<double> effective_bound(std::span<const DeviationEntry> table, double t);

/// Human-readable reasons why this document cannot feed a test campaign:
/// rows that are not DBT-clean, deviation entries with non-numeric bounds,
/// tables without a numeric always entry. Empty means structurally ready.
std::vector<std::string> dbt_blockers(const TakeOffDsr& dsr);

}  // namespace takeoff
