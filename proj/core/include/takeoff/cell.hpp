#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace takeoff {

enum class Unit { degree, meter, second };

/// Recognizes a unit spelling ("degree"/"deg", "meter"/"m", "second"/"s",
/// case-insensitive). Returns nullopt for anything else.
std::optional<Unit> parse_unit(std::string_view text);

std::string_view unit_name(Unit unit);

/// Lower-cases a unit spelling and expands known aliases to their canonical
/// names; unrecognized spellings are returned lower-cased but otherwise
/// untouched so the QA checks can report them.
std::string canonical_unit_text(std::string_view text);

/// One table cell. A cell is either absent, a finite number, or raw text
/// preserved verbatim (e.g. "320-360") so defective content survives
/// parsing and can be classified later.
class Cell {
 public:
  Cell() : value_(std::monostate{}) {}

  static Cell missing() { return Cell(); }
  static Cell number(double value);
  static Cell text(std::string raw);

  bool is_missing() const { return std::holds_alternative<std::monostate>(value_); }
  bool is_number() const { return std::holds_alternative<double>(value_); }
  bool is_text() const { return std::holds_alternative<std::string>(value_); }

  double number() const { return std::get<double>(value_); }
  const std::string& text() const { return std::get<std::string>(value_); }

  /// Unit named by a text cell, if any.
  std::optional<Unit> as_unit() const;

  bool operator==(const Cell&) const = default;

 private:
  std::variant<std::monostate, double, std::string> value_;
};

}  // namespace takeoff
