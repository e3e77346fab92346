#include "takeoff/cell.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace takeoff {

namespace {

std::string to_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

}  // namespace

std::optional<Unit> parse_unit(std::string_view text) {
  const std::string lowered = to_lower(text);
  if (lowered == "degree" || lowered == "deg") return Unit::degree;
  if (lowered == "meter" || lowered == "m") return Unit::meter;
  if (lowered == "second" || lowered == "s") return Unit::second;
  return std::nullopt;
}

std::string_view unit_name(Unit unit) {
  switch (unit) {
    case Unit::degree: return "degree";
    case Unit::meter: return "meter";
    case Unit::second: return "second";
  }
  return "?";
}

std::string canonical_unit_text(std::string_view text) {
  if (auto unit = parse_unit(text)) return std::string(unit_name(*unit));
  return to_lower(text);
}

Cell Cell::number(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("cell numbers must be finite");
  Cell c;
  c.value_ = value;
  return c;
}

Cell Cell::text(std::string raw) {
  Cell c;
  c.value_ = std::move(raw);
  return c;
}

std::optional<Unit> Cell::as_unit() const {
  if (!is_text()) return std::nullopt;
  return parse_unit(text());
}

}  // namespace takeoff
