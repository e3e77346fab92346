#include "takeoff/partition.hpp"

#include <algorithm>
#include <cmath>

#include "json_util.hpp"
#include "takeoff/format.hpp"

namespace takeoff::dbt {

namespace {

void validate_axis(const std::vector<double>& breaks, const char* axis) {
  if (breaks.size() < 2) {
    throw InvalidSpec(std::string(axis) + " needs at least two break points");
  }
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (!std::isfinite(breaks[i])) throw InvalidSpec(std::string(axis) + " has a non-finite break");
    if (i > 0 && breaks[i] <= breaks[i - 1]) {
      throw InvalidSpec(std::string(axis) + " breaks must be strictly increasing");
    }
  }
}

int axis_index(const std::vector<double>& breaks, double x, const char* axis) {
  if (!std::isfinite(x) || x < breaks.front() || x > breaks.back()) {
    throw OutOfRange(std::string(axis) + " value " + format_number(x) +
                     " is outside [" + format_number(breaks.front()) + "," +
                     format_number(breaks.back()) + "]");
  }
  const auto it = std::lower_bound(breaks.begin(), breaks.end(), x);
  const auto j = static_cast<std::size_t>(it - breaks.begin());
  return j == 0 ? 0 : static_cast<int>(j) - 1;
}

std::vector<double> parse_breaks(const detail::json& doc, const char* key) {
  const auto& arr = doc.at(key);
  if (!arr.is_array()) throw SyntaxError(std::string("spec.") + key + " must be an array");
  std::vector<double> breaks;
  for (const auto& item : arr) {
    if (!item.is_number()) throw SyntaxError(std::string("spec.") + key + " entries must be numbers");
    breaks.push_back(item.get<double>());
  }
  return breaks;
}

Interval axis_interval(const std::vector<double>& breaks, int i) {
  return Interval{breaks[static_cast<std::size_t>(i)], breaks[static_cast<std::size_t>(i) + 1],
                  i == 0};
}

/// Numeric value of a range cell, or InvalidSpec naming the gap.
double numeric_cell(const TakeOffDsr& dsr, const char* symbol, bool initial, bool min) {
  const ConditionsRow* row = dsr.find_row(symbol);
  if (row == nullptr) {
    throw InvalidSpec(std::string("document has no conditions row for '") + symbol + "'");
  }
  const Cell& cell = initial ? (min ? row->initial_min : row->initial_max)
                             : (min ? row->final_min : row->final_max);
  if (!cell.is_number()) {
    throw InvalidSpec(std::string("conditions row '") + symbol + "' has a non-numeric " +
                      (initial ? "initial" : "final") + " range");
  }
  return cell.number();
}

}  // namespace

std::string Interval::label() const {
  return std::string(closed_lo ? "[" : "]") + format_number(lo) + "," + format_number(hi) + "]";
}

std::string PartitionSpec::to_json() const {
  detail::json doc;
  doc["theta_breaks"] = theta_breaks;
  doc["psi_breaks"] = psi_breaks;
  doc["h_breaks"] = h_breaks;
  return doc.dump(2) + "\n";
}

PartitionSpec parse_partition_spec(std::string_view text) {
  const detail::json doc = detail::parse_json_strict(text);
  detail::require_keys(doc, {"theta_breaks", "psi_breaks", "h_breaks"}, {}, "spec");
  PartitionSpec spec;
  spec.theta_breaks = parse_breaks(doc, "theta_breaks");
  spec.psi_breaks = parse_breaks(doc, "psi_breaks");
  spec.h_breaks = parse_breaks(doc, "h_breaks");
  return spec;
}

void validate_spec(const PartitionSpec& spec) {
  validate_axis(spec.theta_breaks, "theta_breaks");
  validate_axis(spec.psi_breaks, "psi_breaks");
  validate_axis(spec.h_breaks, "h_breaks");
}

void validate_spec_against_dsr(const PartitionSpec& spec, const TakeOffDsr& dsr) {
  validate_spec(spec);
  const auto check = [](const std::vector<double>& breaks, double lo, double hi,
                        const char* axis) {
    if (breaks.front() < lo || breaks.back() > hi) {
      throw InvalidSpec(std::string(axis) + " breaks [" + format_number(breaks.front()) + "," +
                        format_number(breaks.back()) + "] exceed the document range [" +
                        format_number(lo) + "," + format_number(hi) + "]");
    }
  };
  check(spec.theta_breaks, numeric_cell(dsr, "theta", true, true),
        numeric_cell(dsr, "theta", true, false), "theta_breaks");
  check(spec.psi_breaks, numeric_cell(dsr, "psi", true, true),
        numeric_cell(dsr, "psi", true, false), "psi_breaks");
  check(spec.h_breaks, numeric_cell(dsr, "h", false, true),
        numeric_cell(dsr, "h", false, false), "h_breaks");
}

std::vector<Partition> build_partitions(const PartitionSpec& spec) {
  validate_spec(spec);
  std::vector<Partition> partitions;
  partitions.reserve(spec.theta_count() * spec.psi_count() * spec.h_count());
  std::size_t ordinal = 0;
  for (int i = 0; i < static_cast<int>(spec.theta_count()); ++i) {
    for (int j = 0; j < static_cast<int>(spec.psi_count()); ++j) {
      for (int k = 0; k < static_cast<int>(spec.h_count()); ++k) {
        partitions.push_back(Partition{GridIndex{i, j, k}, ordinal++,
                                       axis_interval(spec.theta_breaks, i),
                                       axis_interval(spec.psi_breaks, j),
                                       axis_interval(spec.h_breaks, k)});
      }
    }
  }
  return partitions;
}

GridIndex partition_index(const PartitionSpec& spec, double theta0, double psi0,
                          double h_target) {
  validate_spec(spec);
  return GridIndex{axis_index(spec.theta_breaks, theta0, "theta"),
                   axis_index(spec.psi_breaks, psi0, "psi"),
                   axis_index(spec.h_breaks, h_target, "h")};
}

std::size_t flat_ordinal(const PartitionSpec& spec, const GridIndex& index) {
  return (static_cast<std::size_t>(index.theta) * spec.psi_count() +
          static_cast<std::size_t>(index.psi)) *
             spec.h_count() +
         static_cast<std::size_t>(index.h);
}

}  // namespace takeoff::dbt
