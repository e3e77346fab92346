#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "takeoff/dsr.hpp"

namespace takeoff::dbt {

/// Break points of the campaign grid over initial pitch (degrees), initial
/// yaw (degrees) and target height (meters). Each axis needs at least two
/// strictly increasing entries.
struct PartitionSpec {
  std::vector<double> theta_breaks;
  std::vector<double> psi_breaks;
  std::vector<double> h_breaks;

  std::size_t theta_count() const { return theta_breaks.size() - 1; }
  std::size_t psi_count() const { return psi_breaks.size() - 1; }
  std::size_t h_count() const { return h_breaks.size() - 1; }

  std::string to_json() const;
  bool operator==(const PartitionSpec&) const = default;
};

/// Parses {theta_breaks, psi_breaks, h_breaks}; container errors raise
/// SyntaxError, semantic ones surface later through validate_spec.
PartitionSpec parse_partition_spec(std::string_view text);

/// Throws InvalidSpec unless every axis has >= 2 strictly increasing finite
/// breaks.
void validate_spec(const PartitionSpec& spec);

/// Throws InvalidSpec when the spec's outer bounds fall outside the
/// document's initial theta/psi ranges or the target-height (final h)
/// range. The referenced rows must be numeric.
void validate_spec_against_dsr(const PartitionSpec& spec, const TakeOffDsr& dsr);

/// Half-open axis interval ]lo,hi], closed on the left for the first
/// interval of an axis.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool closed_lo = false;

  bool contains(double x) const { return (closed_lo ? x >= lo : x > lo) && x <= hi; }
  std::string label() const;

  bool operator==(const Interval&) const = default;
};

struct GridIndex {
  int theta = 0;
  int psi = 0;
  int h = 0;

  bool operator==(const GridIndex&) const = default;
};

struct Partition {
  GridIndex index;
  std::size_t ordinal = 0;  // row-major position: theta outer, h inner
  Interval theta_iv;
  Interval psi_iv;
  Interval h_iv;

  bool contains(double theta0, double psi0, double h_target) const {
    return theta_iv.contains(theta0) && psi_iv.contains(psi0) && h_iv.contains(h_target);
  }

  bool operator==(const Partition&) const = default;
};

/// Cartesian product of the per-axis intervals in deterministic row-major
/// order (theta outer, h inner). Throws InvalidSpec on a bad spec.
std::vector<Partition> build_partitions(const PartitionSpec& spec);

/// Index of the unique partition containing the point, under the
/// closed-first/left-open-rest convention. Throws OutOfRange outside the
/// outer bounds.
GridIndex partition_index(const PartitionSpec& spec, double theta0, double psi0, double h_target);

std::size_t flat_ordinal(const PartitionSpec& spec, const GridIndex& index);

}  // namespace takeoff::dbt
