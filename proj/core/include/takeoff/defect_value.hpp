#pragma once

#include <span>

#include "takeoff/errors.hpp"

namespace takeoff::dbt {

/// Defect value of a scenario or partition: a non-negative finite score or
/// infinity (requirement violated). Totally ordered with infinity maximal.
class DefectValue {
 public:
  DefectValue() = default;

  static DefectValue finite(double value);
  static DefectValue infinite() {
    DefectValue v;
    v.infinite_ = true;
    return v;
  }

  /// Reciprocal-margin score: infinite for margin <= 0 (violation, with the
  /// zero-margin boundary counted as a violation), zero for an unbounded
  /// margin, 1/margin otherwise.
  static DefectValue from_margin(double margin);

  bool is_infinite() const { return infinite_; }

  /// Finite score; throws std::logic_error when infinite.
  double finite_value() const;

  bool operator==(const DefectValue& other) const {
    return infinite_ == other.infinite_ && (infinite_ || value_ == other.value_);
  }
  bool operator<(const DefectValue& other) const {
    if (infinite_) return false;
    if (other.infinite_) return true;
    return value_ < other.value_;
  }
  bool operator>(const DefectValue& other) const { return other < *this; }
  bool operator<=(const DefectValue& other) const { return !(other < *this); }
  bool operator>=(const DefectValue& other) const { return !(*this < other); }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

/// Partition score: the left-to-right sum of the finite values, infinite as
/// soon as any summand is infinite. Callers pass scenario values in
/// ascending scenario order so floating-point sums reproduce exactly.
/// Throws EmptyInput on an empty list.
DefectValue consolidate(std::span<const DefectValue> values);

}  // namespace takeoff::dbt
