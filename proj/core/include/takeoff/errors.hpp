#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace takeoff {

/// Malformed container syntax: broken JSON, duplicate keys, unknown or
/// missing fields, wrong value kinds. Merely defective *values* never raise
/// this; they parse losslessly and are left to the QA checks.
struct SyntaxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Document's dsr_type is not "take_off_performance".
struct UnsupportedDsrType : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An applicable deviation-table bound is not numeric.
struct NonNumericBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Partition breaks are not strictly increasing, have fewer than two
/// entries, or fall outside the document's declared ranges.
struct InvalidSpec : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Point lies outside the partition grid's outer bounds.
struct OutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Document is not clean enough to drive a test campaign.
struct NotDbtReady : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyTrajectory : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A simulation backend failed for one scenario; `ordinal` identifies it.
struct BackendFailure : std::runtime_error {
  BackendFailure(std::size_t scenario_ordinal, const std::string& message)
      : std::runtime_error("scenario " + std::to_string(scenario_ordinal) +
                           ": " + message),
        ordinal(scenario_ordinal) {}
  std::size_t ordinal;
};

}  // namespace takeoff
