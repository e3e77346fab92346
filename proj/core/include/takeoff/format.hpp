#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace takeoff {

/// Shortest decimal representation that parses back to the same double.
std::string format_number(double value);

/// Parses a whole string (after trimming ASCII whitespace) as one finite
/// decimal number. Returns nullopt for partial matches like "320-360",
/// locale spellings like "0,001", infinities and NaN.
std::optional<double> parse_number(std::string_view text);

}  // namespace takeoff
