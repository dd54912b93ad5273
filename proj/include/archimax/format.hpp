#pragma once

#include <string>
#include <string_view>

namespace archimax {

/// Shortest round-trip decimal form ("nan", "inf", "-inf" for non-finite values).
std::string format_double(double value);

/// Strict full-string parse; throws std::invalid_argument on trailing junk.
double parse_double(std::string_view text);

}  // namespace archimax
