#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace tsppc {

// Shortest decimal text that parses back to exactly the same double
// ("37", "1149.3398", "1e-06"). Locale-independent.
std::string format_double(double value);

// Fixed scientific notation with the given significant figures ("5.83e+02").
std::string format_scientific(double value, int significant);

// Locale-independent full-string conversions; nullopt on any trailing junk.
std::optional<double> parse_double(std::string_view text);
std::optional<long long> parse_int(std::string_view text);

std::string_view trim(std::string_view text);

} // namespace tsppc
