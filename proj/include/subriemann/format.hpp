#pragma once

// Number and record serialization for the command-line tools.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace subriemann {

/// Shortest decimal that parses back to the same double (at most 17 significant digits).
std::string format_number(double x);

/// Parses a complete decimal string; std::nullopt on trailing garbage or overflow.
std::optional<double> parse_number(std::string_view text);

/// Splits on commas and parses every field; surrounding whitespace is ignored.
std::optional<std::vector<double>> parse_number_list(std::string_view text);

/// One CSV field, quoted when it contains a comma, quote or line break.
std::string csv_field(std::string_view text);

/// Writes a header row and numeric rows with LF line endings.
void write_csv(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

}  // namespace subriemann
