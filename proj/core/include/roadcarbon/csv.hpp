#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace roadcarbon::csv {

/// Split one CSV line on commas. No quoting: none of the engine's formats
/// allows embedded commas.
std::vector<std::string> split_line(std::string_view line);

/// Parse a double, throwing SchemaError with file/line/field context.
double parse_double(std::string_view text, std::string_view source, std::size_t line_no,
                    std::size_t field_no);

/// Shortest round-trip representation (used wherever byte-stable output matters).
std::string format_full(double value);

/// Six significant digits, for human-facing tables.
std::string format_sig6(double value);

std::string trim(std::string_view text);

} // namespace roadcarbon::csv
