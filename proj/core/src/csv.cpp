#include "roadcarbon/csv.hpp"

#include "roadcarbon/errors.hpp"

#include <fmt/format.h>

#include <charconv>

namespace roadcarbon::csv {

std::string trim(std::string_view text)
{
    const auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) {
        return {};
    }
    const auto end = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(begin, end - begin + 1));
}

std::vector<std::string> split_line(std::string_view line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

double parse_double(std::string_view text, std::string_view source, std::size_t line_no,
                    std::size_t field_no)
{
    const std::string trimmed = trim(text);
    double value = 0.0;
    const auto* begin = trimmed.data();
    const auto* end = trimmed.data() + trimmed.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || trimmed.empty()) {
        throw SchemaError(fmt::format("{}: line {}, field {}: not a number: '{}'", source,
                                      line_no, field_no, trimmed));
    }
    return value;
}

std::string format_full(double value)
{
    return fmt::format("{}", value);
}

std::string format_sig6(double value)
{
    return fmt::format("{:.6g}", value);
}

} // namespace roadcarbon::csv
