#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wrep {

/// A non-blank, non-comment input line with its 1-based line number.
struct TextLine {
    int number = 0;
    std::string text;
};

/// Splits into lines, trims them and drops blanks and `#` comment lines.
std::vector<TextLine> data_lines(std::string_view text);

std::vector<std::string> split_ws(std::string_view s);

/// Strict decimal integer; throws parse_error tagged with `line`.
int parse_int(std::string_view token, int line);
double parse_double(std::string_view token, int line);

std::string_view trim(std::string_view s);

bool starts_with_keyword(std::string_view line, std::string_view keyword);

}  // namespace wrep
