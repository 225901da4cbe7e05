#include "wrep/text.hpp"

#include <charconv>
#include <cstdlib>

#include "wrep/error.hpp"

namespace wrep {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<TextLine> data_lines(std::string_view text) {
    std::vector<TextLine> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        const auto line = trim(text.substr(start, end - start));
        if (!line.empty() && line.front() != '#') out.push_back({number, std::string(line)});
        start = end + 1;
    }
    return out;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(std::string_view token, int line) {
    int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || token.empty())
        throw parse_error("expected an integer, got '" + std::string(token) + "'", line);
    return value;
}

double parse_double(std::string_view token, int line) {
    std::string copy(token);
    char* end = nullptr;
    const double value = std::strtod(copy.c_str(), &end);
    if (copy.empty() || end != copy.c_str() + copy.size())
        throw parse_error("expected a number, got '" + copy + "'", line);
    return value;
}

bool starts_with_keyword(std::string_view line, std::string_view keyword) {
    return line.size() > keyword.size() && line.substr(0, keyword.size()) == keyword &&
           (line[keyword.size()] == ' ' || line[keyword.size()] == ':' || line[keyword.size()] == '\t');
}

}  // namespace wrep
