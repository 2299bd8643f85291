#pragma once

// Shared text plumbing for the robot-definition and fixture file formats:
// line iteration with '#' comments, exact-pi angle tokens, and shortest
// round-trip number formatting.

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "kinsa/model.hpp"

namespace kinsa {

// Error with the 1-based line number of the offending input line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Shortest decimal that parses back to exactly the same double.
inline std::string format_double(double value) {
    char buffer[32];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buffer, ptr);
}

namespace detail {

inline std::string_view strip_comment(std::string_view line) {
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    return line;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                     line[pos] == '\r')) {
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' &&
               line[pos] != '\r') {
            ++pos;
        }
        if (pos > start) fields.push_back(line.substr(start, pos - start));
    }
    return fields;
}

// Calls fn(line_number, content) for every line, comments stripped.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    int line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::size_t end = (eol == std::string_view::npos) ? text.size() : eol;
        ++line_number;
        fn(line_number, strip_comment(text.substr(pos, end - pos)));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
}

inline bool parse_plain_double(std::string_view token, double& out) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return false;
    out = value;
    return true;
}

// Angle fields additionally accept the exact tokens pi, pi/2, -pi/2, -pi.
inline bool parse_angle_token(std::string_view token, double& out) {
    if (token == "pi") {
        out = kPi;
        return true;
    }
    if (token == "-pi") {
        out = -kPi;
        return true;
    }
    if (token == "pi/2") {
        out = kPi / 2.0;
        return true;
    }
    if (token == "-pi/2") {
        out = -kPi / 2.0;
        return true;
    }
    return parse_plain_double(token, out);
}

// Emits the exact tokens back out when the value is bit-exactly one of them.
inline std::string format_angle(double value) {
    if (value == kPi) return "pi";
    if (value == -kPi) return "-pi";
    if (value == kPi / 2.0) return "pi/2";
    if (value == -kPi / 2.0) return "-pi/2";
    return format_double(value);
}

inline double require_plain_double(int line, std::string_view token,
                                   std::string_view what) {
    double value = 0.0;
    if (!parse_plain_double(token, value)) {
        throw ParseError(line, "bad number for " + std::string(what) + ": '" +
                                   std::string(token) + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError(line,
                         "non-finite number for " + std::string(what));
    }
    return value;
}

inline double require_angle(int line, std::string_view token,
                            std::string_view what) {
    double value = 0.0;
    if (!parse_angle_token(token, value)) {
        throw ParseError(line, "bad angle for " + std::string(what) + ": '" +
                                   std::string(token) + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError(line, "non-finite angle for " + std::string(what));
    }
    return value;
}

inline int require_int(int line, std::string_view token, std::string_view what) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(line, "bad integer for " + std::string(what) + ": '" +
                                   std::string(token) + "'");
    }
    return value;
}

}  // namespace detail
}  // namespace kinsa
