#pragma once

// Robot-definition file format: load, serialize, and the embedded copies of
// the catalog definitions.
//
// Format: '#' comments; one header line `robot <name> [wrist-centered]`;
// then one line per joint, `joint <a> <alpha> <d> <theta_offset> [<min> <max>]`,
// lengths in meters and angles in radians. Angle fields accept the exact
// tokens pi, pi/2, -pi/2, -pi. Missing limits default to [-pi, pi].

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "kinsa/detail/embedded_data.hpp"
#include "kinsa/model.hpp"
#include "kinsa/text.hpp"

namespace kinsa {

inline RobotModel load_robot(std::string_view text) {
    RobotModel model;
    bool have_header = false;
    int header_line = 0;
    detail::for_each_line(text, [&](int line, std::string_view content) {
        const auto fields = detail::split_fields(content);
        if (fields.empty()) return;
        if (fields[0] == "robot") {
            if (have_header) throw ParseError(line, "duplicate robot header");
            if (fields.size() < 2 || fields.size() > 3) {
                throw ParseError(line, "expected 'robot <name> [wrist-centered]'");
            }
            model.name = std::string(fields[1]);
            if (fields.size() == 3) {
                if (fields[2] != "wrist-centered") {
                    throw ParseError(line, "unknown robot attribute '" +
                                               std::string(fields[2]) + "'");
                }
                model.wrist_centered = true;
            }
            have_header = true;
            header_line = line;
            return;
        }
        if (fields[0] == "joint") {
            if (!have_header) {
                throw ParseError(line, "joint line before robot header");
            }
            if (fields.size() != 5 && fields.size() != 7) {
                throw ParseError(
                    line, "expected 'joint <a> <alpha> <d> <theta_offset> "
                          "[<min> <max>]'");
            }
            DhRow row;
            row.a = detail::require_plain_double(line, fields[1], "a");
            row.alpha = detail::require_angle(line, fields[2], "alpha");
            row.d = detail::require_plain_double(line, fields[3], "d");
            row.theta_offset =
                detail::require_angle(line, fields[4], "theta_offset");
            if (fields.size() == 7) {
                row.limits.min = detail::require_angle(line, fields[5], "min");
                row.limits.max = detail::require_angle(line, fields[6], "max");
                if (!(row.limits.min < row.limits.max)) {
                    throw ParseError(line, "joint limits min >= max");
                }
            }
            model.rows.push_back(row);
            return;
        }
        throw ParseError(line,
                         "unknown directive '" + std::string(fields[0]) + "'");
    });
    if (!have_header) throw ParseError(1, "missing robot header");
    if (model.rows.empty()) throw ParseError(header_line, "no joints");
    return model;
}

inline RobotModel load_robot_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open robot file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_robot(buffer.str());
}

// Emits a document that load_robot parses back to a bit-identical model.
// Limits are always written out; exact-pi values round-trip as tokens.
inline std::string serialize(const RobotModel& model) {
    std::string out = "robot " + model.name;
    if (model.wrist_centered) out += " wrist-centered";
    out += '\n';
    for (const DhRow& row : model.rows) {
        out += "joint ";
        out += format_double(row.a);
        out += ' ';
        out += detail::format_angle(row.alpha);
        out += ' ';
        out += format_double(row.d);
        out += ' ';
        out += detail::format_angle(row.theta_offset);
        out += ' ';
        out += detail::format_angle(row.limits.min);
        out += ' ';
        out += detail::format_angle(row.limits.max);
        out += '\n';
    }
    return out;
}

// Embedded copy of the data/robots/<key>.robot file for a catalog key.
inline std::string_view embedded_robot_text(std::string_view key) {
    if (key == "our6") return detail::our6_robot;
    if (key == "wam6") return detail::wam6_robot;
    if (key == "wam6-wrist") return detail::wam6_wrist_robot;
    if (key == "wam6-code") return detail::wam6_code_robot;
    throw std::invalid_argument("unknown catalog key '" + std::string(key) + "'");
}

}  // namespace kinsa
