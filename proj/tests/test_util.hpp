#pragma once

// Shared helpers for the unit suite: deterministic RNG sampling and
// whole-model bitwise comparison.

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "kinsa/model.hpp"

namespace testutil {

inline kinsa::JointVector random_config(std::mt19937_64& rng, int n,
                                        double lo = -kinsa::kPi,
                                        double hi = kinsa::kPi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    kinsa::JointVector q(n);
    for (int i = 0; i < n; ++i) q[i] = dist(rng);
    return q;
}

inline bool models_equal(const kinsa::RobotModel& a, const kinsa::RobotModel& b) {
    if (a.name != b.name || a.wrist_centered != b.wrist_centered ||
        a.rows.size() != b.rows.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const kinsa::DhRow& ra = a.rows[i];
        const kinsa::DhRow& rb = b.rows[i];
        if (ra.a != rb.a || ra.alpha != rb.alpha || ra.d != rb.d ||
            ra.theta_offset != rb.theta_offset ||
            ra.limits.min != rb.limits.min || ra.limits.max != rb.limits.max) {
            return false;
        }
    }
    return true;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace testutil
