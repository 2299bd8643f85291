#pragma once

// Domain types for revolute serial manipulators described by standard
// (distal) Denavit-Hartenberg tables, plus the built-in robot catalog.
//
// Unit conventions: lengths in meters, angles in radians everywhere.
// Degrees appear only at the CLI boundary.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace kinsa {

inline constexpr double kPi = std::numbers::pi;

inline double deg2rad(double deg) { return deg * (kPi / 180.0); }
inline double rad2deg(double rad) { return rad * (180.0 / kPi); }

// Wraps an angle into (-pi, pi].
inline double normalize_angle(double rad) {
    double wrapped = std::remainder(rad, 2.0 * kPi);
    if (wrapped <= -kPi) wrapped += 2.0 * kPi;
    return wrapped;
}

// Joint travel range in radians; scans respect it on request, FK does not.
struct JointLimits {
    double min = -kPi;
    double max = kPi;
};

// One revolute joint's DH parameters. The joint variable theta_i enters as
// theta + theta_offset; a, alpha, d are constants of the link geometry.
struct DhRow {
    double a = 0.0;             // link length (m)
    double alpha = 0.0;         // link twist (rad)
    double d = 0.0;             // link offset (m)
    double theta_offset = 0.0;  // constant added to the joint variable (rad)
    JointLimits limits{};
};

// Named ordered chain of DH rows. wrist_centered asserts the end-effector
// origin coincides with the wrist center (last three axes intersect there),
// which is what makes the J12 Jacobian block vanish.
struct RobotModel {
    std::string name;
    std::vector<DhRow> rows;
    bool wrist_centered = false;

    int dof() const { return static_cast<int>(rows.size()); }
};

// Joint configuration, radians, one entry per DH row.
using JointVector = Eigen::VectorXd;

inline void check_dimension(const RobotModel& model, const JointVector& q) {
    if (q.size() != model.dof()) {
        throw std::invalid_argument(
            "joint vector has " + std::to_string(q.size()) + " entries, model '" +
            model.name + "' has " + std::to_string(model.dof()) + " joints");
    }
    for (Eigen::Index i = 0; i < q.size(); ++i) {
        if (!std::isfinite(q[i])) {
            throw std::invalid_argument(
                "joint " + std::to_string(i + 1) + " is not finite");
        }
    }
}

// Structural validation; returns human-readable violations (empty = valid).
inline std::vector<std::string> validate(const RobotModel& model) {
    std::vector<std::string> violations;
    if (model.rows.empty()) {
        violations.push_back("no joints");
        return violations;
    }
    for (std::size_t i = 0; i < model.rows.size(); ++i) {
        const DhRow& row = model.rows[i];
        const std::string where = "row " + std::to_string(i + 1);
        if (!std::isfinite(row.a)) violations.push_back(where + ": a is not finite");
        if (!std::isfinite(row.alpha)) violations.push_back(where + ": alpha is not finite");
        if (!std::isfinite(row.d)) violations.push_back(where + ": d is not finite");
        if (!std::isfinite(row.theta_offset)) {
            violations.push_back(where + ": theta_offset is not finite");
        }
        if (!std::isfinite(row.limits.min) || !std::isfinite(row.limits.max)) {
            violations.push_back(where + ": limit is not finite");
        } else if (!(row.limits.min < row.limits.max)) {
            violations.push_back(where + ": limits min >= max");
        }
    }
    return violations;
}

namespace detail {

inline DhRow make_row(double a, double alpha, double d) {
    DhRow row;
    row.a = a;
    row.alpha = alpha;
    row.d = d;
    return row;
}

}  // namespace detail

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"our6", "wam6", "wam6-wrist",
                                                   "wam6-code"};
    return names;
}

// Built-in catalog. a2 of the wam6 variants is sqrt(0.55^2 + 0.045^2);
// wam6-code carries the rounded a2 = 0.5518 and a3 = -0.45 that the printed
// Det11 coefficients were generated from, kept as its own model because it
// disagrees with the wam6 table values.
inline RobotModel builtin(const std::string& name) {
    using detail::make_row;
    RobotModel model;
    model.name = name;
    if (name == "our6") {
        model.rows = {
            make_row(0.0, kPi / 2.0, 0.0),   make_row(0.43, 0.0, 0.145),
            make_row(0.336, 0.0, -0.145),    make_row(0.0, -kPi / 2.0, 0.115),
            make_row(0.0, kPi / 2.0, 0.115), make_row(0.0, 0.0, 0.115),
        };
        return model;
    }
    const double wam_a2 = std::sqrt(0.55 * 0.55 + 0.045 * 0.045);
    if (name == "wam6") {
        model.rows = {
            make_row(0.0, -kPi / 2.0, 0.0), make_row(wam_a2, 0.0, 0.0),
            make_row(-0.045, kPi / 2.0, 0.0), make_row(0.0, -kPi / 2.0, 0.3),
            make_row(0.0, kPi / 2.0, 0.0),  make_row(0.0, 0.0, 0.06),
        };
        return model;
    }
    if (name == "wam6-wrist") {
        model.wrist_centered = true;
        model.rows = {
            make_row(0.0, -kPi / 2.0, 0.0), make_row(wam_a2, 0.0, 0.0),
            make_row(-0.045, kPi / 2.0, 0.0), make_row(0.0, -kPi / 2.0, 0.3),
            make_row(0.0, kPi / 2.0, 0.0),  make_row(0.0, 0.0, 0.0),
        };
        return model;
    }
    if (name == "wam6-code") {
        model.wrist_centered = true;
        model.rows = {
            make_row(0.0, -kPi / 2.0, 0.0), make_row(0.5518, 0.0, 0.0),
            make_row(-0.45, kPi / 2.0, 0.0), make_row(0.0, -kPi / 2.0, 0.3),
            make_row(0.0, kPi / 2.0, 0.0),  make_row(0.0, 0.0, 0.0),
        };
        return model;
    }
    throw std::invalid_argument("unknown catalog key '" + name +
                                "' (known: our6, wam6, wam6-wrist, wam6-code)");
}

}  // namespace kinsa
