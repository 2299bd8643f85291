#pragma once

// Standard (distal) Denavit-Hartenberg transforms and forward kinematics.
//
// The per-joint matrix, with c/s abbreviating cos/sin and the effective
// angle t = theta + theta_offset:
//
//     [ c(t)  -s(t)c(a)   s(t)s(a)   a c(t) ]
//     [ s(t)   c(t)c(a)  -c(t)s(a)   a s(t) ]
//     [ 0      s(a)       c(a)       d      ]
//     [ 0      0          0          1      ]
//
// cos(alpha) and sin(alpha) are snapped to exact {-1, 0, 1} when within
// 1e-12, so structural zeros produced by quarter-turn twists are exact.
// The snap applies only to the constant alpha, never to the joint variable.

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "kinsa/model.hpp"

namespace kinsa {

// Rigid transform; the implicit bottom row is (0, 0, 0, 1).
struct HomogeneousTransform {
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d translation = Eigen::Vector3d::Zero();

    Eigen::Matrix4d matrix() const {
        Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
        m.topLeftCorner<3, 3>() = rotation;
        m.topRightCorner<3, 1>() = translation;
        return m;
    }

    HomogeneousTransform operator*(const HomogeneousTransform& other) const {
        HomogeneousTransform out;
        out.rotation = rotation * other.rotation;
        out.translation = rotation * other.translation + translation;
        return out;
    }
};

namespace detail {

inline constexpr double kSnapTolerance = 1e-12;

inline double snap_unit(double value) {
    if (std::abs(value) <= kSnapTolerance) return 0.0;
    if (std::abs(value - 1.0) <= kSnapTolerance) return 1.0;
    if (std::abs(value + 1.0) <= kSnapTolerance) return -1.0;
    return value;
}

}  // namespace detail

inline HomogeneousTransform dh_transform(const DhRow& row, double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("joint angle is not finite");
    }
    const double t = theta + row.theta_offset;
    const double ct = std::cos(t);
    const double st = std::sin(t);
    const double ca = detail::snap_unit(std::cos(row.alpha));
    const double sa = detail::snap_unit(std::sin(row.alpha));
    HomogeneousTransform out;
    out.rotation << ct, -st * ca, st * sa,
                    st, ct * ca, -ct * sa,
                    0.0, sa, ca;
    out.translation << row.a * ct, row.a * st, row.d;
    return out;
}

// Cumulative transforms plus the per-joint origins and axes the Jacobian
// needs. transforms[k] is T^0_{k+1} (base to frame k+1); origins[i] and
// axes[i] are p_i and z_i, with p_0 = 0 and z_0 = (0, 0, 1) for the base.
struct FrameChain {
    std::vector<HomogeneousTransform> transforms;
    std::vector<Eigen::Vector3d> origins;
    std::vector<Eigen::Vector3d> axes;
    Eigen::Vector3d end_position = Eigen::Vector3d::Zero();
};

inline FrameChain forward_kinematics(const RobotModel& model,
                                     const JointVector& q) {
    check_dimension(model, q);
    const int n = model.dof();
    FrameChain chain;
    chain.transforms.reserve(n);
    chain.origins.reserve(n);
    chain.axes.reserve(n);
    chain.origins.emplace_back(0.0, 0.0, 0.0);
    chain.axes.emplace_back(0.0, 0.0, 1.0);
    HomogeneousTransform current;
    for (int i = 0; i < n; ++i) {
        current = current * dh_transform(model.rows[i], q[i]);
        chain.transforms.push_back(current);
        if (i + 1 < n) {
            chain.origins.push_back(current.translation);
            chain.axes.push_back(current.rotation.col(2));
        }
    }
    chain.end_position = current.translation;
    return chain;
}

inline HomogeneousTransform end_effector_pose(const RobotModel& model,
                                              const JointVector& q) {
    return forward_kinematics(model, q).transforms.back();
}

}  // namespace kinsa
