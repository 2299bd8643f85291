#pragma once

// Geometric Jacobian assembly and the numeric companions: block partition,
// determinant, SVD rank, manipulability, and a central-difference oracle.
//
// For revolute joint i (1-based), the Jacobian column is
//     ( z_{i-1} x (P - p_{i-1}) ; z_{i-1} )
// with P the end-effector position and p/z taken from the frame chain.

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "kinsa/kinematics.hpp"
#include "kinsa/model.hpp"

namespace kinsa {

using Matrix6X = Eigen::Matrix<double, 6, Eigen::Dynamic>;

struct GeometricJacobian {
    Matrix6X matrix;  // rows 1-3 linear (m/rad), rows 4-6 angular (rad/rad)
    JointVector q;    // configuration the Jacobian was evaluated at

    int dof() const { return static_cast<int>(matrix.cols()); }
};

// The four 3x3 corners of a square 6x6 Jacobian.
struct JacobianBlocks {
    Eigen::Matrix3d j11;  // top-left: linear rows, arm joints
    Eigen::Matrix3d j12;  // top-right: linear rows, wrist joints
    Eigen::Matrix3d j21;  // bottom-left
    Eigen::Matrix3d j22;  // bottom-right
};

inline GeometricJacobian geometric_jacobian(const RobotModel& model,
                                            const JointVector& q) {
    const FrameChain chain = forward_kinematics(model, q);
    const int n = model.dof();
    GeometricJacobian jac;
    jac.matrix.resize(6, n);
    jac.q = q;
    for (int i = 0; i < n; ++i) {
        const Eigen::Vector3d& z = chain.axes[i];
        jac.matrix.col(i).head<3>() = z.cross(chain.end_position - chain.origins[i]);
        jac.matrix.col(i).tail<3>() = z;
    }
    return jac;
}

inline JacobianBlocks partition(const GeometricJacobian& jac) {
    if (jac.matrix.cols() != 6) {
        throw std::invalid_argument("block partition requires a 6x6 Jacobian");
    }
    JacobianBlocks blocks;
    blocks.j11 = jac.matrix.topLeftCorner<3, 3>();
    blocks.j12 = jac.matrix.topRightCorner<3, 3>();
    blocks.j21 = jac.matrix.bottomLeftCorner<3, 3>();
    blocks.j22 = jac.matrix.bottomRightCorner<3, 3>();
    return blocks;
}

// Central-difference check matrix. Linear rows difference the position;
// angular rows recover omega from W = dR/dq_i * R(q)^T, skew-symmetrized to
// suppress the symmetric O(h^2) noise before taking the vee map.
inline Matrix6X finite_difference_jacobian(const RobotModel& model,
                                           const JointVector& q,
                                           double h = 1e-6) {
    if (!(h > 0.0)) throw std::invalid_argument("step h must be positive");
    check_dimension(model, q);
    const int n = model.dof();
    const Eigen::Matrix3d rt = end_effector_pose(model, q).rotation.transpose();
    Matrix6X out(6, n);
    JointVector qp = q;
    JointVector qm = q;
    for (int i = 0; i < n; ++i) {
        qp[i] = q[i] + h;
        qm[i] = q[i] - h;
        const HomogeneousTransform tp = end_effector_pose(model, qp);
        const HomogeneousTransform tm = end_effector_pose(model, qm);
        qp[i] = q[i];
        qm[i] = q[i];
        out.col(i).head<3>() = (tp.translation - tm.translation) / (2.0 * h);
        const Eigen::Matrix3d w = ((tp.rotation - tm.rotation) / (2.0 * h)) * rt;
        const Eigen::Matrix3d s = 0.5 * (w - w.transpose());
        out.col(i).tail<3>() = Eigen::Vector3d(s(2, 1), s(0, 2), s(1, 0));
    }
    return out;
}

// Determinant via LU with partial pivoting (throws on non-square input).
inline double determinant(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant requires a square matrix");
    }
    return Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant();
}

inline Eigen::VectorXd singular_values(const Eigen::MatrixXd& m) {
    return Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
}

// Numerical rank: count of singular values above tol * sigma_max. The
// relative threshold keeps the criterion scale-free across link lengths.
inline int rank(const Eigen::MatrixXd& m, double tol = 1e-9) {
    const Eigen::VectorXd sv = singular_values(m);
    if (sv.size() == 0 || sv[0] == 0.0) return 0;
    const double cutoff = tol * sv[0];
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv[i] > cutoff) ++r;
    }
    return r;
}

// sqrt(det(J J^T)); equals |det J| when J is square.
inline double manipulability(const Eigen::MatrixXd& m) {
    const Eigen::MatrixXd gram = m * m.transpose();
    return std::sqrt(std::max(determinant(gram), 0.0));
}

}  // namespace kinsa
