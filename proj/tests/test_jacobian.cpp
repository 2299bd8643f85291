#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "kinsa/jacobian.hpp"
#include "kinsa/model.hpp"
#include "test_util.hpp"

using namespace kinsa;

TEST_CASE("jacobian columns follow the revolute formula") {
    std::mt19937_64 rng(201);
    for (const std::string& key : builtin_names()) {
        const RobotModel model = builtin(key);
        for (int trial = 0; trial < 20; ++trial) {
            const JointVector q = testutil::random_config(rng, 6);
            const FrameChain chain = forward_kinematics(model, q);
            const GeometricJacobian jac = geometric_jacobian(model, q);
            REQUIRE(jac.matrix.cols() == 6);
            for (int i = 0; i < 6; ++i) {
                const Eigen::Vector3d expected_top =
                    chain.axes[i].cross(chain.end_position - chain.origins[i]);
                CHECK(jac.matrix.col(i).head<3>() == expected_top);
                CHECK(jac.matrix.col(i).tail<3>() == chain.axes[i]);
            }
            // The base axis is z0 = (0,0,1) for every configuration.
            CHECK(jac.matrix.col(0).tail<3>() == Eigen::Vector3d(0.0, 0.0, 1.0));
        }
    }
}

TEST_CASE("WAM entry (6,4) equals cos(t2 + t3)") {
    std::mt19937_64 rng(202);
    for (const std::string& key : {std::string("wam6"), std::string("wam6-wrist"),
                                   std::string("wam6-code")}) {
        const RobotModel model = builtin(key);
        for (int trial = 0; trial < 50; ++trial) {
            const JointVector q = testutil::random_config(rng, 6);
            const GeometricJacobian jac = geometric_jacobian(model, q);
            CHECK(std::abs(jac.matrix(5, 3) - std::cos(q[1] + q[2])) <= 1e-12);
        }
    }
}

TEST_CASE("partition splits and reassembles exactly") {
    std::mt19937_64 rng(203);
    const RobotModel model = builtin("wam6");
    const JointVector q = testutil::random_config(rng, 6);
    const GeometricJacobian jac = geometric_jacobian(model, q);
    const JacobianBlocks blocks = partition(jac);
    Eigen::Matrix<double, 6, 6> rebuilt;
    rebuilt.topLeftCorner<3, 3>() = blocks.j11;
    rebuilt.topRightCorner<3, 3>() = blocks.j12;
    rebuilt.bottomLeftCorner<3, 3>() = blocks.j21;
    rebuilt.bottomRightCorner<3, 3>() = blocks.j22;
    CHECK(rebuilt == jac.matrix);

    RobotModel short_model;
    short_model.name = "short";
    short_model.rows.assign(model.rows.begin(), model.rows.begin() + 3);
    GeometricJacobian short_jac =
        geometric_jacobian(short_model, JointVector::Zero(3));
    CHECK_THROWS_AS(partition(short_jac), std::invalid_argument);
}

TEST_CASE("J12 vanishes exactly for wrist-centered models only") {
    std::mt19937_64 rng(204);
    for (const std::string& key : {std::string("wam6-wrist"), std::string("wam6-code")}) {
        const RobotModel model = builtin(key);
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            const JointVector q = testutil::random_config(rng, 6);
            const JacobianBlocks blocks = partition(geometric_jacobian(model, q));
            worst = std::max(worst, blocks.j12.cwiseAbs().maxCoeff());
        }
        CHECK(worst <= 1e-12);
    }

    // The un-truncated wam6 keeps its 0.06 m tool offset, so J12 is not zero.
    const RobotModel wam = builtin("wam6");
    JointVector q(6);
    q << deg2rad(10), deg2rad(20), deg2rad(30), deg2rad(40), deg2rad(50),
        deg2rad(60);
    const JacobianBlocks blocks = partition(geometric_jacobian(wam, q));
    CHECK(blocks.j12.cwiseAbs().maxCoeff() > 0.01);
}

TEST_CASE("block-triangular determinant factorization for wam6-wrist") {
    std::mt19937_64 rng(205);
    const RobotModel model = builtin("wam6-wrist");
    for (int trial = 0; trial < 100; ++trial) {
        const JointVector q = testutil::random_config(rng, 6);
        const GeometricJacobian jac = geometric_jacobian(model, q);
        const JacobianBlocks blocks = partition(jac);
        const double full = determinant(jac.matrix);
        const double product =
            blocks.j11.determinant() * blocks.j22.determinant();
        CHECK(std::abs(full - product) <= 1e-9 * std::abs(full) + 1e-15);
    }
}

TEST_CASE("finite differences agree with the analytic jacobian") {
    std::mt19937_64 rng(206);
    for (const std::string& key : builtin_names()) {
        const RobotModel model = builtin(key);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const JointVector q = testutil::random_config(rng, 6);
            const Matrix6X fd = finite_difference_jacobian(model, q, 1e-6);
            const Matrix6X analytic = geometric_jacobian(model, q).matrix;
            worst = std::max(worst, (fd - analytic).cwiseAbs().maxCoeff());
        }
        CHECK(worst <= 1e-6);
    }
    CHECK_THROWS_AS(
        finite_difference_jacobian(builtin("our6"), JointVector::Zero(6), 0.0),
        std::invalid_argument);
}

TEST_CASE("central differences converge at second order") {
    // At steps this large truncation dominates roundoff, so halving the
    // step should cut the error by about four.
    std::mt19937_64 rng(207);
    const RobotModel model = builtin("our6");
    double worst_coarse = 0.0;
    double worst_fine = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const JointVector q = testutil::random_config(rng, 6);
        const Matrix6X analytic = geometric_jacobian(model, q).matrix;
        worst_coarse = std::max(
            worst_coarse,
            (finite_difference_jacobian(model, q, 1e-3) - analytic)
                .cwiseAbs()
                .maxCoeff());
        worst_fine = std::max(
            worst_fine, (finite_difference_jacobian(model, q, 5e-4) - analytic)
                            .cwiseAbs()
                            .maxCoeff());
    }
    CHECK(worst_fine < worst_coarse);
    CHECK(worst_coarse / worst_fine > 2.0);
}

TEST_CASE("FD columns stay small where the analytic column is zero") {
    // Wrist-centered models have zero linear rows for joints 4..6 (their
    // axes pass through the end-effector origin).
    std::mt19937_64 rng(208);
    const RobotModel model = builtin("wam6-wrist");
    for (int trial = 0; trial < 20; ++trial) {
        const JointVector q = testutil::random_config(rng, 6);
        const Matrix6X fd = finite_difference_jacobian(model, q, 1e-6);
        for (int col = 3; col < 6; ++col) {
            CHECK(fd.col(col).head<3>().norm() <= 1e-6);
        }
    }
}

TEST_CASE("determinant, rank, and manipulability basics") {
    Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(6, 6);
    double product = 1.0;
    for (int i = 0; i < 6; ++i) {
        diag(i, i) = 0.5 + i;
        product *= diag(i, i);
    }
    CHECK(std::abs(determinant(diag) - product) <= 1e-12 * product);
    CHECK_THROWS_AS(determinant(Eigen::MatrixXd::Zero(6, 5)),
                    std::invalid_argument);

    CHECK(rank(Eigen::MatrixXd::Identity(6, 6)) == 6);
    Eigen::MatrixXd deficient = Eigen::MatrixXd::Identity(6, 6);
    deficient(5, 5) = 0.0;
    CHECK(rank(deficient) == 5);
    CHECK(rank(Eigen::MatrixXd::Zero(6, 6)) == 0);
    CHECK(rank(deficient, 1e-16) == 5);

    std::mt19937_64 rng(209);
    const RobotModel model = builtin("our6");
    for (int trial = 0; trial < 100; ++trial) {
        const JointVector q = testutil::random_config(rng, 6);
        const Matrix6X jac = geometric_jacobian(model, q).matrix;
        CHECK(std::abs(manipulability(jac) - std::abs(determinant(jac))) <= 1e-9);
    }
}

TEST_CASE("determinant magnitude is invariant under the base joint") {
    // Rotating joint 1 conjugates J by a rotation, so det cannot change.
    std::mt19937_64 rng(210);
    for (const std::string& key : builtin_names()) {
        const RobotModel model = builtin(key);
        for (int trial = 0; trial < 20; ++trial) {
            JointVector q = testutil::random_config(rng, 6);
            const double base = determinant(geometric_jacobian(model, q).matrix);
            for (double delta : {0.4, 1.3, -2.2}) {
                JointVector shifted = q;
                shifted[0] += delta;
                const double det =
                    determinant(geometric_jacobian(model, shifted).matrix);
                CHECK(std::abs(std::abs(det) - std::abs(base)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("dependence structure of the decoupled determinants") {
    std::mt19937_64 rng(211);
    SECTION("WAM det11 depends only on t2 and t3") {
        for (const std::string& key :
             {std::string("wam6-wrist"), std::string("wam6-code")}) {
            const RobotModel model = builtin(key);
            for (int trial = 0; trial < 25; ++trial) {
                const JointVector q = testutil::random_config(rng, 6);
                const double base =
                    partition(geometric_jacobian(model, q)).j11.determinant();
                for (int joint : {0, 3, 4, 5}) {
                    JointVector shifted = q;
                    shifted[joint] += 0.9;
                    const double det11 =
                        partition(geometric_jacobian(model, shifted))
                            .j11.determinant();
                    CHECK(std::abs(det11 - base) <= 1e-12);
                }
            }
        }
    }
    SECTION("OUR |det| is invariant under t1 and t6") {
        const RobotModel model = builtin("our6");
        for (int trial = 0; trial < 25; ++trial) {
            const JointVector q = testutil::random_config(rng, 6);
            const double base = determinant(geometric_jacobian(model, q).matrix);
            for (int joint : {0, 5}) {
                JointVector shifted = q;
                shifted[joint] += 1.1;
                const double det =
                    determinant(geometric_jacobian(model, shifted).matrix);
                CHECK(std::abs(std::abs(det) - std::abs(base)) <= 1e-9);
            }
        }
    }
}
