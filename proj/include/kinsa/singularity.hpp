#pragma once

// Singularity location and classification: decoupled arm/wrist determinants
// for wrist-centered models, closed-form regression residuals, dense grid
// scans over joint angles, sign-change refinement, and hit clustering.
//
// Grid angles are generated as integer multiples of the step in degrees and
// converted to radians only at evaluation time, so hit reports carry the
// exact grid coordinates. Scans are embarrassingly parallel; values land in
// a preallocated array by index and hits are collected in a sequential
// row-major pass, making output identical for any worker count.

#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "kinsa/fixtures.hpp"
#include "kinsa/jacobian.hpp"
#include "kinsa/model.hpp"

namespace kinsa {

enum class ScanTarget { full, j11, j22 };

inline const char* to_string(ScanTarget target) {
    switch (target) {
        case ScanTarget::full: return "full";
        case ScanTarget::j11: return "j11";
        case ScanTarget::j22: return "j22";
    }
    return "?";
}

inline ScanTarget parse_target(std::string_view text) {
    if (text == "full") return ScanTarget::full;
    if (text == "j11") return ScanTarget::j11;
    if (text == "j22") return ScanTarget::j22;
    throw std::invalid_argument("unknown scan target '" + std::string(text) +
                                "' (expected full, j11, or j22)");
}

enum class Classification { arm, wrist, both, full_chain };

inline const char* to_string(Classification c) {
    switch (c) {
        case Classification::arm: return "arm";
        case Classification::wrist: return "wrist";
        case Classification::both: return "both";
        case Classification::full_chain: return "full-chain";
    }
    return "?";
}

struct ScanConfig {
    std::vector<int> free_joints;  // 1-based joint indices, one or two
    double step_deg = 1.0;
    JointVector fixed;             // radians; empty means all zeros
    double threshold = 1e-6;       // absolute cutoff on |target det|
    ScanTarget target = ScanTarget::full;
    bool respect_limits = false;   // intersect the sweep with joint limits
};

struct SingularSample {
    JointVector q;          // radians
    Eigen::VectorXd q_deg;  // degrees as reported (exact grid values for hits)
    double det_value = 0.0;
    double det11 = std::numeric_limits<double>::quiet_NaN();
    double det22 = std::numeric_limits<double>::quiet_NaN();
    double min_singular_value = 0.0;
    Classification classification = Classification::full_chain;
};

// Dense determinant surface over one or two swept joints; values(i, j) is
// the target determinant at axis1_deg[i] (and axis2_deg[j] for 2-D sweeps).
struct DetSurface {
    std::vector<int> joints;  // swept joints, 1-based
    std::vector<double> axis1_deg;
    std::vector<double> axis2_deg;  // empty for 1-D sweeps
    Eigen::MatrixXd values;
};

struct ScanResult {
    std::vector<SingularSample> hits;
    DetSurface surface;
};

// Thrown by refine() when neither half-bracket straddles a root.
class NoSignChangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Block determinants of a wrist-centered model. Guards the decoupling
// assumption: J12 must actually vanish, otherwise det(J) does not factor.
inline std::pair<double, double> decoupled_determinants(const RobotModel& model,
                                                        const JointVector& q) {
    if (!model.wrist_centered) {
        throw std::invalid_argument(
            "decoupled determinants require a wrist-centered model; '" +
            model.name + "' is not");
    }
    const JacobianBlocks blocks = partition(geometric_jacobian(model, q));
    const double j12_max = blocks.j12.cwiseAbs().maxCoeff();
    if (j12_max > 1e-9) {
        throw std::runtime_error("J12 max-abs entry " + format_double(j12_max) +
                                 " exceeds 1e-9; model '" + model.name +
                                 "' is mis-flagged as wrist-centered");
    }
    return {blocks.j11.determinant(), blocks.j22.determinant()};
}

// |numeric determinant - transcribed closed form| at q. Key "wam-det11"
// compares the J11 block determinant against the printed Det11 terms; key
// "our-full" compares the full 6x6 determinant against the printed OUR
// expression. Used to identify which WAM variant the printed coefficients
// were generated from.
inline double closed_form_residual(const RobotModel& model,
                                   std::string_view expression_key,
                                   const JointVector& q) {
    const GeometricJacobian jac = geometric_jacobian(model, q);
    if (expression_key == "wam-det11") {
        const double numeric = partition(jac).j11.determinant();
        return std::abs(numeric -
                        builtin_fixtures().expression("wam-det11").evaluate(q));
    }
    if (expression_key == "our-full") {
        const double numeric = determinant(jac.matrix);
        return std::abs(numeric -
                        builtin_fixtures().expression("our-det").evaluate(q));
    }
    throw std::invalid_argument("unknown closed-form key '" +
                                std::string(expression_key) +
                                "' (expected wam-det11 or our-full)");
}

namespace detail {

inline double target_value(const RobotModel& model, const JointVector& q,
                           ScanTarget target) {
    const GeometricJacobian jac = geometric_jacobian(model, q);
    if (jac.matrix.cols() != 6) {
        throw std::invalid_argument("determinant targets require a 6-dof model");
    }
    switch (target) {
        case ScanTarget::full: return determinant(jac.matrix);
        case ScanTarget::j11: return partition(jac).j11.determinant();
        case ScanTarget::j22: return partition(jac).j22.determinant();
    }
    throw std::logic_error("unreachable scan target");
}

}  // namespace detail

// Full singularity report at q: target determinants, smallest singular
// value, and the arm/wrist attribution. Non-decoupled models are always
// full-chain; for wrist-centered models the block whose determinant sits
// at or below the threshold names the class.
inline SingularSample classify(const RobotModel& model, const JointVector& q,
                               double threshold) {
    const GeometricJacobian jac = geometric_jacobian(model, q);
    SingularSample sample;
    sample.q = q;
    sample.q_deg = q.unaryExpr([](double v) { return rad2deg(v); });
    const Eigen::VectorXd sv = singular_values(jac.matrix);
    sample.min_singular_value = sv[sv.size() - 1];
    const bool square = jac.matrix.cols() == 6;
    if (square) sample.det_value = determinant(jac.matrix);
    if (square && model.wrist_centered) {
        const JacobianBlocks blocks = partition(jac);
        sample.det11 = blocks.j11.determinant();
        sample.det22 = blocks.j22.determinant();
        const bool arm = std::abs(sample.det11) <= threshold;
        const bool wrist = std::abs(sample.det22) <= threshold;
        if (arm && wrist) {
            sample.classification = Classification::both;
        } else if (arm) {
            sample.classification = Classification::arm;
        } else if (wrist) {
            sample.classification = Classification::wrist;
        } else {
            sample.classification = Classification::full_chain;
        }
    } else {
        sample.classification = Classification::full_chain;
    }
    return sample;
}

// Worker cap from KINSA_THREADS; 0 or unset means all hardware cores.
inline unsigned scan_worker_count() {
    const unsigned cores = std::max(1u, std::thread::hardware_concurrency());
    const char* env = std::getenv("KINSA_THREADS");
    if (env == nullptr || *env == '\0') return cores;
    unsigned requested = 0;
    const char* last = env;
    while (*last != '\0') ++last;
    auto [ptr, ec] = std::from_chars(env, last, requested);
    if (ec != std::errc() || ptr != last) {
        throw std::runtime_error("KINSA_THREADS must be a non-negative integer");
    }
    return requested == 0 ? cores : requested;
}

namespace detail {

inline std::vector<double> grid_axis(const RobotModel& model, int joint,
                                     const ScanConfig& config) {
    // Multiples of the step covering [0, 360) degrees.
    const int count =
        static_cast<int>(std::ceil(360.0 / config.step_deg - 1e-9));
    std::vector<double> axis;
    axis.reserve(count);
    const JointLimits& limits = model.rows[joint - 1].limits;
    for (int k = 0; k < count; ++k) {
        const double deg = k * config.step_deg;
        if (config.respect_limits) {
            const double rad = deg2rad(deg);
            if (rad < limits.min || rad > limits.max) continue;
        }
        axis.push_back(deg);
    }
    return axis;
}

inline void validate_scan_config(const RobotModel& model,
                                 const ScanConfig& config) {
    if (config.free_joints.empty()) {
        throw std::invalid_argument("scan needs at least one swept joint");
    }
    if (config.free_joints.size() > 2) {
        throw std::invalid_argument(
            "scan supports one or two swept joints (the surface is 2-D)");
    }
    for (int joint : config.free_joints) {
        if (joint < 1 || joint > model.dof()) {
            throw std::invalid_argument("swept joint " + std::to_string(joint) +
                                        " out of range 1.." +
                                        std::to_string(model.dof()));
        }
    }
    if (config.free_joints.size() == 2 &&
        config.free_joints[0] == config.free_joints[1]) {
        throw std::invalid_argument("swept joints must be distinct");
    }
    if (!(config.step_deg > 0.0)) {
        throw std::invalid_argument("scan step must be positive");
    }
    if (config.threshold < 0.0) {
        throw std::invalid_argument("scan threshold must be non-negative");
    }
    if (config.fixed.size() != 0 && config.fixed.size() != model.dof()) {
        throw std::invalid_argument("fixed joint vector must have " +
                                    std::to_string(model.dof()) + " entries");
    }
}

}  // namespace detail

// Dense scan over one or two joints. Every grid point with |target det|
// strictly below the threshold becomes a SingularSample; the full surface
// is returned for CSV emission. Deterministic for any worker count.
inline ScanResult grid_scan(const RobotModel& model, const ScanConfig& config) {
    detail::validate_scan_config(model, config);
    const int n = model.dof();
    const JointVector fixed =
        config.fixed.size() == 0 ? JointVector(JointVector::Zero(n)) : config.fixed;
    check_dimension(model, fixed);

    ScanResult result;
    result.surface.joints = config.free_joints;
    result.surface.axis1_deg =
        detail::grid_axis(model, config.free_joints[0], config);
    const bool two_axes = config.free_joints.size() == 2;
    if (two_axes) {
        result.surface.axis2_deg =
            detail::grid_axis(model, config.free_joints[1], config);
    }
    const Eigen::Index rows =
        static_cast<Eigen::Index>(result.surface.axis1_deg.size());
    const Eigen::Index cols =
        two_axes ? static_cast<Eigen::Index>(result.surface.axis2_deg.size()) : 1;
    result.surface.values.resize(rows, cols);
    const Eigen::Index total = rows * cols;
    if (total == 0) return result;

    const int first_joint = config.free_joints[0] - 1;
    const int second_joint = two_axes ? config.free_joints[1] - 1 : -1;
    const auto point_q = [&](Eigen::Index i, Eigen::Index j) {
        JointVector q = fixed;
        q[first_joint] = deg2rad(result.surface.axis1_deg[i]);
        if (two_axes) q[second_joint] = deg2rad(result.surface.axis2_deg[j]);
        return q;
    };

    const unsigned workers = std::min<unsigned>(
        scan_worker_count(), static_cast<unsigned>(total));
    std::vector<std::exception_ptr> errors(workers);
    const auto run_range = [&](unsigned w, Eigen::Index begin, Eigen::Index end) {
        try {
            for (Eigen::Index flat = begin; flat < end; ++flat) {
                const Eigen::Index i = flat / cols;
                const Eigen::Index j = flat % cols;
                result.surface.values(i, j) =
                    detail::target_value(model, point_q(i, j), config.target);
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers <= 1) {
        run_range(0, 0, total);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const Eigen::Index begin = total * w / workers;
            const Eigen::Index end = total * (w + 1) / workers;
            pool.emplace_back(run_range, w, begin, end);
        }
        for (std::thread& t : pool) t.join();
    }
    for (const std::exception_ptr& error : errors) {
        if (error) std::rethrow_exception(error);
    }

    // Sequential row-major hit collection keeps output order deterministic.
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            const double value = result.surface.values(i, j);
            if (!(std::abs(value) < config.threshold)) continue;
            const JointVector q = point_q(i, j);
            SingularSample sample = classify(model, q, config.threshold);
            sample.det_value = value;
            sample.q_deg[first_joint] = result.surface.axis1_deg[i];
            if (two_axes) sample.q_deg[second_joint] = result.surface.axis2_deg[j];
            result.hits.push_back(std::move(sample));
        }
    }
    return result;
}

struct RefineResult {
    JointVector q;           // root configuration (radians)
    double det_value = 0.0;  // target determinant at the root
};

// Bisection along one joint from a grid hit. Checks both half-brackets
// [q0 - step, q0] and [q0, q0 + step]: grid hits frequently sit where the
// determinant barely crosses zero twice inside the full bracket, so the
// outer endpoints can agree in sign while each half straddles a root.
// The interval is driven below 1e-13 rad so the root residual lands well
// under the 1e-12 acceptance cutoff.
inline RefineResult refine(const RobotModel& model, const JointVector& q0,
                           int free_joint, ScanTarget target,
                           double half_width = deg2rad(1.0)) {
    check_dimension(model, q0);
    if (free_joint < 1 || free_joint > model.dof()) {
        throw std::invalid_argument("free joint out of range");
    }
    if (!(half_width > 0.0)) {
        throw std::invalid_argument("bracket half-width must be positive");
    }
    const auto f = [&](double x) {
        JointVector q = q0;
        q[free_joint - 1] = x;
        return detail::target_value(model, q, target);
    };
    const double mid = q0[free_joint - 1];
    const double fa = f(mid - half_width);
    const double fm = f(mid);
    const double fb = f(mid + half_width);

    double lo, hi, flo;
    if (fm == 0.0) {
        lo = hi = mid;
        flo = fm;
    } else if (fa == 0.0) {
        lo = hi = mid - half_width;
        flo = fa;
    } else if (fb == 0.0) {
        lo = hi = mid + half_width;
        flo = fb;
    } else if ((fa < 0.0) != (fm < 0.0)) {
        lo = mid - half_width;
        hi = mid;
        flo = fa;
    } else if ((fm < 0.0) != (fb < 0.0)) {
        lo = mid;
        hi = mid + half_width;
        flo = fm;
    } else {
        throw NoSignChangeError(
            "no sign change in either half-bracket around joint " +
            std::to_string(free_joint) +
            " (tangential zero or threshold artifact)");
    }
    for (int iteration = 0; iteration < 200 && hi - lo > 1e-13; ++iteration) {
        const double center = 0.5 * (lo + hi);
        const double fc = f(center);
        if (fc == 0.0) {
            lo = hi = center;
            break;
        }
        if ((flo < 0.0) != (fc < 0.0)) {
            hi = center;
        } else {
            lo = center;
            flo = fc;
        }
    }
    RefineResult out;
    out.q = q0;
    out.q[free_joint - 1] = 0.5 * (lo + hi);
    out.det_value = f(out.q[free_joint - 1]);
    return out;
}

// Merges 8-connected runs of grid hits, keeping the minimum-|det| member of
// each run (earliest in row-major order on ties). Raw scans keep every grid
// hit; this is the optional de-duplication layer on top.
inline std::vector<SingularSample> cluster_hits(
    const std::vector<SingularSample>& hits, const ScanConfig& config) {
    if (hits.empty()) return {};
    using Cell = std::pair<long, long>;
    std::map<Cell, std::size_t> by_cell;
    std::vector<Cell> cells(hits.size());
    for (std::size_t k = 0; k < hits.size(); ++k) {
        const auto grid_index = [&](int joint) {
            return std::lround(hits[k].q_deg[joint - 1] / config.step_deg);
        };
        Cell cell{grid_index(config.free_joints[0]),
                  config.free_joints.size() == 2
                      ? grid_index(config.free_joints[1])
                      : 0L};
        cells[k] = cell;
        by_cell[cell] = k;
    }
    std::vector<bool> visited(hits.size(), false);
    std::vector<SingularSample> merged;
    for (std::size_t k = 0; k < hits.size(); ++k) {
        if (visited[k]) continue;
        // Flood the connected component containing hit k.
        std::vector<std::size_t> component;
        std::vector<std::size_t> frontier{k};
        visited[k] = true;
        while (!frontier.empty()) {
            const std::size_t current = frontier.back();
            frontier.pop_back();
            component.push_back(current);
            for (long di = -1; di <= 1; ++di) {
                for (long dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    const auto it = by_cell.find(
                        {cells[current].first + di, cells[current].second + dj});
                    if (it == by_cell.end() || visited[it->second]) continue;
                    visited[it->second] = true;
                    frontier.push_back(it->second);
                }
            }
        }
        std::size_t best = component.front();
        for (const std::size_t index : component) {
            const bool better =
                std::abs(hits[index].det_value) < std::abs(hits[best].det_value) ||
                (std::abs(hits[index].det_value) == std::abs(hits[best].det_value) &&
                 index < best);
            if (better) best = index;
        }
        merged.push_back(hits[best]);
    }
    return merged;
}

}  // namespace kinsa
