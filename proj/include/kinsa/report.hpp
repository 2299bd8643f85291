#pragma once

// Deterministic text emission: CSV reports for scan hits and determinant
// surfaces, plus plain matrix printing for the CLI. All numbers use the
// shortest round-trip decimal form, so output is byte-stable across runs,
// worker counts, and locales.

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "kinsa/kinematics.hpp"
#include "kinsa/singularity.hpp"
#include "kinsa/text.hpp"

namespace kinsa {

// Header: q1_deg..qn_deg,det,det11,det22,sigma_min,class. Angles are the
// reported degrees (exact grid values for scan hits); det11/det22 print as
// nan for models where the block decoupling does not apply.
inline void write_hits_csv(std::ostream& out,
                           const std::vector<SingularSample>& hits, int dof) {
    for (int i = 1; i <= dof; ++i) {
        out << 'q' << i << "_deg,";
    }
    out << "det,det11,det22,sigma_min,class\n";
    for (const SingularSample& hit : hits) {
        for (int i = 0; i < dof; ++i) {
            out << format_double(hit.q_deg[i]) << ',';
        }
        out << format_double(hit.det_value) << ',' << format_double(hit.det11)
            << ',' << format_double(hit.det22) << ','
            << format_double(hit.min_singular_value) << ','
            << to_string(hit.classification) << '\n';
    }
}

inline std::string hits_csv(const std::vector<SingularSample>& hits, int dof) {
    std::ostringstream out;
    write_hits_csv(out, hits, dof);
    return out.str();
}

// Row-major surface dump; header theta_<i>_deg[,theta_<j>_deg],det with the
// swept joint numbers substituted.
inline void write_surface_csv(std::ostream& out, const DetSurface& surface) {
    const bool two_axes = !surface.axis2_deg.empty();
    out << "theta_" << surface.joints[0] << "_deg,";
    if (two_axes) out << "theta_" << surface.joints[1] << "_deg,";
    out << "det\n";
    for (Eigen::Index i = 0; i < surface.values.rows(); ++i) {
        for (Eigen::Index j = 0; j < surface.values.cols(); ++j) {
            out << format_double(surface.axis1_deg[i]) << ',';
            if (two_axes) out << format_double(surface.axis2_deg[j]) << ',';
            out << format_double(surface.values(i, j)) << '\n';
        }
    }
}

inline std::string surface_csv(const DetSurface& surface) {
    std::ostringstream out;
    write_surface_csv(out, surface);
    return out.str();
}

inline void write_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ' ';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

inline void write_transform(std::ostream& out, const HomogeneousTransform& t) {
    write_matrix(out, t.matrix());
}

}  // namespace kinsa
