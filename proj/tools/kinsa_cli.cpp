// kinsa command-line front end.
//
// Subcommands:
//   catalog              list the built-in robot models
//   fk                   forward kinematics at a configuration
//   jac                  geometric Jacobian, blocks, determinants, rank
//   scan                 dense grid scan for singular configurations
//   surface              determinant surface dump (scan without the hits)
//   verify               numeric self-checks for a model
//
// Angles on the command line are degrees; files and library calls use
// radians. Exit codes: 0 success, 1 usage error, 2 computation or data
// error (verify also exits 2 when a check fails).

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kinsa/kinsa.hpp"

namespace {

using namespace kinsa;

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        tokens.push_back(text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return tokens;
}

double parse_double_or_fail(const std::string& token, const std::string& what) {
    double value = 0.0;
    if (!detail::parse_plain_double(token, value) || !std::isfinite(value)) {
        throw std::invalid_argument("bad " + what + " '" + token + "'");
    }
    return value;
}

int parse_int_or_fail(const std::string& token, const std::string& what) {
    int value = 0;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), last, value);
    if (ec != std::errc() || ptr != last) {
        throw std::invalid_argument("bad " + what + " '" + token + "'");
    }
    return value;
}

// Accepts a catalog key or a path to a robot definition file.
RobotModel resolve_robot(const std::string& spec) {
    const std::vector<std::string>& names = builtin_names();
    if (std::find(names.begin(), names.end(), spec) != names.end()) {
        return builtin(spec);
    }
    if (std::filesystem::exists(spec)) {
        return load_robot_file(spec);
    }
    std::string message = "unknown robot '" + spec + "' (expected one of";
    for (const std::string& name : names) message += ' ' + name;
    message += ", or a robot definition file path)";
    throw std::invalid_argument(message);
}

// Comma-separated degrees, one per joint, converted to radians.
JointVector parse_configuration(const std::string& text, const RobotModel& model) {
    const std::vector<std::string> tokens = split_commas(text);
    if (static_cast<int>(tokens.size()) != model.dof()) {
        throw std::invalid_argument(
            "--q expects " + std::to_string(model.dof()) + " comma-separated " +
            "degree values for '" + model.name + "', got " +
            std::to_string(tokens.size()));
    }
    JointVector q(model.dof());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        q[static_cast<Eigen::Index>(i)] =
            deg2rad(parse_double_or_fail(tokens[i], "joint angle"));
    }
    return q;
}

// Repeated `--fixed k=v` settings (degrees) over a zero base configuration.
JointVector parse_fixed(const std::vector<std::string>& settings,
                        const RobotModel& model) {
    JointVector fixed = JointVector::Zero(model.dof());
    for (const std::string& setting : settings) {
        const std::size_t equals = setting.find('=');
        if (equals == std::string::npos) {
            throw std::invalid_argument("bad --fixed '" + setting +
                                        "' (expected <joint>=<degrees>)");
        }
        const int joint =
            parse_int_or_fail(setting.substr(0, equals), "--fixed joint");
        if (joint < 1 || joint > model.dof()) {
            throw std::invalid_argument("--fixed joint " + std::to_string(joint) +
                                        " out of range 1.." +
                                        std::to_string(model.dof()));
        }
        fixed[joint - 1] =
            deg2rad(parse_double_or_fail(setting.substr(equals + 1), "--fixed value"));
    }
    return fixed;
}

std::vector<int> parse_sweep(const std::string& text) {
    std::vector<int> joints;
    for (const std::string& token : split_commas(text)) {
        joints.push_back(parse_int_or_fail(token, "--sweep joint"));
    }
    return joints;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

struct PoseOptions {
    std::string robot;
    std::string q_text;
    bool frames = false;
    bool blocks = false;
    bool det = false;
    bool rank_flag = false;
};

void run_fk(const PoseOptions& opts) {
    const RobotModel model = resolve_robot(opts.robot);
    const JointVector q = parse_configuration(opts.q_text, model);
    const FrameChain chain = forward_kinematics(model, q);
    if (opts.frames) {
        for (std::size_t i = 0; i < chain.transforms.size(); ++i) {
            std::cout << "frame " << i + 1 << '\n';
            write_transform(std::cout, chain.transforms[i]);
        }
        return;
    }
    write_transform(std::cout, chain.transforms.back());
}

void run_jac(const PoseOptions& opts) {
    const RobotModel model = resolve_robot(opts.robot);
    const JointVector q = parse_configuration(opts.q_text, model);
    const GeometricJacobian jac = geometric_jacobian(model, q);
    if (opts.blocks) {
        const JacobianBlocks blocks = partition(jac);
        std::cout << "J11\n";
        write_matrix(std::cout, blocks.j11);
        std::cout << "J12\n";
        write_matrix(std::cout, blocks.j12);
        std::cout << "J21\n";
        write_matrix(std::cout, blocks.j21);
        std::cout << "J22\n";
        write_matrix(std::cout, blocks.j22);
    } else {
        write_matrix(std::cout, jac.matrix);
    }
    if (opts.det) {
        std::cout << "det " << format_double(determinant(jac.matrix)) << '\n';
        if (model.wrist_centered) {
            const JacobianBlocks blocks = partition(jac);
            std::cout << "det11 " << format_double(blocks.j11.determinant())
                      << '\n';
            std::cout << "det22 " << format_double(blocks.j22.determinant())
                      << '\n';
        }
    }
    if (opts.rank_flag) {
        std::cout << "rank " << rank(jac.matrix) << '\n';
    }
}

struct ScanOptions {
    std::string robot;
    std::string sweep;
    double step = 1.0;
    double threshold = 1e-6;
    std::string target = "full";
    std::vector<std::string> fixed;
    bool respect_limits = false;
    bool cluster = false;
    bool refine_hits = false;
    std::string out_path;
    std::string surface_path;
};

void run_scan(const ScanOptions& opts, bool surface_only) {
    const RobotModel model = resolve_robot(opts.robot);
    ScanConfig config;
    config.free_joints = parse_sweep(opts.sweep);
    config.step_deg = opts.step;
    config.threshold = surface_only ? 0.0 : opts.threshold;
    config.target = parse_target(opts.target);
    config.respect_limits = opts.respect_limits;
    if (!opts.fixed.empty()) config.fixed = parse_fixed(opts.fixed, model);
    const ScanResult result = grid_scan(model, config);

    if (surface_only) {
        if (opts.out_path.empty()) {
            write_surface_csv(std::cout, result.surface);
        } else {
            write_text_file(opts.out_path, surface_csv(result.surface));
        }
        return;
    }

    std::vector<SingularSample> hits = result.hits;
    if (opts.cluster) hits = cluster_hits(hits, config);
    if (opts.refine_hits) {
        const int joint = config.free_joints.back();
        for (SingularSample& hit : hits) {
            try {
                const RefineResult refined =
                    refine(model, hit.q, joint, config.target);
                SingularSample polished =
                    classify(model, refined.q, config.threshold);
                polished.det_value = refined.det_value;
                hit = polished;
            } catch (const NoSignChangeError& e) {
                std::cerr << "note: hit at";
                for (Eigen::Index i = 0; i < hit.q_deg.size(); ++i) {
                    std::cerr << ' ' << format_double(hit.q_deg[i]);
                }
                std::cerr << " deg kept unrefined: " << e.what() << '\n';
            }
        }
    }
    if (opts.out_path.empty()) {
        write_hits_csv(std::cout, hits, model.dof());
    } else {
        write_text_file(opts.out_path, hits_csv(hits, model.dof()));
    }
    if (!opts.surface_path.empty()) {
        write_text_file(opts.surface_path, surface_csv(result.surface));
    }
    std::cerr << "hits: " << hits.size() << '\n';
}

struct VerifyOptions {
    std::string robot;
    int samples = 100;
};

int run_verify(const VerifyOptions& opts) {
    const RobotModel model = resolve_robot(opts.robot);
    if (opts.samples < 1) {
        throw std::invalid_argument("--samples must be at least 1");
    }
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    const auto random_q = [&] {
        JointVector q(model.dof());
        for (Eigen::Index i = 0; i < q.size(); ++i) q[i] = angle(rng);
        return q;
    };
    bool all_ok = true;
    const auto report = [&](const std::string& name, bool pass,
                            const std::string& value) {
        std::cout << (pass ? "ok: " : "FAIL: ") << name << " (" << value << ")\n";
        all_ok = all_ok && pass;
    };

    double worst = 0.0;
    for (int s = 0; s < opts.samples; ++s) {
        const FrameChain chain = forward_kinematics(model, random_q());
        for (const HomogeneousTransform& t : chain.transforms) {
            const Eigen::Matrix3d gram =
                t.rotation * t.rotation.transpose() - Eigen::Matrix3d::Identity();
            worst = std::max(worst, gram.cwiseAbs().maxCoeff());
        }
    }
    report("rotation orthonormality", worst <= 1e-12,
           "max deviation " + format_double(worst));

    worst = 0.0;
    for (int s = 0; s < opts.samples; ++s) {
        const JointVector q = random_q();
        const Matrix6X analytic = geometric_jacobian(model, q).matrix;
        const Matrix6X fd = finite_difference_jacobian(model, q);
        worst = std::max(worst, (analytic - fd).cwiseAbs().maxCoeff());
    }
    report("finite-difference agreement", worst <= 1e-6,
           "max entry error " + format_double(worst));

    worst = 0.0;
    for (int k = 0; k < 360; ++k) {
        worst = std::max(worst, std::abs(rad2deg(deg2rad(k)) - k));
    }
    report("degree round trip", worst <= 1e-12,
           "max deviation " + format_double(worst));

    if (model.wrist_centered) {
        double worst_j12 = 0.0;
        double worst_factor = 0.0;
        double worst_wrist = 0.0;
        for (int s = 0; s < opts.samples; ++s) {
            const JointVector q = random_q();
            const GeometricJacobian jac = geometric_jacobian(model, q);
            const JacobianBlocks blocks = partition(jac);
            worst_j12 = std::max(worst_j12, blocks.j12.cwiseAbs().maxCoeff());
            const double det = determinant(jac.matrix);
            const double split =
                blocks.j11.determinant() * blocks.j22.determinant();
            worst_factor = std::max(
                worst_factor,
                std::abs(det - split) - (1e-9 * std::abs(det) + 1e-15));
            worst_wrist = std::max(
                worst_wrist, std::abs(blocks.j22.determinant() + std::sin(q[4])));
        }
        report("wrist block decoupling", worst_j12 <= 1e-12,
               "max |J12| entry " + format_double(worst_j12));
        report("determinant factorization", worst_factor <= 0.0,
               "max tolerance excess " + format_double(worst_factor));
        report("wrist determinant closed form", worst_wrist <= 1e-12,
               "max deviation " + format_double(worst_wrist));
    }

    if (model.name == "wam6-code") {
        worst = 0.0;
        for (int s = 0; s < opts.samples; ++s) {
            worst = std::max(worst, closed_form_residual(model, "wam-det11",
                                                         random_q()));
        }
        report("arm determinant closed form", worst <= 5e-3,
               "max residual " + format_double(worst));
    }
    if (model.name == "our6") {
        worst = 0.0;
        for (int s = 0; s < opts.samples; ++s) {
            worst = std::max(worst,
                             closed_form_residual(model, "our-full", random_q()));
        }
        report("full determinant closed form", worst <= 5e-4,
               "max residual " + format_double(worst));
        worst = 0.0;
        for (int s = 0; s < opts.samples; ++s) {
            JointVector q = random_q();
            q[2] = (s % 2 == 0) ? 0.0 : kPi;
            worst = std::max(
                worst, std::abs(determinant(geometric_jacobian(model, q).matrix)));
        }
        report("flat elbow forces singularity", worst <= 1e-12,
               "max |det| " + format_double(worst));
    }
    return all_ok ? 0 : 2;
}

void run_catalog() {
    for (const std::string& name : builtin_names()) {
        const RobotModel model = builtin(name);
        std::cout << model.name << ' ' << model.dof() << " dof "
                  << (model.wrist_centered ? "wrist-centered" : "general")
                  << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial-manipulator kinematics and singularity analysis"};
    app.require_subcommand(1);

    PoseOptions fk_opts;
    CLI::App* fk = app.add_subcommand("fk", "forward kinematics");
    fk->add_option("--robot", fk_opts.robot, "catalog key or robot file")
        ->required();
    fk->add_option("--q", fk_opts.q_text, "joint angles in degrees, comma-separated")
        ->required();
    fk->add_flag("--frames", fk_opts.frames, "print every cumulative frame");

    PoseOptions jac_opts;
    CLI::App* jac = app.add_subcommand("jac", "geometric Jacobian");
    jac->add_option("--robot", jac_opts.robot, "catalog key or robot file")
        ->required();
    jac->add_option("--q", jac_opts.q_text, "joint angles in degrees, comma-separated")
        ->required();
    jac->add_flag("--blocks", jac_opts.blocks, "print the 3x3 partition");
    jac->add_flag("--det", jac_opts.det,
                  "print det(J), plus det(J11)/det(J22) when decoupled");
    jac->add_flag("--rank", jac_opts.rank_flag, "print the numerical rank");

    ScanOptions scan_opts;
    CLI::App* scan = app.add_subcommand("scan", "grid scan for singularities");
    scan->add_option("--robot", scan_opts.robot, "catalog key or robot file")
        ->required();
    scan->add_option("--sweep", scan_opts.sweep,
                     "swept joints, e.g. 2,3 (degrees cover [0,360))")
        ->required();
    scan->add_option("--step", scan_opts.step, "grid step in degrees");
    scan->add_option("--threshold", scan_opts.threshold,
                     "|det| cutoff for reporting a hit");
    scan->add_option("--target", scan_opts.target,
                     "determinant to scan: full, j11, or j22");
    scan->add_option("--fixed", scan_opts.fixed,
                     "non-swept joint setting <joint>=<degrees>, repeatable");
    scan->add_flag("--respect-limits", scan_opts.respect_limits,
                   "clip the sweep to the joint limits");
    scan->add_flag("--cluster", scan_opts.cluster,
                   "merge adjacent hits, keeping the smallest |det|");
    scan->add_flag("--refine", scan_opts.refine_hits,
                   "bisect each hit to a root along the last swept joint");
    scan->add_option("--out", scan_opts.out_path,
                     "write the hit CSV here instead of stdout");
    scan->add_option("--surface", scan_opts.surface_path,
                     "also write the full determinant surface CSV here");

    ScanOptions surface_opts;
    CLI::App* surface =
        app.add_subcommand("surface", "determinant surface over a sweep");
    surface->add_option("--robot", surface_opts.robot, "catalog key or robot file")
        ->required();
    surface->add_option("--sweep", surface_opts.sweep, "swept joints, e.g. 2,3")
        ->required();
    surface->add_option("--step", surface_opts.step, "grid step in degrees");
    surface->add_option("--target", surface_opts.target,
                        "determinant to scan: full, j11, or j22");
    surface->add_option("--fixed", surface_opts.fixed,
                        "non-swept joint setting <joint>=<degrees>, repeatable");
    surface->add_flag("--respect-limits", surface_opts.respect_limits,
                      "clip the sweep to the joint limits");
    surface->add_option("--out", surface_opts.out_path,
                        "write the surface CSV here instead of stdout");

    VerifyOptions verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "numeric self-checks");
    verify->add_option("--robot", verify_opts.robot, "catalog key or robot file")
        ->required();
    verify->add_option("--samples", verify_opts.samples,
                       "random configurations per check");

    CLI::App* catalog = app.add_subcommand("catalog", "list built-in models");

    int exit_code = 0;
    fk->callback([&] { run_fk(fk_opts); });
    jac->callback([&] { run_jac(jac_opts); });
    scan->callback([&] { run_scan(scan_opts, false); });
    surface->callback([&] { run_scan(surface_opts, true); });
    verify->callback([&] { exit_code = run_verify(verify_opts); });
    catalog->callback([&] { run_catalog(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
