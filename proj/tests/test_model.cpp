#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "kinsa/model.hpp"
#include "kinsa/robot_text.hpp"
#include "test_util.hpp"

using namespace kinsa;

TEST_CASE("builtin catalog carries the exact table values") {
    const RobotModel our = builtin("our6");
    REQUIRE(our.dof() == 6);
    REQUIRE_FALSE(our.wrist_centered);
    CHECK(our.rows[0].a == 0.0);
    CHECK(our.rows[0].alpha == kPi / 2.0);
    CHECK(our.rows[0].d == 0.0);
    CHECK(our.rows[1].a == 0.43);
    CHECK(our.rows[1].d == 0.145);
    CHECK(our.rows[2].a == 0.336);
    CHECK(our.rows[2].d == -0.145);
    CHECK(our.rows[3].alpha == -kPi / 2.0);
    CHECK(our.rows[4].alpha == kPi / 2.0);
    CHECK(our.rows[5].d == 0.115);

    const RobotModel wam = builtin("wam6");
    CHECK(wam.rows[0].alpha == -kPi / 2.0);
    CHECK(wam.rows[1].a == std::sqrt(0.55 * 0.55 + 0.045 * 0.045));
    CHECK(wam.rows[2].a == -0.045);
    CHECK(wam.rows[3].d == 0.3);
    CHECK(wam.rows[5].d == 0.06);
    CHECK_FALSE(wam.wrist_centered);

    const RobotModel wrist = builtin("wam6-wrist");
    CHECK(wrist.rows[5].d == 0.0);
    CHECK(wrist.wrist_centered);
    for (int i = 0; i < 5; ++i) {
        CHECK(wrist.rows[i].a == wam.rows[i].a);
        CHECK(wrist.rows[i].alpha == wam.rows[i].alpha);
        CHECK(wrist.rows[i].d == wam.rows[i].d);
    }

    const RobotModel code = builtin("wam6-code");
    CHECK(code.rows[1].a == 0.5518);
    CHECK(code.rows[2].a == -0.45);
    CHECK(code.rows[5].d == 0.0);
    CHECK(code.wrist_centered);

    for (const auto& row : our.rows) {
        CHECK(row.theta_offset == 0.0);
        CHECK(row.limits.min == -kPi);
        CHECK(row.limits.max == kPi);
    }

    CHECK_THROWS_AS(builtin("wam7"), std::invalid_argument);
    CHECK(builtin_names().size() == 4);
}

TEST_CASE("validate reports violations") {
    CHECK(validate(builtin("our6")).empty());
    CHECK(validate(builtin("wam6")).empty());

    RobotModel empty;
    empty.name = "empty";
    const auto report = validate(empty);
    REQUIRE(report.size() == 1);
    CHECK(report[0] == "no joints");

    RobotModel degenerate = builtin("our6");
    degenerate.rows[2].limits.min = degenerate.rows[2].limits.max;
    const auto limit_report = validate(degenerate);
    REQUIRE(limit_report.size() == 1);
    CHECK(limit_report[0].find("min >= max") != std::string::npos);

    RobotModel bad_twist = builtin("our6");
    bad_twist.rows[4].alpha = std::nan("");
    const auto nan_report = validate(bad_twist);
    REQUIRE(nan_report.size() == 1);
    CHECK(nan_report[0].find("row 5") != std::string::npos);
    CHECK(nan_report[0].find("alpha") != std::string::npos);
}

TEST_CASE("normalize_angle wraps into (-pi, pi]") {
    CHECK(normalize_angle(0.0) == 0.0);
    CHECK(normalize_angle(kPi) == kPi);
    CHECK(normalize_angle(-kPi) == kPi);
    CHECK(normalize_angle(3.0 * kPi) == Catch::Approx(kPi));
    CHECK(normalize_angle(2.0 * kPi) == Catch::Approx(0.0).margin(1e-15));
    CHECK(std::abs(normalize_angle(deg2rad(350.0)) - deg2rad(-10.0)) < 1e-12);
}

TEST_CASE("check_dimension rejects bad joint vectors") {
    const RobotModel model = builtin("our6");
    CHECK_THROWS_AS(check_dimension(model, JointVector::Zero(5)),
                    std::invalid_argument);
    JointVector q = JointVector::Zero(6);
    CHECK_NOTHROW(check_dimension(model, q));
    q[3] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(check_dimension(model, q), std::invalid_argument);
}

TEST_CASE("load_robot parses the documented format") {
    const std::string text =
        "# comment line\n"
        "robot our6\n"
        "joint 0 pi/2 0 0\n"
        "joint 0.43 0 0.145 0\n"
        "joint 0.336 0 -0.145 0\n"
        "joint 0 -pi/2 0.115 0\n"
        "joint 0 pi/2 0.115 0   # trailing comment\n"
        "joint 0 0 0.115 0 -pi pi\n";
    const RobotModel model = load_robot(text);
    REQUIRE(model.dof() == 6);
    CHECK(model.name == "our6");
    CHECK(model.rows[0].a == 0.0);
    CHECK(model.rows[0].alpha == kPi / 2.0);
    CHECK(model.rows[0].d == 0.0);
    CHECK(model.rows[0].limits.min == -kPi);
    CHECK(model.rows[0].limits.max == kPi);
    CHECK(testutil::models_equal(model, builtin("our6")));
}

TEST_CASE("load_robot error cases carry line numbers") {
    const auto line_of = [](const std::string& text) {
        try {
            load_robot(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };

    SECTION("no joints") {
        try {
            load_robot("robot lonely\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("no joints") != std::string::npos);
        }
    }
    SECTION("joint before header") {
        CHECK(line_of("joint 0 0 0 0\nrobot x\n") == 1);
    }
    SECTION("duplicate header") {
        CHECK(line_of("robot a\nrobot b\n") == 2);
    }
    SECTION("wrong field count") {
        CHECK(line_of("robot x\njoint 0 0 0\n") == 2);
        CHECK(line_of("robot x\njoint 0 0 0 0 -pi\n") == 2);
    }
    SECTION("non-finite number") {
        CHECK(line_of("robot x\njoint nan 0 0 0\n") == 2);
        CHECK(line_of("robot x\njoint 0 inf 0 0\n") == 2);
    }
    SECTION("bad token") {
        CHECK(line_of("robot x\njoint 0 twopi 0 0\n") == 2);
        CHECK(line_of("robot x\njoint zero 0 0 0\n") == 2);
    }
    SECTION("min >= max") {
        CHECK(line_of("robot x\njoint 0 0 0 0 1.0 1.0\n") == 2);
        CHECK(line_of("robot x\njoint 0 0 0 0 2.0 1.0\n") == 2);
    }
    SECTION("unknown directive and attribute") {
        CHECK(line_of("robot x\nlink 0 0 0 0\n") == 2);
        CHECK(line_of("robot x left-handed\n") == 1);
    }
    SECTION("missing header") {
        CHECK(line_of("# just a comment\n") == 1);
    }
}

TEST_CASE("serialize then load is the identity on valid models") {
    for (const std::string& key : builtin_names()) {
        const RobotModel model = builtin(key);
        CHECK(testutil::models_equal(load_robot(serialize(model)), model));
    }

    // Randomly generated models: serialize -> load must be bit-identical,
    // and re-serializing must give the same bytes.
    std::mt19937_64 rng(20260814);
    std::uniform_real_distribution<double> value(-2.0, 2.0);
    std::uniform_int_distribution<int> joints(1, 8);
    std::uniform_int_distribution<int> pick(0, 4);
    const double angle_tokens[] = {kPi, -kPi, kPi / 2.0, -kPi / 2.0};
    for (int trial = 0; trial < 200; ++trial) {
        RobotModel model;
        model.name = "rand" + std::to_string(trial);
        model.wrist_centered = (trial % 3 == 0);
        const int n = joints(rng);
        for (int i = 0; i < n; ++i) {
            DhRow row;
            row.a = value(rng);
            row.d = value(rng);
            const int choice = pick(rng);
            row.alpha = choice < 4 ? angle_tokens[choice] : value(rng);
            row.theta_offset = pick(rng) < 4 ? 0.0 : value(rng);
            const double lo = value(rng);
            row.limits.min = lo;
            row.limits.max = lo + 0.5 + std::abs(value(rng));
            model.rows.push_back(row);
        }
        const std::string text = serialize(model);
        const RobotModel reparsed = load_robot(text);
        REQUIRE(testutil::models_equal(reparsed, model));
        CHECK(serialize(reparsed) == text);
    }
}

TEST_CASE("embedded robot definitions match the builtin catalog bitwise") {
    for (const std::string& key : builtin_names()) {
        const RobotModel parsed = load_robot(embedded_robot_text(key));
        CHECK(testutil::models_equal(parsed, builtin(key)));
    }
    CHECK_THROWS_AS(embedded_robot_text("nope"), std::invalid_argument);
}

TEST_CASE("robot files on disk match the builtin catalog bitwise") {
    const std::string dir = KINSA_DATA_DIR "/robots/";
    for (const std::string& key : builtin_names()) {
        const RobotModel parsed = load_robot_file(dir + key + ".robot");
        CHECK(testutil::models_equal(parsed, builtin(key)));
    }
    CHECK_THROWS_AS(load_robot_file(dir + "missing.robot"), std::runtime_error);
}
