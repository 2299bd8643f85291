#pragma once

// Machine-readable regression fixtures: DH tables, the WAM arm-singularity
// grid pairs, closed-form determinant coefficient sets, and per-entry
// Jacobian expressions. Fixtures live as data (data/fixtures.txt, embedded
// verbatim at build time) so transcriptions stay diffable.
//
// Expressions are trig polynomials: scale * factor * sum(coeff * monomial),
// where a monomial is a product of sin/cos factors with integer powers and
// each argument is an integer combination of joint variables t1..tn.

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kinsa/detail/embedded_data.hpp"
#include "kinsa/model.hpp"
#include "kinsa/text.hpp"

namespace kinsa {

// One sin/cos factor: trig(sum of coefficient * t_joint) ^ power.
struct TrigFactor {
    bool is_sin = true;
    std::vector<std::pair<int, int>> argument;  // (coefficient, 1-based joint)
    int power = 1;
};

struct TrigMonomial {
    std::vector<TrigFactor> factors;

    double evaluate(const JointVector& q) const {
        double product = 1.0;
        for (const TrigFactor& factor : factors) {
            double arg = 0.0;
            for (const auto& [coeff, joint] : factor.argument) {
                if (joint < 1 || joint > q.size()) {
                    throw std::out_of_range("expression references joint t" +
                                            std::to_string(joint));
                }
                arg += coeff * q[joint - 1];
            }
            double value = factor.is_sin ? std::sin(arg) : std::cos(arg);
            double powered = value;
            for (int k = 1; k < factor.power; ++k) powered *= value;
            product *= powered;
        }
        return product;
    }
};

struct FixtureExpression {
    std::string name;
    double scale = 1.0;
    bool has_factor = false;
    TrigMonomial factor;
    std::vector<std::pair<double, TrigMonomial>> terms;

    double evaluate(const JointVector& q) const {
        double sum = 0.0;
        for (const auto& [coeff, monomial] : terms) {
            sum += coeff * monomial.evaluate(q);
        }
        if (has_factor) sum *= factor.evaluate(q);
        return scale * sum;
    }
};

inline double evaluate_fixture_expression(const FixtureExpression& expression,
                                          const JointVector& q) {
    return expression.evaluate(q);
}

// One transcribed DH table row; the theta column is the joint variable and
// has no fixture value.
struct DhFixtureRow {
    double a = 0.0;
    double alpha = 0.0;
    double d = 0.0;
};

// Jacobian entry (1-based row/col) asserted equal to a named expression.
struct JacobianEntry {
    std::string robot;  // "wam" or "our"
    int row = 0;
    int col = 0;
    std::string expression;
};

struct FixtureSet {
    std::map<std::string, std::vector<DhFixtureRow>> dh_tables;
    std::vector<std::pair<int, int>> singular_pairs;  // (theta2 deg, theta3 deg)
    std::map<std::string, FixtureExpression> expressions;
    std::vector<JacobianEntry> jacobian_entries;

    const FixtureExpression& expression(const std::string& name) const {
        const auto it = expressions.find(name);
        if (it == expressions.end()) {
            throw std::invalid_argument("unknown fixture expression '" + name +
                                        "'");
        }
        return it->second;
    }
};

namespace detail {

// Monomial text, e.g. "cos(t2)*sin(t2+2*t3)^2". Character-level parse; any
// deviation throws ParseError at the carrying line.
inline TrigMonomial parse_monomial(int line, std::string_view text) {
    TrigMonomial monomial;
    std::size_t pos = 0;
    const auto fail = [&](const std::string& message) -> ParseError {
        return ParseError(line, "bad monomial '" + std::string(text) +
                                    "': " + message);
    };
    while (true) {
        TrigFactor factor;
        if (text.substr(pos, 4) == "sin(") {
            factor.is_sin = true;
        } else if (text.substr(pos, 4) == "cos(") {
            factor.is_sin = false;
        } else {
            throw fail("expected sin( or cos( at offset " + std::to_string(pos));
        }
        pos += 4;
        // Argument: signed terms of the form [m*]t<j>.
        bool first_term = true;
        while (true) {
            int sign = 1;
            if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
                sign = (text[pos] == '-') ? -1 : 1;
                ++pos;
            } else if (!first_term) {
                break;
            }
            int coeff = 1;
            if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                coeff = 0;
                while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                    coeff = coeff * 10 + (text[pos] - '0');
                    ++pos;
                }
                if (pos >= text.size() || text[pos] != '*') {
                    throw fail("expected '*' after integer coefficient");
                }
                ++pos;
            }
            if (pos >= text.size() || text[pos] != 't') {
                throw fail("expected joint variable t<j>");
            }
            ++pos;
            if (pos >= text.size() || text[pos] < '1' || text[pos] > '9') {
                throw fail("expected joint index after 't'");
            }
            int joint = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                joint = joint * 10 + (text[pos] - '0');
                ++pos;
            }
            factor.argument.emplace_back(sign * coeff, joint);
            first_term = false;
        }
        if (pos >= text.size() || text[pos] != ')') {
            throw fail("expected ')'");
        }
        ++pos;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            if (pos >= text.size() || text[pos] < '1' || text[pos] > '9') {
                throw fail("expected positive power after '^'");
            }
            int power = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                power = power * 10 + (text[pos] - '0');
                ++pos;
            }
            factor.power = power;
        }
        monomial.factors.push_back(std::move(factor));
        if (pos >= text.size()) break;
        if (text[pos] != '*') throw fail("expected '*' between factors");
        ++pos;
    }
    return monomial;
}

}  // namespace detail

inline FixtureSet parse_fixtures(std::string_view text) {
    FixtureSet set;
    bool in_expr = false;
    FixtureExpression current;
    int expr_line = 0;
    detail::for_each_line(text, [&](int line, std::string_view content) {
        const auto fields = detail::split_fields(content);
        if (fields.empty()) return;
        const std::string_view directive = fields[0];
        if (in_expr) {
            if (directive == "scale") {
                if (fields.size() != 2) throw ParseError(line, "expected 'scale <value>'");
                current.scale = detail::require_plain_double(line, fields[1], "scale");
                return;
            }
            if (directive == "factor") {
                if (fields.size() != 2) throw ParseError(line, "expected 'factor <monomial>'");
                current.factor = detail::parse_monomial(line, fields[1]);
                current.has_factor = true;
                return;
            }
            if (directive == "term") {
                if (fields.size() != 2 && fields.size() != 3) {
                    throw ParseError(line, "expected 'term <coeff> [<monomial>]'");
                }
                const double coeff =
                    detail::require_plain_double(line, fields[1], "coefficient");
                TrigMonomial monomial;  // empty product = the constant 1
                if (fields.size() == 3) {
                    monomial = detail::parse_monomial(line, fields[2]);
                }
                current.terms.emplace_back(coeff, std::move(monomial));
                return;
            }
            if (directive == "end") {
                if (fields.size() != 1) throw ParseError(line, "expected bare 'end'");
                set.expressions[current.name] = std::move(current);
                current = FixtureExpression{};
                in_expr = false;
                return;
            }
            throw ParseError(line, "unknown directive '" + std::string(directive) +
                                       "' inside expr block");
        }
        if (directive == "dh") {
            if (fields.size() != 5) {
                throw ParseError(line, "expected 'dh <table> <a> <alpha> <d>'");
            }
            DhFixtureRow row;
            row.a = detail::require_plain_double(line, fields[2], "a");
            row.alpha = detail::require_angle(line, fields[3], "alpha");
            row.d = detail::require_plain_double(line, fields[4], "d");
            set.dh_tables[std::string(fields[1])].push_back(row);
            return;
        }
        if (directive == "pair") {
            if (fields.size() != 3) {
                throw ParseError(line, "expected 'pair <theta2_deg> <theta3_deg>'");
            }
            const int theta2 = detail::require_int(line, fields[1], "theta2_deg");
            const int theta3 = detail::require_int(line, fields[2], "theta3_deg");
            set.singular_pairs.emplace_back(theta2, theta3);
            return;
        }
        if (directive == "expr") {
            if (fields.size() != 2) throw ParseError(line, "expected 'expr <name>'");
            if (set.expressions.count(std::string(fields[1])) != 0) {
                throw ParseError(line, "duplicate expression '" +
                                           std::string(fields[1]) + "'");
            }
            current = FixtureExpression{};
            current.name = std::string(fields[1]);
            in_expr = true;
            expr_line = line;
            return;
        }
        if (directive == "entry") {
            if (fields.size() != 5) {
                throw ParseError(line, "expected 'entry <robot> <row> <col> <expr>'");
            }
            JacobianEntry entry;
            entry.robot = std::string(fields[1]);
            if (entry.robot != "wam" && entry.robot != "our") {
                throw ParseError(line, "entry robot must be 'wam' or 'our'");
            }
            entry.row = detail::require_int(line, fields[2], "row");
            entry.col = detail::require_int(line, fields[3], "col");
            if (entry.row < 1 || entry.row > 6 || entry.col < 1 || entry.col > 6) {
                throw ParseError(line, "entry row/col out of range 1..6");
            }
            entry.expression = std::string(fields[4]);
            if (set.expressions.count(entry.expression) == 0) {
                throw ParseError(line, "entry references undefined expression '" +
                                           entry.expression + "'");
            }
            set.jacobian_entries.push_back(std::move(entry));
            return;
        }
        throw ParseError(line,
                         "unknown directive '" + std::string(directive) + "'");
    });
    if (in_expr) {
        throw ParseError(expr_line, "expr block '" + current.name +
                                        "' is missing its 'end'");
    }
    return set;
}

// The embedded fixture set, parsed once.
inline const FixtureSet& builtin_fixtures() {
    static const FixtureSet set = parse_fixtures(detail::fixtures_txt);
    return set;
}

}  // namespace kinsa
