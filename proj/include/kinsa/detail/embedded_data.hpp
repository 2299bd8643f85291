// Generated by scripts/embed_data.py from the files under data/.
// Do not edit by hand; edit the data files and regenerate.
#pragma once

namespace kinsa::detail {

// data/fixtures.txt
inline constexpr char fixtures_txt[] = R"kinsa(# Regression fixtures: DH tables, singular grid pairs, closed-form determinant
# coefficients, and per-entry Jacobian expressions for the WAM and OUR arms.
#
# Line forms:
#   dh <table> <a> <alpha> <d>        appends one row to a DH table fixture
#   pair <theta2_deg> <theta3_deg>    one WAM arm-singularity grid pair
#   expr <name> ... end               trig-polynomial expression definition
#   entry <robot> <row> <col> <expr>  Jacobian entry (1-based row/col)
#
# Inside expr blocks:
#   scale <v>        constant multiplier applied to the whole sum (default 1)
#   factor <mono>    trig monomial multiplied into the whole sum (default 1)
#   term <c> [mono]  adds c * monomial (monomial omitted means the constant c)
# A monomial is sin(...) / cos(...) factors joined by '*', each with an
# optional integer power '^k'; arguments are signed sums of [m*]t<j> terms.

# ---------------------------------------------------------------- DH tables
dh our6 0      pi/2   0
dh our6 0.43   0      0.145
dh our6 0.336  0     -0.145
dh our6 0     -pi/2   0.115
dh our6 0      pi/2   0.115
dh our6 0      0      0.115

dh wam6 0                 -pi/2   0
dh wam6 0.551837838499681  0      0
dh wam6 -0.045             pi/2   0
dh wam6 0                 -pi/2   0.3
dh wam6 0                  pi/2   0
dh wam6 0                  0      0.06

dh wam6-wrist 0                 -pi/2   0
dh wam6-wrist 0.551837838499681  0      0
dh wam6-wrist -0.045             pi/2   0
dh wam6-wrist 0                 -pi/2   0.3
dh wam6-wrist 0                  pi/2   0
dh wam6-wrist 0                  0      0

# ------------------------------------------- WAM arm singular pairs (degrees)
pair 42 325
pair 222 325
pair 72 326
pair 73 326
pair 74 326
pair 75 326
pair 76 326
pair 77 326
pair 78 326
pair 252 326
pair 253 326
pair 254 326
pair 255 326
pair 256 326
pair 257 326
pair 258 326
pair 120 327
pair 121 327
pair 300 327
pair 301 327
pair 145 328
pair 325 328

# --------------------------------------------- closed-form determinant terms
expr wam-det11
term 0.1490    cos(t2)*cos(t3)^2
term -0.1117   sin(t2)
term -0.0913   cos(t2)*cos(t3)
term -0.1370   cos(t2)*sin(t3)
term -0.074493 cos(t2)
term 0.0621    cos(t3)^2*sin(t2)
term -0.1490   cos(t3)*sin(t2)*sin(t3)
term 0.0621    cos(t2)*cos(t3)*sin(t3)
end

expr our-det
scale 0.00014448
factor sin(t5)
term 168.0  sin(t2+2*t3)
term -57.5  cos(t2+t4)
term 215.0  sin(t2+t3)
term 57.5   cos(t2+2*t3+t4)
term -215.0 sin(t2-t3)
term -168.0 sin(t2)
end

# ------------------------------------------------------- shared entry bodies
expr zero
term 0.0
end

expr one
term 1.0
end

# ----------------------------------------------- WAM Jacobian entries (code
# parameters 0.5518 / -0.45 / 0.3; the wam6-code catalog model matches these)
expr wam-a11
term -0.3    sin(t1)*sin(t2+t3)
term 0.45    sin(t1)*cos(t2+t3)
term -0.5518 sin(t1)*cos(t2)
end

expr wam-a21
term 0.3     cos(t1)*sin(t2+t3)
term -0.45   cos(t1)*cos(t2+t3)
term 0.5518  cos(t1)*cos(t2)
end

expr wam-a12
factor cos(t1)
term 0.3     cos(t2+t3)
term 0.45    sin(t2+t3)
term -0.5518 sin(t2)
end

expr wam-a22
factor sin(t1)
term 0.3     cos(t2+t3)
term 0.45    sin(t2+t3)
term -0.5518 sin(t2)
end

expr wam-a32
term 0.45    cos(t2+t3)
term -0.3    sin(t2+t3)
term -0.5518 cos(t2)
end

expr wam-a13
factor cos(t1)
term 0.3  cos(t2+t3)
term 0.45 sin(t2+t3)
end

expr wam-a23
factor sin(t1)
term 0.3  cos(t2+t3)
term 0.45 sin(t2+t3)
end

expr wam-a33
term 0.45 cos(t2+t3)
term -0.3 sin(t2+t3)
end

expr neg-sin-t1
term -1.0 sin(t1)
end

expr cos-t1
term 1.0 cos(t1)
end

expr wam-a44
term 1.0 sin(t2+t3)*cos(t1)
end

expr wam-a54
term 1.0 sin(t2+t3)*sin(t1)
end

expr wam-a64
term 1.0 cos(t2+t3)
end

expr wam-a65
term 1.0 sin(t2+t3)*sin(t4)
end

expr wam-a66
term 1.0  cos(t2+t3)*cos(t5)
term -1.0 sin(t2+t3)*cos(t4)*sin(t5)
end

expr wam-a45
term 1.0  sin(t4)*cos(t1)*sin(t2)*sin(t3)
term -1.0 sin(t4)*cos(t1)*cos(t2)*cos(t3)
term -1.0 cos(t4)*sin(t1)
end

expr wam-a55
term 1.0  cos(t1)*cos(t4)
term 1.0  sin(t4)*sin(t1)*sin(t2)*sin(t3)
term -1.0 sin(t4)*cos(t2)*cos(t3)*sin(t1)
end

expr wam-a46
term 1.0  cos(t5)*cos(t1)*cos(t2)*sin(t3)
term 1.0  cos(t5)*cos(t1)*cos(t3)*sin(t2)
term -1.0 sin(t5)*sin(t1)*sin(t4)
term -1.0 sin(t5)*cos(t4)*cos(t1)*sin(t2)*sin(t3)
term 1.0  sin(t5)*cos(t4)*cos(t1)*cos(t2)*cos(t3)
end

expr wam-a56
term 1.0  sin(t5)*cos(t1)*sin(t4)
term -1.0 sin(t5)*cos(t4)*sin(t1)*sin(t2)*sin(t3)
term 1.0  sin(t5)*cos(t4)*cos(t2)*cos(t3)*sin(t1)
term 1.0  cos(t5)*cos(t2)*sin(t1)*sin(t3)
term 1.0  cos(t5)*cos(t3)*sin(t1)*sin(t2)
end

entry wam 1 1 wam-a11
entry wam 2 1 wam-a21
entry wam 3 1 zero
entry wam 1 2 wam-a12
entry wam 2 2 wam-a22
entry wam 3 2 wam-a32
entry wam 1 3 wam-a13
entry wam 2 3 wam-a23
entry wam 3 3 wam-a33
entry wam 1 4 zero
entry wam 1 5 zero
entry wam 1 6 zero
entry wam 4 2 neg-sin-t1
entry wam 5 2 cos-t1
entry wam 4 3 neg-sin-t1
entry wam 5 3 cos-t1
entry wam 4 4 wam-a44
entry wam 5 4 wam-a54
entry wam 4 5 wam-a45
entry wam 5 5 wam-a55
entry wam 4 6 wam-a46
entry wam 5 6 wam-a56
entry wam 6 1 one
entry wam 6 2 zero
entry wam 6 3 zero
entry wam 6 4 wam-a64
entry wam 6 5 wam-a65
entry wam 6 6 wam-a66

# ---------------------------------------------------- OUR Jacobian entries
expr sin-t1
term 1.0 sin(t1)
end

expr neg-cos-t1
term -1.0 cos(t1)
end

expr our-a45
term -1.0 sin(t2+t3+t4)*cos(t1)
end

expr our-a55
term -1.0 sin(t2+t3+t4)*sin(t1)
end

expr our-a65
term 1.0 cos(t2+t3+t4)
end

expr our-a46
term 1.0 cos(t5)*sin(t1)
term 1.0 cos(t2+t3+t4)*cos(t1)*sin(t5)
end

expr our-a56
term 1.0  cos(t2+t3+t4)*sin(t1)*sin(t5)
term -1.0 cos(t1)*cos(t5)
end

expr our-a66
term 1.0 sin(t2+t3+t4)*sin(t5)
end

expr our-a34
term 0.0575  sin(t2+t3+t4+t5)
term -0.115  sin(t2+t3+t4)
term -0.0575 sin(t2+t3+t4-t5)
end

expr our-a35
term 0.0575 sin(t2+t3+t4-t5)
term 0.0575 sin(t2+t3+t4+t5)
end

expr our-a33
term 0.0575  sin(t2+t3+t4+t5)
term -0.115  sin(t2+t3+t4)
term -0.0575 sin(t2+t3+t4-t5)
term 0.336   cos(t2+t3)
end

expr our-a32
term 0.0575  sin(t2+t3+t4+t5)
term -0.115  sin(t2+t3+t4)
term -0.0575 sin(t2+t3+t4-t5)
term 0.336   cos(t2+t3)
term 0.43    cos(t2)
end

expr our-a11
term 0.115  cos(t1)
term 0.115  cos(t1)*cos(t5)
term -0.43  cos(t2)*sin(t1)
term 0.336  sin(t1)*sin(t2)*sin(t3)
term -0.115 cos(t2+t3+t4)*sin(t1)*sin(t5)
term 0.115  cos(t2+t3)*sin(t1)*sin(t4)
term 0.115  sin(t2+t3)*cos(t4)*sin(t1)
term -0.336 cos(t2)*cos(t3)*sin(t1)
end

expr our-a21
term 0.115  sin(t1)
term 0.43   cos(t1)*cos(t2)
term 0.115  cos(t5)*sin(t1)
term -0.336 cos(t1)*sin(t2)*sin(t3)
term 0.115  cos(t2+t3+t4)*cos(t1)*sin(t5)
term -0.115 cos(t2+t3)*cos(t1)*sin(t4)
term -0.115 sin(t2+t3)*cos(t1)*cos(t4)
term 0.336  cos(t1)*cos(t2)*cos(t3)
end

entry our 1 1 our-a11
entry our 2 1 our-a21
entry our 4 1 zero
entry our 6 1 one
entry our 3 2 our-a32
entry our 4 2 sin-t1
entry our 5 2 neg-cos-t1
entry our 6 2 zero
entry our 3 3 our-a33
entry our 4 3 sin-t1
entry our 5 3 neg-cos-t1
entry our 6 3 zero
entry our 3 4 our-a34
entry our 4 4 sin-t1
entry our 5 4 neg-cos-t1
entry our 6 4 zero
entry our 3 5 our-a35
entry our 4 5 our-a45
entry our 5 5 our-a55
entry our 6 5 our-a65
entry our 1 6 zero
entry our 2 6 zero
entry our 3 6 zero
entry our 4 6 our-a46
entry our 5 6 our-a56
entry our 6 6 our-a66
)kinsa";

// data/robots/our6.robot
inline constexpr char our6_robot[] = R"kinsa(# Smokie OUR 6-DOF arm, standard (distal) DH parameters.
# Columns: a (m), alpha (rad), d (m), theta_offset (rad), [min max] (rad).
robot our6
joint 0      pi/2   0       0
joint 0.43   0      0.145   0
joint 0.336  0     -0.145   0
joint 0     -pi/2   0.115   0
joint 0      pi/2   0.115   0
joint 0      0      0.115   0
)kinsa";

// data/robots/wam6.robot
inline constexpr char wam6_robot[] = R"kinsa(# Barrett WAM 6-DOF arm, standard (distal) DH parameters.
# a2 is the shortest decimal that round-trips to sqrt(0.55^2 + 0.045^2).
# Columns: a (m), alpha (rad), d (m), theta_offset (rad), [min max] (rad).
robot wam6
joint 0                 -pi/2   0      0
joint 0.551837838499681  0      0      0
joint -0.045             pi/2   0      0
joint 0                 -pi/2   0.3    0
joint 0                  pi/2   0      0
joint 0                  0      0.06   0
)kinsa";

// data/robots/wam6-wrist.robot
inline constexpr char wam6_wrist_robot[] = R"kinsa(# Barrett WAM 6-DOF arm with the tool frame moved to the wrist center (d6 = 0).
# a2 is the shortest decimal that round-trips to sqrt(0.55^2 + 0.045^2).
# Columns: a (m), alpha (rad), d (m), theta_offset (rad), [min max] (rad).
robot wam6-wrist wrist-centered
joint 0                 -pi/2   0      0
joint 0.551837838499681  0      0      0
joint -0.045             pi/2   0      0
joint 0                 -pi/2   0.3    0
joint 0                  pi/2   0      0
joint 0                  0      0      0
)kinsa";

// data/robots/wam6-code.robot
inline constexpr char wam6_code_robot[] = R"kinsa(# Barrett WAM variant with rounded a2 and ten-times a3 (0.5518 / -0.45), d6 = 0.
# Kept separately from wam6-wrist; the two differ in a2 and a3 only.
# Columns: a (m), alpha (rad), d (m), theta_offset (rad), [min max] (rad).
robot wam6-code wrist-centered
joint 0      -pi/2   0      0
joint 0.5518  0      0      0
joint -0.45   pi/2   0      0
joint 0      -pi/2   0.3    0
joint 0       pi/2   0      0
joint 0       0      0      0
)kinsa";

} // namespace kinsa::detail
