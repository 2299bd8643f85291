#pragma once

// Umbrella header for the kinsa library: DH robot models, forward
// kinematics, geometric Jacobians, and kinematic singularity analysis.

#include "kinsa/model.hpp"
#include "kinsa/text.hpp"
#include "kinsa/robot_text.hpp"
#include "kinsa/kinematics.hpp"
#include "kinsa/jacobian.hpp"
#include "kinsa/fixtures.hpp"
#include "kinsa/singularity.hpp"
#include "kinsa/report.hpp"
