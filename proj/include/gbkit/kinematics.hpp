#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gbkit/ring.hpp"

namespace gbkit::kinematics {

/// Link lengths of a planar two-link arm, in meters. Both must be positive.
struct ArmSpec {
  double l1 = 1.0;
  double l2 = 1.0;
};

/// End-effector position in meters.
struct Target {
  double x = 0.0;
  double y = 0.0;
};

/// Joint angles in (-pi, pi]; `residual` is the Euclidean forward-kinematics
/// error against the requested target.
struct JointSolution {
  double theta1;
  double theta2;
  double residual;
};

struct IkResult {
  /// Sorted by theta1.
  std::vector<JointSolution> solutions;
  bool unreachable = false;
  /// Empty on a plain success; otherwise says why there is nothing to show.
  std::string diagnostic;
};

/// Real inputs are snapped to fractions with denominators up to this bound
/// before the exact computation.
inline constexpr long kSnapDenominator = 1000000;

/// (c1, s1, c2, s2): cosines and sines of the joint angles, in lex order.
VariableContext joint_context();

/// Forward kinematics in cosine/sine variables plus the two unit-circle
/// constraints:
///   l1*c1 + l2*(c1*c2 - s1*s2) - x
///   l1*s1 + l2*(s1*c2 + c1*s2) - y
///   c1^2 + s1^2 - 1
///   c2^2 + s2^2 - 1
std::vector<Polynomial> ik_system(const Rational& l1, const Rational& l2, const Rational& x,
                                  const Rational& y);
/// Same, after snapping the real inputs to rationals.
std::vector<Polynomial> ik_system(const ArmSpec& arm, const Target& target);

std::pair<double, double> forward_kinematics(const ArmSpec& arm, double theta1, double theta2);

/// All real joint solutions reaching `target`.
///
/// Runs a lex Groebner basis of `ik_system`, finds the real roots of the
/// eliminant in the last variable, back-substitutes through the triangular
/// basis, converts (c_i, s_i) pairs to angles and keeps candidates whose
/// forward-kinematics residual is below `tol`.
///
/// Targets outside the reachable annulus give an empty result flagged
/// unreachable. Throws std::domain_error("solution set not finite") when the
/// solution set is a continuum (folded arm of equal links at the origin),
/// and std::invalid_argument for a bad arm or tol <= 0.
IkResult ik_solve(const ArmSpec& arm, const Target& target, double tol);

/// ik_solve per waypoint, results in input order. A continuum at a waypoint
/// is recorded in that waypoint's diagnostic instead of aborting.
std::vector<IkResult> ik_solve_trajectory(const ArmSpec& arm, std::span<const Target> targets,
                                          double tol);

}  // namespace gbkit::kinematics
