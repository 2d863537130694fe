#pragma once

// Exact sub-Riemannian distance d(C, E) on SO(3).
//
// distance_so3 works directly from the matrix entries: with
// |A| = sqrt((1 + c11) / 2) and q = cos(pi |A|) + (c22 + c33) / (1 + c11),
//
//   Case1_Azero      c11 = -1          t = pi
//   Case2_AbsAone    c11 = 1, C != E   t = 2pi / sqrt(1 + beta^2), pi beta / sqrt(1 + beta^2) = u
//   Case3_Boundary   q = 0             t = pi sqrt((1 - c11) / 2)
//   Case4_Short      q > 0             t = t1(beta), F1(beta) = theta
//   Case5_Long       q < 0             t = t2(beta), F2(beta) = pi - theta (wrapped)
//
// where theta and u are read off the canonical lift. distance_so3_via_lifts is
// the independent route: the lesser SU(2) distance of the two preimages.

#include <array>

#include "subriemann/algebra.hpp"
#include "subriemann/su2_distance.hpp"

namespace subriemann {

DistanceResult distance_so3(const SO3Element& c);

double distance_so3_via_lifts(const SO3Element& c);

/// d(C1, C2) = d(C1^T C2, E).
double distance_so3_pair(const SO3Element& c1, const SO3Element& c2);

/// The two candidate distances compared in cases 2, 4 and 5: the chosen one
/// comes from the canonical lift's system, the rejected one from the system of
/// the negated lift.
struct LiftComparison {
  CaseLabel case_label = CaseLabel::Case2_AbsAone;
  double chosen_beta = 0.0;
  double chosen_t = 0.0;
  double rejected_beta = 0.0;
  double rejected_t = 0.0;
};

/// Only defined for cases 2, 4 and 5; throws std::invalid_argument otherwise.
LiftComparison compare_lift_systems(const SO3Element& c);

// Left minus right sides of the systems, written in the matrix entries.

/// Case 2: cos(pi b / w) = -sqrt(1 + tr C) / 2, sin(pi b / w) = sgn(c32 - c23) sqrt(1 + c11 - c22 - c33) / 2.
std::array<double, 2> case2_residual(double beta, const SO3Element& c);
/// Case 2, negated lift: cos = +sqrt(1 + tr C) / 2, sin with sgn(c23 - c32).
std::array<double, 2> case2_rejected_residual(double beta, const SO3Element& c);
/// Case 4, canonical lift (short branch).
std::array<double, 2> case4_residual(double beta, const SO3Element& c);
/// Case 4, negated lift (long branch).
std::array<double, 2> case4_rejected_residual(double beta, const SO3Element& c);
/// Case 5, canonical lift (long branch).
std::array<double, 2> case5_residual(double beta, const SO3Element& c);
/// Case 5, negated lift (long branch); the same equations as case4_rejected_residual.
std::array<double, 2> case5_rejected_residual(double beta, const SO3Element& c);

}  // namespace subriemann
