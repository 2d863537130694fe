#pragma once

// Exact sub-Riemannian distance rho(g, e) on SU(2).
//
// With theta = arg(A) in (-pi, pi], the distance falls into one of five cases:
//
//   Case1_Azero      A = 0                                   t = pi
//   Case2_AbsAone    |A| = 1                                 t = 2 sqrt(|theta| (2pi - |theta|))
//   Case3_Boundary   |theta| = pi (1 - |A|) / 2              t = pi sqrt(1 - |A|^2)
//   Case4_Short      |theta| < pi (1 - |A|) / 2              t = t1(beta), F1(beta) = theta
//   Case5_Long       |theta| > pi (1 - |A|) / 2              t = t2(beta), F2(beta) = pi - theta (wrapped)
//
// t1, t2, F1, F2 are defined on [-b*, b*] with b* = |A| / sqrt(1 - |A|^2).

#include <array>
#include <stdexcept>
#include <string_view>

#include "subriemann/algebra.hpp"

namespace subriemann {

enum class CaseLabel { Case1_Azero, Case2_AbsAone, Case3_Boundary, Case4_Short, Case5_Long };

std::string_view to_string(CaseLabel label) noexcept;

/// A reported geodesic parameter. `unique` is false when other minimizing
/// geodesics reach the same point with a different value.
struct ReportedParam {
  double value = 0.0;
  bool unique = true;
};

struct DistanceResult {
  double t = 0.0;
  CaseLabel case_label = CaseLabel::Case2_AbsAone;
  ReportedParam beta;
  ReportedParam phi0;
};

/// Thrown when a monotone function is evaluated outside [-b*, b*].
class DomainViolation : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Thrown when a bisection target lies outside the range of the function.
class TargetOutOfRange : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Width of the band around the case-3 boundary, in radians of arg(A).
inline constexpr double kCaseEpsilon = 1e-9;
/// |A| at or below this is case 1; at or above 1 - this is case 2.
inline constexpr double kAbsAThreshold = 1e-12;

/// b* = absA / sqrt(1 - absA^2).
double beta_bound(double abs_a);

double t1(double beta, double abs_a);
double t2(double beta, double abs_a);
double F1(double beta, double abs_a);
double F2(double beta, double abs_a);

enum class MonotoneBranch { F1, F2 };

/// Solves F(beta) = target on [-b*, b*] by bisection (at most 200 halvings).
double solve_monotone(MonotoneBranch branch, double abs_a, double target);

/// Case predicate applied to A alone.
CaseLabel classify_su2(const SU2Element& g);

DistanceResult distance_su2(const SU2Element& g);

/// rho(g, h) = rho(g^-1 h, e).
double distance_su2_pair(const SU2Element& g, const SU2Element& h);

/// Left minus right sides of the two case-4 equations: cos F1 = Re A/|A|, sin F1 = Im A/|A|.
std::array<double, 2> case4_residual(double beta, const SU2Element& g);

/// Left minus right sides of the case-5 equations: cos F2 = -Re A/|A|, sin F2 = Im A/|A|.
std::array<double, 2> case5_residual(double beta, const SU2Element& g);

}  // namespace subriemann
