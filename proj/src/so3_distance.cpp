#include "subriemann/so3_distance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "subriemann/geodesics.hpp"

namespace subriemann {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIdentityTolerance = 1e-12;
constexpr double kC11Threshold = 1e-12;
// Re(A) of the canonical lift at or below this means both lifts are equally far.
constexpr double kTieTolerance = 1e-9;

/// Quantities of the canonical lift. The diagonal expressions
/// 2 Re(A) = sqrt(1 + tr C), 2 Im(A) = sgn(c32 - c23) sqrt(1 + c11 - c22 - c33)
/// cancel badly near E, so A and B are taken from lift_so3 instead.
struct Entries {
  double c11 = 0.0;
  double re2 = 0.0;    // 2 Re(A)
  double im2 = 0.0;    // 2 Im(A)
  double abs_a = 0.0;  // sqrt((1 + c11) / 2)
  double abs_b = 0.0;  // sqrt((1 - c11) / 2)
  double theta = 0.0;  // arg(A)
};

Entries read_entries(const SO3Element& c, const SU2Element& lift) {
  Entries e;
  e.c11 = c(0, 0);
  e.re2 = 2.0 * lift.a_re();
  e.im2 = 2.0 * lift.a_im();
  e.abs_a = std::abs(lift.a());
  e.abs_b = std::abs(lift.b());
  e.theta = std::atan2(e.im2, e.re2);
  return e;
}

CaseLabel classify_so3(const Entries& e) {
  if (e.c11 <= -1.0 + kC11Threshold) return CaseLabel::Case1_Azero;
  if (e.c11 >= 1.0 - kC11Threshold) return CaseLabel::Case2_AbsAone;
  // q = cos(pi |A|) + cos(2 theta), so sgn(q) is the sign of pi (1 - |A|) / 2 - |theta|.
  // q itself vanishes at E and gives no usable scale nearby.
  const double margin = 0.5 * kPi * (1.0 - e.abs_a) - std::abs(e.theta);
  if (margin > kCaseEpsilon) return CaseLabel::Case4_Short;
  if (margin < -kCaseEpsilon) return CaseLabel::Case5_Long;
  return CaseLabel::Case3_Boundary;
}

/// Inverts pi beta / sqrt(1 + beta^2) = u for |u| < pi.
double beta_from_turn(double u) {
  const double r = u / kPi;
  return r / std::sqrt(1.0 - r * r);
}

/// Solution of pi beta / sqrt(1 + beta^2) = u for u = atan2(Im A, -Re A), written
/// in theta = arg(A) so that pi - |u| = |theta| is not recomputed by cancellation.
double case2_beta(double theta) {
  const double v = std::abs(theta) / kPi;
  return sgn(theta) * (1.0 - v) / std::sqrt(v * (2.0 - v));
}

/// 2pi / sqrt(1 + beta^2) for the same beta.
double case2_time(double theta) {
  const double a = std::abs(theta);
  return 2.0 * std::sqrt(a * (2.0 * kPi - a));
}

double sqrt_ratio(double num, double den) { return std::sqrt(std::max(0.0, num) / den); }

/// Right-hand sides shared by the case-4 and case-5 systems of both lifts.
struct LiftSystemRhs {
  double cos_part;  // sqrt((1 + tr C) / (2 (1 + c11)))
  double sin_part;  // sqrt((1 + c11 - c22 - c33) / (2 (1 + c11)))
};

LiftSystemRhs long_rhs(const SO3Element& c) {
  const double den = 2.0 * (1.0 + c(0, 0));
  return {sqrt_ratio(1.0 + c(0, 0) + c(1, 1) + c(2, 2), den), sqrt_ratio(1.0 + c(0, 0) - c(1, 1) - c(2, 2), den)};
}

double entry_swing(double beta, const SO3Element& c) {
  return std::asin(std::min(1.0, std::sqrt(std::max(0.0, 0.5 * (1.0 - c(0, 0)) * (1.0 + beta * beta)))));
}

double entry_horizontal(double beta, const SO3Element& c) {
  return std::asin(std::clamp(beta * std::sqrt((1.0 - c(0, 0)) / (1.0 + c(0, 0))), -1.0, 1.0));
}

double short_argument(double beta, const SO3Element& c) {
  return -beta / std::sqrt(1.0 + beta * beta) * entry_swing(beta, c) + entry_horizontal(beta, c);
}

double long_argument(double beta, const SO3Element& c) {
  return beta / std::sqrt(1.0 + beta * beta) * (kPi - entry_swing(beta, c)) + entry_horizontal(beta, c);
}

}  // namespace

DistanceResult distance_so3(const SO3Element& c) {
  DistanceResult r;
  if (c.deviation_from_identity() < kIdentityTolerance) {
    r.t = 0.0;
    r.case_label = CaseLabel::Case2_AbsAone;
    r.beta = {0.0, false};
    r.phi0 = {0.0, false};
    return r;
  }

  const SU2Element lift = lift_so3(c).first;
  const Entries e = read_entries(c, lift);
  const bool tie = lift.a_re() <= kTieTolerance;
  const bool no_b = std::abs(lift.b()) <= kAbsAThreshold;
  auto phase = [&](double beta, double t) { return normalize_angle(std::arg(lift.b()) - 0.5 * beta * t); };

  r.case_label = classify_so3(e);
  switch (r.case_label) {
    case CaseLabel::Case1_Azero:
      r.t = kPi;
      r.beta = {0.0, true};
      r.phi0 = {phase(0.0, r.t), false};
      return r;

    case CaseLabel::Case2_AbsAone: {
      if (e.theta == 0.0) {
        // Off the identity only by rounding.
        r.t = 0.0;
        r.beta = {0.0, false};
        r.phi0 = {0.0, false};
        return r;
      }
      const double beta = case2_beta(e.theta);
      r.t = case2_time(e.theta);
      r.beta = {beta, !tie};
      r.phi0 = {0.0, false};
      return r;
    }

    case CaseLabel::Case3_Boundary: {
      r.t = kPi * e.abs_b;
      const double beta = sgn(e.theta) * beta_bound(e.abs_a);
      r.beta = {beta, !tie};
      r.phi0 = {phase(beta, r.t), !(tie || no_b)};
      return r;
    }

    case CaseLabel::Case4_Short: {
      const double beta = solve_monotone(MonotoneBranch::F1, e.abs_a, e.theta);
      r.t = t1(beta, e.abs_a);
      r.beta = {beta, !tie};
      r.phi0 = {phase(beta, r.t), !(tie || no_b)};
      return r;
    }

    case CaseLabel::Case5_Long: {
      const double beta = solve_monotone(MonotoneBranch::F2, e.abs_a, std::atan2(e.im2, -e.re2));
      r.t = t2(beta, e.abs_a);
      r.beta = {beta, !tie};
      r.phi0 = {phase(beta, r.t), !(tie || no_b)};
      return r;
    }
  }
  return r;
}

double distance_so3_via_lifts(const SO3Element& c) {
  const auto [lift, negated] = lift_so3(c);
  return std::min(distance_su2(lift).t, distance_su2(negated).t);
}

double distance_so3_pair(const SO3Element& c1, const SO3Element& c2) {
  return distance_so3(so3_mul(c1.transpose(), c2)).t;
}

LiftComparison compare_lift_systems(const SO3Element& c) {
  const Entries e = read_entries(c, lift_so3(c).first);
  LiftComparison out;
  if (c.deviation_from_identity() < kIdentityTolerance) {
    throw std::invalid_argument("lift systems are not compared at the identity");
  }
  out.case_label = classify_so3(e);
  switch (out.case_label) {
    case CaseLabel::Case2_AbsAone:
      out.chosen_beta = case2_beta(e.theta);
      out.rejected_beta = beta_from_turn(std::atan2(-e.im2, e.re2));
      out.chosen_t = case2_time(e.theta);
      out.rejected_t = cut_time_bound(out.rejected_beta);
      return out;
    case CaseLabel::Case4_Short:
      out.chosen_beta = solve_monotone(MonotoneBranch::F1, e.abs_a, e.theta);
      out.chosen_t = t1(out.chosen_beta, e.abs_a);
      break;
    case CaseLabel::Case5_Long:
      out.chosen_beta = solve_monotone(MonotoneBranch::F2, e.abs_a, std::atan2(e.im2, -e.re2));
      out.chosen_t = t2(out.chosen_beta, e.abs_a);
      break;
    default:
      throw std::invalid_argument("lift systems are only compared in cases 2, 4 and 5");
  }
  out.rejected_beta = solve_monotone(MonotoneBranch::F2, e.abs_a, -e.theta);
  out.rejected_t = t2(out.rejected_beta, e.abs_a);
  return out;
}

std::array<double, 2> case2_residual(double beta, const SO3Element& c) {
  const double turn = kPi * beta / std::sqrt(1.0 + beta * beta);
  const double cos_rhs = -0.5 * std::sqrt(std::max(0.0, 1.0 + c(0, 0) + c(1, 1) + c(2, 2)));
  const double sin_rhs = sgn(c(2, 1) - c(1, 2)) * 0.5 * std::sqrt(std::max(0.0, 1.0 + c(0, 0) - c(1, 1) - c(2, 2)));
  return {std::cos(turn) - cos_rhs, std::sin(turn) - sin_rhs};
}

std::array<double, 2> case2_rejected_residual(double beta, const SO3Element& c) {
  const double turn = kPi * beta / std::sqrt(1.0 + beta * beta);
  const double cos_rhs = 0.5 * std::sqrt(std::max(0.0, 1.0 + c(0, 0) + c(1, 1) + c(2, 2)));
  const double sin_rhs = sgn(c(1, 2) - c(2, 1)) * 0.5 * std::sqrt(std::max(0.0, 1.0 + c(0, 0) - c(1, 1) - c(2, 2)));
  return {std::cos(turn) - cos_rhs, std::sin(turn) - sin_rhs};
}

std::array<double, 2> case4_residual(double beta, const SO3Element& c) {
  const LiftSystemRhs rhs = long_rhs(c);
  const double arg = short_argument(beta, c);
  return {std::cos(arg) - rhs.cos_part, std::sin(arg) - sgn(c(2, 1) - c(1, 2)) * rhs.sin_part};
}

std::array<double, 2> case4_rejected_residual(double beta, const SO3Element& c) {
  const LiftSystemRhs rhs = long_rhs(c);
  const double arg = long_argument(beta, c);
  return {std::cos(arg) - rhs.cos_part, std::sin(arg) - sgn(c(1, 2) - c(2, 1)) * rhs.sin_part};
}

std::array<double, 2> case5_residual(double beta, const SO3Element& c) {
  const LiftSystemRhs rhs = long_rhs(c);
  const double arg = long_argument(beta, c);
  return {std::cos(arg) + rhs.cos_part, std::sin(arg) - sgn(c(2, 1) - c(1, 2)) * rhs.sin_part};
}

std::array<double, 2> case5_rejected_residual(double beta, const SO3Element& c) { return case4_rejected_residual(beta, c); }

}  // namespace subriemann
