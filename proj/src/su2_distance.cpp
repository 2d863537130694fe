#include "subriemann/su2_distance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "subriemann/geodesics.hpp"

namespace subriemann {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDomainSlack = 1e-12;
constexpr double kRangeSlack = 1e-10;
constexpr int kMaxBisections = 200;
// asin arguments this close to +-1 are taken as +-1. At beta = +-b* the
// argument is 1 up to rounding of b*, which asin would amplify to ~1e-8.
constexpr double kUnitSnap = 1e-15;

double clamp_unit(double x) {
  if (std::abs(x) >= 1.0 - kUnitSnap) return x > 0.0 ? 1.0 : -1.0;
  return x;
}

void check_abs_a(double abs_a) {
  if (!(abs_a > 0.0 && abs_a < 1.0)) throw DomainViolation("|A| must lie in (0, 1)");
}

/// Clamps beta into [-b*, b*], rejecting anything further out than the slack.
double checked_beta(double beta, double abs_a) {
  check_abs_a(abs_a);
  const double bound = beta_bound(abs_a);
  if (std::abs(beta) > bound + kDomainSlack) {
    std::ostringstream os;
    os << "beta = " << beta << " outside [-" << bound << ", " << bound << "]";
    throw DomainViolation(os.str());
  }
  return std::clamp(beta, -bound, bound);
}

/// arcsin sqrt((1 - |A|^2)(1 + beta^2)), the half-angle of the vertical rotation.
double swing(double beta, double abs_a) {
  return std::asin(clamp_unit(std::sqrt((1.0 - abs_a * abs_a) * (1.0 + beta * beta))));
}

/// arcsin(beta sqrt(1 - |A|^2) / |A|).
double horizontal_angle(double beta, double abs_a) {
  return std::asin(clamp_unit(beta * std::sqrt(1.0 - abs_a * abs_a) / abs_a));
}

double evaluate(MonotoneBranch branch, double beta, double abs_a) {
  return branch == MonotoneBranch::F1 ? F1(beta, abs_a) : F2(beta, abs_a);
}

double phase_for(const SU2Element& g, double beta, double t) {
  return normalize_angle(std::arg(g.b()) - 0.5 * beta * t);
}

}  // namespace

std::string_view to_string(CaseLabel label) noexcept {
  switch (label) {
    case CaseLabel::Case1_Azero: return "Case1";
    case CaseLabel::Case2_AbsAone: return "Case2";
    case CaseLabel::Case3_Boundary: return "Case3";
    case CaseLabel::Case4_Short: return "Case4";
    case CaseLabel::Case5_Long: return "Case5";
  }
  return "unknown";
}

double beta_bound(double abs_a) {
  check_abs_a(abs_a);
  return abs_a / std::sqrt(1.0 - abs_a * abs_a);
}

double t1(double beta, double abs_a) {
  beta = checked_beta(beta, abs_a);
  return 2.0 / std::sqrt(1.0 + beta * beta) * swing(beta, abs_a);
}

double t2(double beta, double abs_a) {
  beta = checked_beta(beta, abs_a);
  return 2.0 / std::sqrt(1.0 + beta * beta) * (kPi - swing(beta, abs_a));
}

double F1(double beta, double abs_a) {
  beta = checked_beta(beta, abs_a);
  return -beta / std::sqrt(1.0 + beta * beta) * swing(beta, abs_a) + horizontal_angle(beta, abs_a);
}

double F2(double beta, double abs_a) {
  beta = checked_beta(beta, abs_a);
  return beta / std::sqrt(1.0 + beta * beta) * (kPi - swing(beta, abs_a)) + horizontal_angle(beta, abs_a);
}

double solve_monotone(MonotoneBranch branch, double abs_a, double target) {
  const double bound = beta_bound(abs_a);
  double lo = -bound;
  double hi = bound;
  const double f_lo = evaluate(branch, lo, abs_a);
  const double f_hi = evaluate(branch, hi, abs_a);
  if (!(target >= f_lo - kRangeSlack && target <= f_hi + kRangeSlack)) {
    std::ostringstream os;
    os.precision(17);
    os << "target " << target << " outside range [" << f_lo << ", " << f_hi << "]";
    throw TargetOutOfRange(os.str());
  }
  if (target <= f_lo) return lo;
  if (target >= f_hi) return hi;

  for (int i = 0; i < kMaxBisections; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (evaluate(branch, mid, abs_a) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double r_lo = std::abs(evaluate(branch, lo, abs_a) - target);
  const double r_hi = std::abs(evaluate(branch, hi, abs_a) - target);
  return r_lo <= r_hi ? lo : hi;
}

CaseLabel classify_su2(const SU2Element& g) {
  const double abs_a = std::abs(g.a());
  if (abs_a <= kAbsAThreshold) return CaseLabel::Case1_Azero;
  if (abs_a >= 1.0 - kAbsAThreshold) return CaseLabel::Case2_AbsAone;
  const double theta = std::abs(std::arg(g.a()));
  const double boundary = 0.5 * kPi * (1.0 - abs_a);
  if (theta < boundary - kCaseEpsilon) return CaseLabel::Case4_Short;
  if (theta > boundary + kCaseEpsilon) return CaseLabel::Case5_Long;
  return CaseLabel::Case3_Boundary;
}

DistanceResult distance_su2(const SU2Element& g) {
  DistanceResult r;
  r.case_label = classify_su2(g);
  const double abs_a = std::abs(g.a());
  const double theta = std::arg(g.a());

  switch (r.case_label) {
    case CaseLabel::Case1_Azero:
      r.t = kPi;
      r.beta = {0.0, true};
      r.phi0 = {phase_for(g, 0.0, r.t), true};
      return r;

    case CaseLabel::Case2_AbsAone: {
      if (theta == 0.0) {
        r.t = 0.0;
        r.beta = {0.0, false};
        r.phi0 = {0.0, false};
        return r;
      }
      const double turn = std::abs(theta);
      r.t = 2.0 * std::sqrt(turn * (2.0 * kPi - turn));
      // Re A = -cos(pi beta / w), Im A = sin(pi beta / w) fixes the sign of beta to that of Im A.
      // With u = |theta| / pi, 1 - (1 - u)^2 = u (2 - u) avoids cancellation as theta -> 0.
      const double u = turn / kPi;
      r.beta = {sgn(theta) * (1.0 - u) / std::sqrt(u * (2.0 - u)), true};
      r.phi0 = {0.0, false};
      return r;
    }

    case CaseLabel::Case3_Boundary: {
      r.t = kPi * std::abs(g.b());
      r.beta = {sgn(theta) * beta_bound(abs_a), true};
      r.phi0 = {phase_for(g, r.beta.value, r.t), true};
      return r;
    }

    case CaseLabel::Case4_Short: {
      const double beta = solve_monotone(MonotoneBranch::F1, abs_a, theta);
      r.t = t1(beta, abs_a);
      r.beta = {beta, true};
      r.phi0 = {phase_for(g, beta, r.t), true};
      return r;
    }

    case CaseLabel::Case5_Long: {
      const double target = theta >= 0.0 ? kPi - theta : -kPi - theta;
      const double beta = solve_monotone(MonotoneBranch::F2, abs_a, target);
      r.t = t2(beta, abs_a);
      r.beta = {beta, true};
      r.phi0 = {phase_for(g, beta, r.t), true};
      return r;
    }
  }
  return r;
}

double distance_su2_pair(const SU2Element& g, const SU2Element& h) {
  return distance_su2(su2_mul(su2_inv(g), h)).t;
}

std::array<double, 2> case4_residual(double beta, const SU2Element& g) {
  const double abs_a = std::abs(g.a());
  const double w = std::sqrt(1.0 + beta * beta);
  const double arg = -beta / w * std::asin(std::min(1.0, std::sqrt((1.0 - abs_a * abs_a) * (1.0 + beta * beta)))) +
                     std::asin(clamp_unit(beta * std::sqrt(1.0 - abs_a * abs_a) / abs_a));
  return {std::cos(arg) - g.a_re() / abs_a, std::sin(arg) - g.a_im() / abs_a};
}

std::array<double, 2> case5_residual(double beta, const SU2Element& g) {
  const double abs_a = std::abs(g.a());
  const double w = std::sqrt(1.0 + beta * beta);
  const double arg =
      beta / w * (kPi - std::asin(std::min(1.0, std::sqrt((1.0 - abs_a * abs_a) * (1.0 + beta * beta))))) +
      std::asin(clamp_unit(beta * std::sqrt(1.0 - abs_a * abs_a) / abs_a));
  return {std::cos(arg) + g.a_re() / abs_a, std::sin(arg) - g.a_im() / abs_a};
}

}  // namespace subriemann
