#include "subriemann/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "subriemann/cutlocus.hpp"
#include "subriemann/geodesics.hpp"
#include "subriemann/oracle.hpp"
#include "subriemann/random.hpp"
#include "subriemann/so3_distance.hpp"
#include "subriemann/su2_distance.hpp"

namespace subriemann {

namespace {

constexpr double kPi = std::numbers::pi;

/// Tracks the worst residual of one check against its tolerance.
class Tally {
public:
  Tally(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {}

  void observe(double residual) {
    ++count_;
    if (!(std::abs(residual) <= tolerance_)) ++failures_;
    if (!(std::abs(residual) <= worst_)) worst_ = std::abs(residual);
  }

  void require(bool ok) {
    ++count_;
    if (!ok) ++failures_;
  }

  CheckResult result(const std::string& extra = {}) const {
    std::ostringstream os;
    os << (count_ - failures_) << "/" << count_ << " within " << tolerance_;
    if (!extra.empty()) os << "; " << extra;
    return {name_, failures_ == 0 && count_ > 0, worst_, os.str()};
  }

private:
  std::string name_;
  double tolerance_;
  std::size_t count_ = 0;
  std::size_t failures_ = 0;
  double worst_ = 0.0;
};

/// Axis-1 rotations, half-turns and case-3 boundary points.
std::vector<SO3Element> special_rotations(Rng& rng) {
  std::vector<SO3Element> out;
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  for (int i = 0; i < 10; ++i) {
    out.push_back(klein_omega(random_su2_diagonal(rng)));
    out.push_back(klein_omega(random_su2_half_turn(rng)));
    const double abs_a = unit(rng);
    const double theta = 0.5 * kPi * (1.0 - abs_a);
    const double phase = 2.0 * kPi * unit(rng);
    const double b = std::sqrt(1.0 - abs_a * abs_a);
    out.push_back(klein_omega(SU2Element(std::polar(abs_a, theta), std::polar(b, phase))));
  }
  return out;
}

SuiteReport submetry_suite(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Tally agreement("lift agreement", 1e-9);
  Tally special("lift agreement on axis-1 rotations, half-turns, boundary", 1e-9);
  Tally selection("lift selection (chosen t < rejected t)", 0.0);
  std::size_t per_case[5] = {};
  auto check = [&](const SO3Element& c, Tally& tally) {
    const DistanceResult direct = distance_so3(c);
    tally.observe(direct.t - distance_so3_via_lifts(c));
    ++per_case[static_cast<int>(direct.case_label)];
    const CaseLabel label = direct.case_label;
    const bool tie = lift_so3(c).first.a_re() <= 1e-9;
    if (direct.t > 0.0 && !tie &&
        (label == CaseLabel::Case2_AbsAone || label == CaseLabel::Case4_Short || label == CaseLabel::Case5_Long)) {
      const LiftComparison cmp = compare_lift_systems(c);
      selection.require(cmp.chosen_t < cmp.rejected_t && std::abs(cmp.chosen_beta) > std::abs(cmp.rejected_beta));
    }
  };
  for (std::size_t i = 0; i < n; ++i) check(random_so3(rng), agreement);
  for (const SO3Element& c : special_rotations(rng)) check(c, special);
  std::ostringstream cases;
  cases << "cases 1-5: " << per_case[0] << "/" << per_case[1] << "/" << per_case[2] << "/" << per_case[3] << "/"
        << per_case[4];
  return {"submetry", {agreement.result(), special.result(cases.str()), selection.result()}};
}

SuiteReport lemma_suite(std::size_t n) {
  const int side = std::max(2, static_cast<int>(std::lround(std::sqrt(static_cast<double>(n)))));
  Tally parity("t1/t2 even, F1/F2 odd", 1e-14);
  Tally monotone("t1, F1, F2 increasing and t2 decreasing on [0, b*]", 0.0);
  Tally endpoints("range endpoints", 1e-9);
  Tally identities("t1 + t2 = 2pi/w and F2 - F1 = pi beta/w", 1e-12);
  for (int ia = 0; ia < side; ++ia) {
    const double a = (ia + 0.5) / side;
    const double bound = beta_bound(a);
    const double b = std::sqrt(1.0 - a * a);
    double prev[4] = {};
    double lo_t1 = 1e300, hi_t1 = -1e300, lo_t2 = 1e300, hi_t2 = -1e300, hi_f1 = -1e300, hi_f2 = -1e300;
    for (int ib = 0; ib < side; ++ib) {
      const double beta = bound * ib / (side - 1);
      const double cur[4] = {t1(beta, a), t2(beta, a), F1(beta, a), F2(beta, a)};
      parity.observe(cur[0] - t1(-beta, a));
      parity.observe(cur[1] - t2(-beta, a));
      parity.observe(cur[2] + F1(-beta, a));
      parity.observe(cur[3] + F2(-beta, a));
      if (ib > 0) {
        monotone.require(cur[0] > prev[0] && cur[1] < prev[1] && cur[2] > prev[2] && cur[3] > prev[3]);
      }
      const double w = std::sqrt(1.0 + beta * beta);
      identities.observe(cur[0] + cur[1] - 2.0 * kPi / w);
      identities.observe(cur[3] - cur[2] - kPi * beta / w);
      lo_t1 = std::min(lo_t1, cur[0]);
      hi_t1 = std::max(hi_t1, cur[0]);
      lo_t2 = std::min(lo_t2, cur[1]);
      hi_t2 = std::max(hi_t2, cur[1]);
      hi_f1 = std::max(hi_f1, cur[2]);
      hi_f2 = std::max(hi_f2, cur[3]);
      std::copy(cur, cur + 4, prev);
    }
    endpoints.observe(lo_t1 - 2.0 * std::asin(b));
    endpoints.observe(hi_t1 - kPi * b);
    endpoints.observe(lo_t2 - kPi * b);
    endpoints.observe(hi_t2 - 2.0 * (kPi - std::asin(b)));
    endpoints.observe(hi_f1 - 0.5 * kPi * (1.0 - a));
    endpoints.observe(hi_f2 - 0.5 * kPi * (1.0 + a));
    endpoints.observe(F1(-bound, a) + 0.5 * kPi * (1.0 - a));
    endpoints.observe(F2(-bound, a) + 0.5 * kPi * (1.0 + a));
  }
  std::ostringstream grid;
  grid << side << "x" << side << " grid";
  return {"lemmas", {parity.result(grid.str()), monotone.result(), endpoints.result(), identities.result()}};
}

SuiteReport oracle_suite(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Tally agreement("shooting t_min vs exact distance", kTimeTolerance);
  Tally hits("refined minimizers reproduce the target", kRefinedMatchTolerance);
  for (std::size_t i = 0; i < n; ++i) {
    const SU2Element target = random_su2(rng);
    const ShootResult shot = shoot_min_time(target, widen_for_target(target, GridSpec{}));
    agreement.observe(shot.t_min - distance_su2(target).t);
    for (const Minimizer& m : shot.minimizers) {
      hits.observe(max_abs_diff(geodesic_point(GeodesicParams(m.phi0, m.beta), m.t), target));
    }
  }
  return {"oracle", {agreement.result(), hits.result()}};
}

SuiteReport br_suite() {
  Tally residuals("two zero-residual solutions at beta = 0", 1e-10);
  Tally unique("exact distance equals the shorter solution", 1e-12);
  std::ostringstream os;
  os.precision(9);
  for (double abs_a : {0.6, 0.3, 0.99}) {
    const BrNonuniquenessReport r = demonstrate_br_nonuniqueness(abs_a);
    for (double v : r.residual_short) residuals.observe(v);
    for (double v : r.residual_long) residuals.observe(v);
    unique.observe(r.exact.t - r.t_short);
    if (abs_a == 0.6) {
      os << "|A|=0.6: t in {" << r.t_short << ", " << r.t_long << "}, exact " << r.exact.t << " ("
         << to_string(r.exact.case_label) << ")";
    }
  }
  return {"br-counterexample", {residuals.result(os.str()), unique.result()}};
}

SuiteReport cutlocus_suite(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Tally agreement("SO(3) and SU(2) cut-locus tags agree", 0.0);
  Tally trace("half-turns have trace -1", 3e-9);
  for (std::size_t i = 0; i < n; ++i) {
    SU2Element g;
    switch (i % 3) {
      case 0: g = random_su2(rng); break;
      case 1: g = random_su2_half_turn(rng); break;
      default: g = random_su2_diagonal(rng); break;
    }
    const SO3Element c = klein_omega(g);
    const CutLocusClass k = classify_cut_locus_so3(c);
    agreement.require(k.tag == in_cut_locus_su2_L2(g));
    if (k.tag == CutLocusTag::Sym) trace.observe(c(0, 0) + c(1, 1) + c(2, 2) + 1.0);
  }
  return {"cutlocus", {agreement.result(), trace.result()}};
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"oracle", "submetry", "lemmas", "br-counterexample", "cutlocus"};
  return names;
}

std::vector<SuiteReport> run_suite(std::string_view suite, std::size_t n, std::uint64_t seed) {
  if (suite == "all") {
    std::vector<SuiteReport> out;
    for (const std::string& name : suite_names()) {
      auto part = run_suite(name, n, seed);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (suite == "oracle") return {oracle_suite(n, seed)};
  if (suite == "submetry") return {submetry_suite(n, seed)};
  if (suite == "lemmas") return {lemma_suite(n)};
  if (suite == "br-counterexample") return {br_suite()};
  if (suite == "cutlocus") return {cutlocus_suite(n, seed)};
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace subriemann
