// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "subriemann/cutlocus.hpp"
#include "subriemann/geodesics.hpp"
#include "subriemann/oracle.hpp"
#include "subriemann/random.hpp"
#include "subriemann/so3_distance.hpp"
#include "subriemann/su2_distance.hpp"
#include "subriemann/verify.hpp"

using namespace subriemann;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed = true;
  std::string detail;
};

/// Running maximum of |residual| with a pass/fail verdict.
struct Worst {
  double tolerance;
  double value = 0.0;
  long failures = 0;
  long count = 0;

  void add(double residual) {
    ++count;
    if (!(std::abs(residual) <= tolerance)) ++failures;
    if (!(std::abs(residual) <= value)) value = std::abs(residual);
  }
  bool ok() const { return failures == 0 && count > 0; }
  std::string str() const {
    std::ostringstream os;
    os.precision(3);
    os << value << " (" << (count - failures) << "/" << count << " <= " << tolerance << ")";
    return os.str();
  }
};

SO3Element diag(double a, double b, double c) { return SO3Element(Matrix3{{{a, 0, 0}, {0, b, 0}, {0, 0, c}}}); }

Outcome golden_values() {
  Worst w{1e-9};
  const double s8 = std::asin(0.8);
  w.add(distance_su2(SU2Element(0.0, std::polar(1.0, 0.7))).t - kPi);
  w.add(distance_su2(SU2Element({0.0, 1.0}, 0.0)).t - kPi * std::sqrt(3.0));
  w.add(distance_su2(SU2Element(-1.0, 0.0)).t - 2 * kPi);
  w.add(distance_su2(SU2Element(0.6, 0.8)).t - 2 * s8);
  w.add(distance_su2(SU2Element(-0.6, 0.8)).t - 2 * (kPi - s8));
  w.add(distance_so3(diag(-1, 1, -1)).t - kPi);
  w.add(distance_so3(diag(1, -1, -1)).t - kPi * std::sqrt(3.0));
  w.add(distance_so3(rotation_axis1(kPi / 2)).t - kPi * std::sqrt(7.0) / 2);
  // The same three rotations through their lifts.
  w.add(distance_so3_via_lifts(diag(-1, 1, -1)) - kPi);
  w.add(distance_so3_via_lifts(diag(1, -1, -1)) - kPi * std::sqrt(3.0));
  w.add(distance_so3_via_lifts(rotation_axis1(kPi / 2)) - kPi * std::sqrt(7.0) / 2);
  return {w.ok(), "max error " + w.str()};
}

Outcome submetry() {
  Rng rng(2024);
  Worst agree{1e-9};
  long compared = 0, violations = 0;
  for (int i = 0; i < 500; ++i) {
    const SO3Element c = random_so3(rng);
    const DistanceResult r = distance_so3(c);
    agree.add(r.t - distance_so3_via_lifts(c));
    const bool solvable = r.case_label == CaseLabel::Case2_AbsAone || r.case_label == CaseLabel::Case4_Short ||
                          r.case_label == CaseLabel::Case5_Long;
    if (solvable && r.t > 0.0 && lift_so3(c).first.a_re() > 1e-9) {
      const LiftComparison cmp = compare_lift_systems(c);
      ++compared;
      if (!(cmp.chosen_t < cmp.rejected_t)) ++violations;
    }
  }
  std::ostringstream os;
  os << "lift agreement " << agree.str() << "; chosen t < rejected t on " << (compared - violations) << "/"
     << compared;
  return {agree.ok() && violations == 0 && compared > 0, os.str()};
}

Outcome oracle_equivalence() {
  Rng rng(3);
  Worst w{kTimeTolerance};
  for (int i = 0; i < 50; ++i) {
    const SU2Element g = random_su2(rng);
    GridSpec grid;  // 256 x 256 x 512
    const ShootResult shot = shoot_min_time(g, widen_for_target(g, grid));
    w.add(shot.t_min - distance_su2(g).t);
  }
  return {w.ok(), "max |t_min - t| " + w.str()};
}

Outcome geodesic_cross_route() {
  Worst routes{1e-10};
  Worst abs_a{1e-12};
  const int n = 50;
  for (int i = 0; i < n; ++i) {
    const double phi0 = 2 * kPi * i / n;
    for (int j = 0; j < n; ++j) {
      const double beta = -10.0 + 20.0 * j / (n - 1);
      const double w = std::sqrt(1 + beta * beta);
      for (int k = 0; k < n; ++k) {
        const double t = 20.0 * k / (n - 1);
        const GeodesicParams p(phi0, beta);
        const SU2Element g = geodesic_point(p, t);
        routes.add(max_abs_diff(g, geodesic_point_exp(p, t)));
        const double sn = std::sin(0.5 * t * w) / w;
        abs_a.add(std::norm(g.a()) - (1 - sn * sn));
      }
    }
  }
  return {routes.ok() && abs_a.ok(), "routes " + routes.str() + "; |A|^2 " + abs_a.str()};
}

Outcome lemma_suite() {
  const auto reports = run_suite("lemmas", 10000, 0);
  std::ostringstream os;
  bool ok = true;
  for (const CheckResult& c : reports.front().checks) {
    ok = ok && c.passed;
    os << (c.passed ? "" : "FAILED ") << c.name << " [" << c.detail << "]; ";
  }
  return {ok, os.str()};
}

Outcome system_residuals() {
  Rng rng(6);
  Worst su2{1e-10}, so3{1e-10};
  int n_su2 = 0, n_so3 = 0;
  while (n_su2 < 200) {
    const SU2Element g = random_su2(rng);
    const DistanceResult r = distance_su2(g);
    if (r.case_label == CaseLabel::Case4_Short) {
      for (double v : case4_residual(r.beta.value, g)) su2.add(v);
    } else if (r.case_label == CaseLabel::Case5_Long) {
      for (double v : case5_residual(r.beta.value, g)) su2.add(v);
    } else {
      continue;
    }
    ++n_su2;
  }
  while (n_so3 < 200) {
    const SO3Element c = random_so3(rng);
    const DistanceResult r = distance_so3(c);
    if (r.case_label == CaseLabel::Case4_Short) {
      for (double v : case4_residual(r.beta.value, c)) so3.add(v);
    } else if (r.case_label == CaseLabel::Case5_Long) {
      for (double v : case5_residual(r.beta.value, c)) so3.add(v);
    } else {
      continue;
    }
    ++n_so3;
  }
  return {su2.ok() && so3.ok(), "SU(2) " + su2.str() + "; SO(3) " + so3.str()};
}

Outcome br_counterexample() {
  const BrNonuniquenessReport r = demonstrate_br_nonuniqueness(0.6);
  Worst res{1e-10};
  for (double v : r.residual_short) res.add(v);
  for (double v : r.residual_long) res.add(v);
  const bool distinct = std::abs(r.t_long - r.t_short) > 1.0;
  const bool exact = std::abs(r.exact.t - 2 * std::asin(0.8)) <= 1e-12;
  std::ostringstream os;
  os.precision(12);
  os << "t = " << r.t_short << " and " << r.t_long << ", residual " << res.str() << "; exact distance " << r.exact.t;
  return {res.ok() && distinct && exact, os.str()};
}

Outcome cut_locus() {
  Rng rng(8);
  int multi = 0;
  std::size_t fewest = 1000;
  Worst t_err{kTimeTolerance};
  for (int i = 0; i < 20; ++i) {
    const SO3Element c = klein_omega(random_su2_half_turn(rng));
    if (classify_cut_locus_so3(c).tag != CutLocusTag::Sym) return {false, "sample is not tagged Sym"};
    const ShootResult shot = shoot_min_time_so3(c, widen_for_target(c, GridSpec{}));
    t_err.add(shot.t_min - distance_so3(c).t);
    if (shot.minimizers.size() >= 2) ++multi;
    fewest = std::min(fewest, shot.minimizers.size());
  }
  int agree = 0;
  for (int i = 0; i < 1000; ++i) {
    SU2Element g;
    switch (i % 3) {
      case 0: g = random_su2(rng); break;
      case 1: g = random_su2_half_turn(rng); break;
      default: g = random_su2_diagonal(rng); break;
    }
    if (classify_cut_locus_so3(klein_omega(g)).tag == in_cut_locus_su2_L2(g)) ++agree;
  }
  std::ostringstream os;
  os << multi << "/20 Sym samples with >= 2 minimizers (fewest " << fewest << "), t_min error " << t_err.str()
     << "; tag agreement " << agree << "/1000";
  return {multi == 20 && agree == 1000 && t_err.ok(), os.str()};
}

Outcome metric_axioms() {
  Rng rng(9);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  Worst tri{1e-9}, sym{1e-10}, conj{1e-9};
  for (int i = 0; i < 200; ++i) {
    const SU2Element a = random_su2(rng), b = random_su2(rng), c = random_su2(rng);
    tri.add(std::max(0.0, distance_su2_pair(a, c) - distance_su2_pair(a, b) - distance_su2_pair(b, c)));
    sym.add(distance_su2(a).t - distance_su2(su2_inv(a)).t);
    const SU2Element r(std::polar(1.0, 0.5 * angle(rng)), 0.0);
    conj.add(distance_su2(su2_mul(su2_mul(r, a), su2_inv(r))).t - distance_su2(a).t);

    const SO3Element x = random_so3(rng), y = random_so3(rng), z = random_so3(rng);
    tri.add(std::max(0.0, distance_so3_pair(x, z) - distance_so3_pair(x, y) - distance_so3_pair(y, z)));
    sym.add(distance_so3(x).t - distance_so3(x.transpose()).t);
    const SO3Element q = rotation_axis1(angle(rng));
    conj.add(distance_so3(so3_mul(so3_mul(q, x), q.transpose())).t - distance_so3(x).t);
  }
  return {tri.ok() && sym.ok() && conj.ok(),
          "triangle excess " + tri.str() + "; inverse " + sym.str() + "; SO(2) conjugation " + conj.str()};
}

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds, 0 = none
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  // An optional argument selects a single criterion.
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  const Criterion criteria[] = {
      {1, "analytic golden values", 1.0, golden_values},
      {2, "submetry agreement", 10.0, submetry},
      {3, "oracle equivalence", 0.0, oracle_equivalence},
      {4, "geodesic cross-route", 30.0, geodesic_cross_route},
      {5, "lemma suite", 10.0, lemma_suite},
      {6, "system residuals", 0.0, system_residuals},
      {7, "br-counterexample", 0.0, br_counterexample},
      {8, "cut locus", 0.0, cut_locus},
      {9, "metric axioms", 0.0, metric_axioms},
  };
  int failed = 0;
  int ran = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0 && seconds > c.time_limit) {
      out.passed = false;
      out.detail += "; over time limit";
    }
    if (!out.passed) ++failed;
    std::printf("criterion %d %s: %s (%.2fs) %s\n", c.id, out.passed ? "PASS" : "FAIL", c.title, seconds,
                out.detail.c_str());
    std::fflush(stdout);
  }
  if (ran == 0) {
    std::printf("no criterion %d\n", only);
    return 2;
  }
  std::printf("%d of %d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
