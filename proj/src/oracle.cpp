#include "subriemann/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <tuple>

#include "subriemann/geodesics.hpp"
#include "subriemann/so3_distance.hpp"

namespace subriemann {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMinFraction = 1e-12;

// Closed-form endpoint, kept local so the scan can reuse per-row work.
struct RowState {
  double a_re, a_im;
  double radius;  // |B|
  double cos_base, sin_base;  // phase of B before adding phi0
};

RowState evaluate_row(double beta, double t) {
  const double omega = std::sqrt(1.0 + beta * beta);
  const double s = std::sin(0.5 * t * omega);
  const double c = std::cos(0.5 * t * omega);
  const double sv = std::sin(0.5 * beta * t);
  const double cv = std::cos(0.5 * beta * t);
  const double k = beta / omega;
  return {k * s * sv + c * cv, k * s * cv - c * sv, s / omega, cv, sv};
}

struct Su2Matcher {
  static constexpr int kResiduals = 4;
  // Bound on |d(component)/d(parameter)| relative to the SU(2) bound.
  static constexpr double kLipschitzScale = 1.0;

  explicit Su2Matcher(const SU2Element& g) : target(g.components()) {}

  double row_bound(double a_re, double a_im) const {
    return std::max(std::abs(a_re - target[0]), std::abs(a_im - target[1]));
  }

  double deviation(double a_re, double a_im, double b_re, double b_im) const {
    return std::max({std::abs(a_re - target[0]), std::abs(a_im - target[1]), std::abs(b_re - target[2]),
                     std::abs(b_im - target[3])});
  }

  void residual(double a_re, double a_im, double b_re, double b_im, double* out) const {
    out[0] = a_re - target[0];
    out[1] = a_im - target[1];
    out[2] = b_re - target[2];
    out[3] = b_im - target[3];
  }

  std::array<double, 4> target;
};

struct So3Matcher {
  static constexpr int kResiduals = 9;
  static constexpr double kLipschitzScale = 4.0;

  explicit So3Matcher(const SO3Element& c) : target(c.matrix()) {}

  double row_bound(double a_re, double a_im) const {
    // c11 = 2|A|^2 - 1 depends on A alone.
    return std::abs(2.0 * (a_re * a_re + a_im * a_im) - 1.0 - target[0][0]);
  }

  double deviation(double a_re, double a_im, double b_re, double b_im) const {
    double r[9];
    residual(a_re, a_im, b_re, b_im, r);
    double d = 0.0;
    for (double x : r) d = std::max(d, std::abs(x));
    return d;
  }

  void residual(double a1, double a2, double b1, double b2, double* out) const {
    const double m[9] = {a1 * a1 + a2 * a2 - b1 * b1 - b2 * b2,
                         2.0 * (a2 * b1 - b2 * a1),
                         2.0 * (a2 * b2 + b1 * a1),
                         2.0 * (a2 * b1 + b2 * a1),
                         a1 * a1 - a2 * a2 + b1 * b1 - b2 * b2,
                         2.0 * (b1 * b2 - a1 * a2),
                         2.0 * (a2 * b2 - b1 * a1),
                         2.0 * (b2 * b1 + a2 * a1),
                         a1 * a1 - a2 * a2 - b1 * b1 + b2 * b2};
    for (int i = 0; i < 9; ++i) out[i] = m[i] - target[i / 3][i % 3];
  }

  Matrix3 target;
};

struct GridPoint {
  int j, k, i;  // beta, t, phi0 indices
  double deviation;
};

class Grid {
public:
  explicit Grid(const GridSpec& layout) : layout_(layout), cos_phi_(layout.n_phi), sin_phi_(layout.n_phi) {
    for (int i = 0; i < layout.n_phi; ++i) {
      cos_phi_[i] = std::cos(phi(i));
      sin_phi_[i] = std::sin(phi(i));
    }
  }

  double phi(int i) const { return kTwoPi * i / layout_.n_phi; }
  double beta(int j) const { return -layout_.beta_max + 2.0 * layout_.beta_max * j / (layout_.n_beta - 1); }
  double fraction(int k) const { return static_cast<double>(k + 1) / layout_.n_t; }
  const GridSpec& layout() const { return layout_; }
  double cos_phi(int i) const { return cos_phi_[i]; }
  double sin_phi(int i) const { return sin_phi_[i]; }

  /// Half of the worst-case change of an SU(2) component across one cell.
  double half_cell_bound() const {
    const double d_phi = kTwoPi / layout_.n_phi;
    const double d_beta = 2.0 * layout_.beta_max / (layout_.n_beta - 1);
    const double d_fraction = 1.0 / layout_.n_t;
    return 0.5 * (d_phi + kTwoPi * d_beta + kPi * d_fraction);
  }

private:
  GridSpec layout_;
  std::vector<double> cos_phi_, sin_phi_;
};

template <class Matcher>
void fill_slice(const Matcher& matcher, const Grid& grid, int j, double keep, std::vector<double>& slice) {
  const GridSpec& g = grid.layout();
  if (j < 0 || j >= g.n_beta) {
    std::fill(slice.begin(), slice.end(), kInf);
    return;
  }
  const double beta = grid.beta(j);
  const double horizon = cut_time_bound(beta);
  for (int k = 0; k < g.n_t; ++k) {
    double* row = slice.data() + static_cast<std::size_t>(k) * g.n_phi;
    const RowState st = evaluate_row(beta, grid.fraction(k) * horizon);
    if (matcher.row_bound(st.a_re, st.a_im) > keep) {
      std::fill(row, row + g.n_phi, kInf);
      continue;
    }
    for (int i = 0; i < g.n_phi; ++i) {
      const double c = st.cos_base * grid.cos_phi(i) - st.sin_base * grid.sin_phi(i);
      const double s = st.sin_base * grid.cos_phi(i) + st.cos_base * grid.sin_phi(i);
      const double dev = matcher.deviation(st.a_re, st.a_im, st.radius * c, st.radius * s);
      row[i] = dev <= keep ? dev : kInf;
    }
  }
}

/// Local minima of the deviation under the total order (deviation, linear index),
/// for beta indices in [j_begin, j_end).
template <class Matcher>
std::vector<GridPoint> scan_chunk(const Matcher& matcher, const Grid& grid, double keep, int j_begin, int j_end) {
  const GridSpec& g = grid.layout();
  const std::size_t size = static_cast<std::size_t>(g.n_t) * g.n_phi;
  std::vector<double> prev(size), cur(size), next(size);
  fill_slice(matcher, grid, j_begin - 1, keep, prev);
  fill_slice(matcher, grid, j_begin, keep, cur);

  std::vector<GridPoint> found;
  for (int j = j_begin; j < j_end; ++j) {
    fill_slice(matcher, grid, j + 1, keep, next);
    const std::vector<double>* slices[3] = {&prev, &cur, &next};
    for (int k = 0; k < g.n_t; ++k) {
      for (int i = 0; i < g.n_phi; ++i) {
        const double dev = cur[static_cast<std::size_t>(k) * g.n_phi + i];
        if (dev == kInf) continue;
        bool minimum = true;
        for (int dj = -1; dj <= 1 && minimum; ++dj) {
          for (int dk = -1; dk <= 1 && minimum; ++dk) {
            const int kk = k + dk;
            if (kk < 0 || kk >= g.n_t) continue;
            for (int di = -1; di <= 1; ++di) {
              if (dj == 0 && dk == 0 && di == 0) continue;
              const int ii = (i + di + g.n_phi) % g.n_phi;
              const double other = (*slices[dj + 1])[static_cast<std::size_t>(kk) * g.n_phi + ii];
              const bool earlier = std::tie(dj, dk, ii) < std::make_tuple(0, 0, i);
              if (other < dev || (other == dev && earlier)) {
                minimum = false;
                break;
              }
            }
          }
        }
        if (minimum) found.push_back({j, k, i, dev});
      }
    }
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return found;
}

template <class Matcher>
std::vector<GridPoint> scan(const Matcher& matcher, const Grid& grid, double keep) {
  const int n_beta = grid.layout().n_beta;
  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, n_beta);
  std::vector<std::vector<GridPoint>> parts(workers);
  if (workers == 1) {
    parts[0] = scan_chunk(matcher, grid, keep, 0, n_beta);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      const int begin = n_beta * w / workers;
      const int end = n_beta * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] { parts[w] = scan_chunk(matcher, grid, keep, begin, end); });
    }
    for (auto& th : pool) th.join();
  }
  // Chunks are contiguous in beta, so concatenation preserves index order.
  std::vector<GridPoint> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

/// (phi0, beta, fraction of the cut-time bound).
using Params = std::array<double, 3>;

template <class Matcher>
struct Refiner {
  const Matcher& matcher;
  int steps;

  static double time_of(const Params& x) { return x[2] * cut_time_bound(x[1]); }

  static Params clamp(Params x) {
    x[2] = std::clamp(x[2], kMinFraction, 1.0);
    return x;
  }

  void residual(const Params& x, double* out) const {
    const SU2Element g = geodesic_point(GeodesicParams(x[0], x[1]), time_of(x));
    matcher.residual(g.a_re(), g.a_im(), g.b_re(), g.b_im(), out);
  }

  double sum_squares(const Params& x) const {
    double r[Matcher::kResiduals];
    residual(x, r);
    double f = 0.0;
    for (double v : r) f += v * v;
    return f;
  }

  double mismatch(const Params& x) const {
    double r[Matcher::kResiduals];
    residual(x, r);
    double d = 0.0;
    for (double v : r) d = std::max(d, std::abs(v));
    return d;
  }

  /// Levenberg-Marquardt with a finite-difference Jacobian and step halving.
  Params run(Params x) const {
    constexpr int n = Matcher::kResiduals;
    constexpr double h = 1e-7;
    double lambda = 1e-3;
    double r[n];
    for (int iter = 0; iter < steps; ++iter) {
      residual(x, r);
      double f = 0.0;
      for (double v : r) f += v * v;
      if (f < 1e-30) break;

      double jac[n][3];
      for (int p = 0; p < 3; ++p) {
        Params up = x, down = x;
        up[p] += h;
        down[p] -= h;
        up = clamp(up);
        down = clamp(down);
        const double width = up[p] - down[p];
        double ru[n], rd[n];
        residual(up, ru);
        residual(down, rd);
        for (int q = 0; q < n; ++q) jac[q][p] = width > 0.0 ? (ru[q] - rd[q]) / width : 0.0;
      }
      double jtj[3][3] = {};
      double jtr[3] = {};
      for (int q = 0; q < n; ++q)
        for (int a = 0; a < 3; ++a) {
          jtr[a] += jac[q][a] * r[q];
          for (int b = 0; b < 3; ++b) jtj[a][b] += jac[q][a] * jac[q][b];
        }

      bool improved = false;
      for (int attempt = 0; attempt < 8 && !improved; ++attempt) {
        double m[3][4];
        for (int a = 0; a < 3; ++a) {
          for (int b = 0; b < 3; ++b) m[a][b] = jtj[a][b];
          m[a][a] += lambda * jtj[a][a] + 1e-300;
          m[a][3] = -jtr[a];
        }
        Params delta{};
        if (!solve3(m, delta)) {
          lambda *= 10.0;
          continue;
        }
        double step = 1.0;
        for (int halving = 0; halving < 30; ++halving, step *= 0.5) {
          Params trial = clamp({x[0] + step * delta[0], x[1] + step * delta[1], x[2] + step * delta[2]});
          if (sum_squares(trial) < f) {
            x = trial;
            improved = true;
            break;
          }
        }
        lambda = improved ? std::max(lambda * 0.1, 1e-12) : lambda * 10.0;
      }
      if (!improved) break;
    }
    return x;
  }

  static bool solve3(double m[3][4], Params& out) {
    for (int col = 0; col < 3; ++col) {
      int pivot = col;
      for (int row = col + 1; row < 3; ++row)
        if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
      if (!(std::abs(m[pivot][col]) > 0.0)) return false;
      for (int c = 0; c < 4; ++c) std::swap(m[col][c], m[pivot][c]);
      for (int row = 0; row < 3; ++row) {
        if (row == col) continue;
        const double factor = m[row][col] / m[col][col];
        for (int c = col; c < 4; ++c) m[row][c] -= factor * m[col][c];
      }
    }
    for (int a = 0; a < 3; ++a) out[a] = m[a][3] / m[a][a];
    return std::isfinite(out[0]) && std::isfinite(out[1]) && std::isfinite(out[2]);
  }
};

double angular_gap(double a, double b) {
  const double d = std::abs(normalize_angle(a) - normalize_angle(b));
  return std::min(d, kTwoPi - d);
}

template <class Matcher>
ShootResult shoot(const Matcher& matcher, const GridSpec& layout) {
  validate_grid(layout);
  const Grid grid(layout);
  const double keep = kGridMatchTolerance + Matcher::kLipschitzScale * grid.half_cell_bound();
  const std::vector<GridPoint> candidates = scan(matcher, grid, keep);

  ShootResult result;
  result.grid = layout;
  result.grid_candidates = candidates.size();

  const Refiner<Matcher> refiner{matcher, layout.refine_steps};
  std::vector<Minimizer> matches;
  for (const GridPoint& p : candidates) {
    const Params x = refiner.run({grid.phi(p.i), grid.beta(p.j), grid.fraction(p.k)});
    const double mismatch = refiner.mismatch(x);
    if (mismatch <= kRefinedMatchTolerance) {
      matches.push_back({normalize_angle(x[0]), x[1], Refiner<Matcher>::time_of(x), mismatch});
    }
  }
  result.refined_matches = matches.size();
  if (matches.empty()) throw NoMatch("no grid candidate refines onto the target; refine the grid");

  std::sort(matches.begin(), matches.end(), [](const Minimizer& a, const Minimizer& b) {
    return std::tie(a.t, a.phi0, a.beta) < std::tie(b.t, b.phi0, b.beta);
  });
  result.t_min = matches.front().t;
  for (const Minimizer& m : matches) {
    if (m.t > result.t_min + kTimeTolerance) break;
    const bool duplicate = std::any_of(result.minimizers.begin(), result.minimizers.end(), [&](const Minimizer& kept) {
      return std::hypot(angular_gap(kept.phi0, m.phi0), kept.beta - m.beta) <= kDedupRadius;
    });
    if (!duplicate) result.minimizers.push_back(m);
  }
  return result;
}

GridSpec widen(double beta, bool known, GridSpec grid) {
  if (known && std::abs(beta) >= 0.9 * grid.beta_max) grid.beta_max = 1.25 * std::abs(beta);
  return grid;
}

double continued_arctan(double slope, double angle) {
  if (slope == 0.0) return 0.0;
  // arctan(slope tan(angle)) jumps by pi at each pole of tan; undo the jumps.
  return std::atan(slope * std::tan(angle)) + std::round(angle / kPi) * kPi * sgn(slope);
}

}  // namespace

void validate_grid(const GridSpec& grid) {
  if (grid.n_phi < 64 || grid.n_beta < 64 || grid.n_t < 64) {
    throw std::invalid_argument("shooting grid needs at least 64 points per dimension");
  }
  if (!(grid.beta_max >= 8.0)) throw std::invalid_argument("shooting grid needs beta_max >= 8");
  if (grid.refine_steps < 0) throw std::invalid_argument("refine_steps must be non-negative");
}

ShootResult shoot_min_time(const SU2Element& target, const GridSpec& grid) {
  return shoot(Su2Matcher(target), grid);
}

ShootResult shoot_min_time_so3(const SO3Element& target, const GridSpec& grid) {
  return shoot(So3Matcher(target), grid);
}

GridSpec widen_for_target(const SU2Element& target, GridSpec grid) {
  const DistanceResult r = distance_su2(target);
  return widen(r.beta.value, r.t > 0.0, grid);
}

GridSpec widen_for_target(const SO3Element& target, GridSpec grid) {
  const DistanceResult r = distance_so3(target);
  return widen(r.beta.value, r.t > 0.0, grid);
}

std::array<double, 2> br_system_residual(double t, double beta, double abs_a, double arg_a) {
  const double w = std::sqrt(1.0 + beta * beta);
  const double half = 0.5 * t * w;
  const double first = -0.5 * beta * t + continued_arctan(beta / w, half) - arg_a;
  const double second = std::sin(half) / w - std::sqrt(1.0 - abs_a * abs_a);
  return {first, second};
}

BrNonuniquenessReport demonstrate_br_nonuniqueness(double abs_a) {
  if (!(abs_a > 0.0 && abs_a < 1.0)) throw std::invalid_argument("|A| must lie in (0, 1)");
  BrNonuniquenessReport report;
  report.abs_a = abs_a;
  const double b = std::sqrt(1.0 - abs_a * abs_a);
  report.t_short = 2.0 * std::asin(b);
  report.t_long = kTwoPi - report.t_short;
  report.residual_short = br_system_residual(report.t_short, 0.0, abs_a, 0.0);
  report.residual_long = br_system_residual(report.t_long, 0.0, abs_a, 0.0);
  report.exact = distance_su2(SU2Element(Complex{abs_a, 0.0}, Complex{b, 0.0}));
  return report;
}

}  // namespace subriemann
