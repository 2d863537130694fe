#include "subriemann/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "subriemann/cutlocus.hpp"
#include "subriemann/format.hpp"
#include "subriemann/geodesics.hpp"
#include "subriemann/random.hpp"
#include "subriemann/so3_distance.hpp"
#include "subriemann/su2_distance.hpp"
#include "subriemann/verify.hpp"

namespace subriemann {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;
constexpr double kSphereTolerance = 1e-6;

/// Largest distance from the identity in each group.
const double kSu2Diameter = 2.0 * kPi;
const double kSo3Diameter = kPi * std::sqrt(3.0);

/// Input or usage problem; reported on stderr with exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kSu2Columns = {"a_re", "a_im", "b_re", "b_im"};
const std::vector<std::string> kSo3Columns = {"m11", "m12", "m13", "m21", "m22", "m23", "m31", "m32", "m33"};

std::vector<double> components(const SU2Element& g) {
  const auto c = g.components();
  return {c.begin(), c.end()};
}

std::vector<double> components(const SO3Element& c) {
  std::vector<double> out;
  for (const auto& row : c.matrix()) out.insert(out.end(), row.begin(), row.end());
  return out;
}

SO3Element parse_matrix(const std::string& text) {
  const auto values = parse_number_list(text);
  if (!values || values->size() != 9) throw UsageError("--matrix expects 9 comma-separated numbers, row-major");
  Matrix3 m{};
  for (int i = 0; i < 9; ++i) m[i / 3][i % 3] = (*values)[i];
  return SO3Element(m);
}

SU2Element parse_su2(const std::string& text) {
  const auto values = parse_number_list(text);
  if (!values || values->size() != 4) throw UsageError("--su2 expects a_re,a_im,b_re,b_im");
  for (double v : *values) {
    if (!std::isfinite(v)) throw InvariantViolation("non-finite component", v);
  }
  return SU2Element::from_components((*values)[0], (*values)[1], (*values)[2], (*values)[3]);
}

void require_finite(const std::vector<double>& values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw InvariantViolation("non-finite output value", v);
  }
}

json number_or_tag(const ReportedParam& p) {
  return p.unique ? json(p.value) : json("non-unique");
}

std::string text_or_tag(const ReportedParam& p) { return p.unique ? format_number(p.value) : "non-unique"; }

/// Writes to --out when given, otherwise to the command's stdout.
class Sink {
public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open '" + path + "' for writing");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

private:
  std::ofstream file_;
  std::ostream* os_;
};

void write_records(std::ostream& os, const std::string& format, const std::string& group, const std::string& command,
                   const json& params, const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows, const json& summary = nullptr) {
  for (const auto& row : rows) require_finite(row);
  if (format == "csv") {
    write_csv(os, header, rows);
    return;
  }
  json records = json::array();
  for (const auto& row : rows) {
    json rec = json::object();
    for (std::size_t i = 0; i < header.size(); ++i) rec[header[i]] = row[i];
    records.push_back(std::move(rec));
  }
  json doc = {{"group", group}, {"command", command}, {"params", params}, {"records", std::move(records)}};
  if (!summary.is_null()) doc["summary"] = summary;
  os << doc.dump(2) << '\n';
}

// dist ----------------------------------------------------------------------

struct DistOptions {
  double a_re = 0.0, a_im = 0.0, b_re = 0.0, b_im = 0.0;
  std::string matrix;
  bool json_out = false;
};

void print_distance(std::ostream& out, bool as_json, const std::string& group, const json& params,
                    const DistanceResult& r) {
  require_finite({r.t, r.beta.value, r.phi0.value});
  if (as_json) {
    json rec = {{"t", r.t},
                {"case", std::string(to_string(r.case_label))},
                {"beta", number_or_tag(r.beta)},
                {"phi0", number_or_tag(r.phi0)}};
    json doc = {{"group", group}, {"command", "dist"}, {"params", params}, {"records", json::array({rec})}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "t=" << format_number(r.t) << '\n'
      << "case=" << to_string(r.case_label) << '\n'
      << "beta=" << text_or_tag(r.beta) << '\n'
      << "phi0=" << text_or_tag(r.phi0) << '\n';
}

// geodesic ------------------------------------------------------------------

struct GeodesicOptions {
  std::string group = "su2";
  double phi0 = 0.0;
  double beta = 0.0;
  double t_max = 0.0;
  long long steps = 0;
  std::string format = "csv";
  std::string out_path;
};

void run_geodesic(const GeodesicOptions& o, std::ostream& out) {
  if (!(o.t_max > 0.0) || !std::isfinite(o.t_max)) throw UsageError("--t-max must be positive");
  if (o.steps <= 0) throw UsageError("--steps must be positive");
  const GeodesicParams p(o.phi0, o.beta);
  const bool su2 = o.group == "su2";
  std::vector<std::string> header = {"t"};
  const auto& cols = su2 ? kSu2Columns : kSo3Columns;
  header.insert(header.end(), cols.begin(), cols.end());

  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(o.steps) + 1);
  for (long long k = 0; k <= o.steps; ++k) {
    const double t = o.t_max * static_cast<double>(k) / static_cast<double>(o.steps);
    std::vector<double> row = {t};
    const auto point = su2 ? components(geodesic_point(p, t)) : components(geodesic_point_so3(p, t));
    row.insert(row.end(), point.begin(), point.end());
    rows.push_back(std::move(row));
  }
  const json params = {{"phi0", o.phi0}, {"beta", o.beta}, {"t_max", o.t_max}, {"steps", o.steps}};
  Sink sink(o.out_path, out);
  write_records(sink.stream(), o.format, o.group, "geodesic", params, header, rows);
}

// sphere --------------------------------------------------------------------

struct SphereOptions {
  std::string group = "su2";
  double radius = 0.0;
  long long samples = 0;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out_path;
};

void run_sphere(const SphereOptions& o, std::ostream& out, std::ostream& err) {
  const bool su2 = o.group == "su2";
  const double diameter = su2 ? kSu2Diameter : kSo3Diameter;
  if (!(o.radius > 0.0)) throw UsageError("--radius must be positive");
  if (o.radius > diameter) {
    throw UsageError("--radius exceeds the diameter " + format_number(diameter) + " of " + o.group);
  }
  if (o.samples <= 0) throw UsageError("--samples must be positive");

  // Geodesics with |beta| above this bound have passed their cut time at t = R.
  const double ratio = 2.0 * kPi / o.radius;
  const double window = std::sqrt(std::max(0.0, ratio * ratio - 1.0));
  Rng rng(o.seed);
  std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> beta_dist(-window, window);

  std::vector<std::string> header = su2 ? kSu2Columns : kSo3Columns;
  header.insert(header.end(), {"r", "phi0", "beta"});
  std::vector<std::vector<double>> rows;
  long long discarded = 0;
  for (long long i = 0; i < o.samples; ++i) {
    const double phi0 = phi_dist(rng);
    const double beta = window > 0.0 ? beta_dist(rng) : 0.0;
    const GeodesicParams p(phi0, beta);
    std::vector<double> row;
    double r = 0.0;
    if (su2) {
      const SU2Element g = geodesic_point(p, o.radius);
      r = distance_su2(g).t;
      row = components(g);
    } else {
      const SO3Element c = geodesic_point_so3(p, o.radius);
      r = distance_so3(c).t;
      row = components(c);
    }
    if (std::abs(r - o.radius) > kSphereTolerance) {
      ++discarded;
      continue;
    }
    row.insert(row.end(), {r, p.phi0(), beta});
    rows.push_back(std::move(row));
  }
  const long long kept = static_cast<long long>(rows.size());
  err << "kept " << kept << ", discarded " << discarded << '\n';
  const json params = {{"radius", o.radius}, {"samples", o.samples}, {"seed", o.seed}};
  const json summary = {{"kept", kept}, {"discarded", discarded}};
  Sink sink(o.out_path, out);
  write_records(sink.stream(), o.format, o.group, "sphere", params, header, rows, summary);
}

// cutlocus ------------------------------------------------------------------

void run_cutlocus(const std::string& matrix, const std::string& su2, std::ostream& out) {
  if (matrix.empty() == su2.empty()) throw UsageError("give exactly one of --matrix or --su2");
  CutLocusClass k;
  if (!matrix.empty()) {
    k = classify_cut_locus_so3(parse_matrix(matrix));
  } else {
    const SU2Element g = parse_su2(su2);
    k = classify_cut_locus_so3(klein_omega(g));
    k.tag = in_cut_locus_su2_L2(g);
  }
  out << to_string(k.tag) << '\n'
      << "identity_residual=" << format_number(k.identity_residual) << '\n'
      << "involution_residual=" << format_number(k.involution_residual) << '\n'
      << "block_residual=" << format_number(k.block_residual) << '\n';
}

// verify --------------------------------------------------------------------

int run_verify(const std::string& suite, long long n, std::uint64_t seed, std::ostream& out) {
  if (n <= 0) throw UsageError("--n must be positive");
  std::vector<SuiteReport> reports;
  try {
    reports = run_suite(suite, static_cast<std::size_t>(n), seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  for (const SuiteReport& report : reports) {
    for (const CheckResult& c : report.checks) {
      std::ostringstream residual;
      residual.precision(3);
      residual << c.max_residual;
      out << (c.passed ? "PASS " : "FAIL ") << report.suite << ": " << c.name << "  max_residual=" << residual.str()
          << "  " << c.detail << '\n';
    }
    ok = ok && report.passed();
  }
  out << (ok ? "all checks passed" : "some checks failed") << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sub-Riemannian distances, geodesics and cut loci on SU(2) and SO(3)", "srdist"};
  app.require_subcommand(1);

  DistOptions dist;
  auto* dist_cmd = app.add_subcommand("dist", "distance from the identity");
  dist_cmd->require_subcommand(1);
  auto* dist_su2 = dist_cmd->add_subcommand("su2", "element (A, B) of SU(2)");
  dist_su2->add_option("--a-re", dist.a_re)->required();
  dist_su2->add_option("--a-im", dist.a_im)->required();
  dist_su2->add_option("--b-re", dist.b_re)->required();
  dist_su2->add_option("--b-im", dist.b_im)->required();
  dist_su2->add_flag("--json", dist.json_out, "JSON output");
  auto* dist_so3 = dist_cmd->add_subcommand("so3", "rotation matrix");
  dist_so3->add_option("--matrix", dist.matrix, "m11,...,m33 row-major")->required();
  dist_so3->add_flag("--json", dist.json_out, "JSON output");

  GeodesicOptions geo;
  auto* geo_cmd = app.add_subcommand("geodesic", "sample a geodesic from the identity");
  geo_cmd->add_option("--group", geo.group)->check(CLI::IsMember({"su2", "so3"}));
  geo_cmd->add_option("--phi0", geo.phi0)->required();
  geo_cmd->add_option("--beta", geo.beta)->required();
  geo_cmd->add_option("--t-max", geo.t_max)->required();
  geo_cmd->add_option("--steps", geo.steps)->required();
  geo_cmd->add_option("--format", geo.format)->check(CLI::IsMember({"csv", "json"}));
  geo_cmd->add_option("--out", geo.out_path);

  SphereOptions sphere;
  auto* sphere_cmd = app.add_subcommand("sphere", "sample the metric sphere of radius R");
  sphere_cmd->add_option("--group", sphere.group)->check(CLI::IsMember({"su2", "so3"}));
  sphere_cmd->add_option("--radius", sphere.radius)->required();
  sphere_cmd->add_option("--samples", sphere.samples)->required();
  sphere_cmd->add_option("--seed", sphere.seed);
  sphere_cmd->add_option("--format", sphere.format)->check(CLI::IsMember({"csv", "json"}));
  sphere_cmd->add_option("--out", sphere.out_path);

  std::string cut_matrix, cut_su2;
  auto* cut_cmd = app.add_subcommand("cutlocus", "cut-locus membership of a rotation or SU(2) element");
  cut_cmd->add_option("--matrix", cut_matrix, "m11,...,m33 row-major");
  cut_cmd->add_option("--su2", cut_su2, "a_re,a_im,b_re,b_im");

  std::string suite = "all";
  long long n = 100;
  std::uint64_t seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite);
  verify_cmd->add_option("--n", n);
  verify_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*dist_su2) {
      const json params = {{"a_re", dist.a_re}, {"a_im", dist.a_im}, {"b_re", dist.b_re}, {"b_im", dist.b_im}};
      if (!std::isfinite(dist.a_re) || !std::isfinite(dist.a_im) || !std::isfinite(dist.b_re) ||
          !std::isfinite(dist.b_im)) {
        throw InvariantViolation("non-finite component", std::nan(""));
      }
      const SU2Element g = SU2Element::from_components(dist.a_re, dist.a_im, dist.b_re, dist.b_im);
      print_distance(out, dist.json_out, "su2", params, distance_su2(g));
    } else if (*dist_so3) {
      const SO3Element c = parse_matrix(dist.matrix);
      print_distance(out, dist.json_out, "so3", {{"matrix", components(c)}}, distance_so3(c));
    } else if (*geo_cmd) {
      run_geodesic(geo, out);
    } else if (*sphere_cmd) {
      run_sphere(sphere, out, err);
    } else if (*cut_cmd) {
      run_cutlocus(cut_matrix, cut_su2, out);
    } else if (*verify_cmd) {
      return run_verify(suite, n, seed, out);
    }
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace subriemann
