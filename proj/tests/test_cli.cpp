#include <gtest/gtest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "subriemann/cli.hpp"
#include "subriemann/format.hpp"
#include "subriemann/so3_distance.hpp"
#include "subriemann/su2_distance.hpp"

using namespace subriemann;

namespace {

constexpr double kPi = std::numbers::pi;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "srdist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::vector<double> row_values(const std::string& line) { return parse_number_list(line).value(); }

}  // namespace

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(format_number(kPi), "3.141592653589793");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1e-20), "1e-20");
  for (double x : {kPi, 1.0 / 3.0, 2.5e-300, -7.0, 123456789.125}) {
    EXPECT_EQ(parse_number(format_number(x)).value(), x);
  }
  EXPECT_FALSE(parse_number("1.0x").has_value());
  EXPECT_FALSE(parse_number("").has_value());
  EXPECT_EQ(parse_number(" +2 ").value(), 2.0);
  EXPECT_EQ(parse_number_list("1, 2,3").value(), (std::vector<double>{1, 2, 3}));
  EXPECT_FALSE(parse_number_list("1,,3").has_value());
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(CliDist, SU2Example) {
  const CliRun r = run({"dist", "su2", "--a-re", "0", "--a-im", "0", "--b-re", "1", "--b-im", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("t=3.141592653589793"), std::string::npos);
  EXPECT_NE(r.out.find("case=Case1"), std::string::npos);
}

TEST(CliDist, SO3ExampleAsJson) {
  const CliRun r = run({"dist", "so3", "--matrix", "1,0,0,0,-1,0,0,0,-1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["group"], "so3");
  EXPECT_EQ(doc["command"], "dist");
  EXPECT_NEAR(doc["records"][0]["t"].get<double>(), kPi * std::sqrt(3.0), 1e-12);
  EXPECT_EQ(doc["records"][0]["case"], "Case2");
  EXPECT_EQ(doc["records"][0]["phi0"], "non-unique");
}

TEST(CliDist, InvalidInputs) {
  CliRun r = run({"dist", "su2", "--a-re", "2", "--a-im", "0", "--b-re", "0", "--b-im", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unit-norm violation"), std::string::npos);
  r = run({"dist", "so3", "--matrix", "1,0,0,0,1,0,0,0,-1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("determinant violation"), std::string::npos);
  r = run({"dist", "so3", "--matrix", "2,0,0,0,1,0,0,0,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("orthogonality violation"), std::string::npos);
  EXPECT_EQ(run({"dist", "so3", "--matrix", "1,0,0"}).code, 2);
  EXPECT_EQ(run({"dist", "su2", "--a-re", "nan", "--a-im", "0", "--b-re", "0", "--b-im", "0"}).code, 2);
  EXPECT_EQ(run({"dist"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliGeodesic, SU2Rows) {
  const CliRun r = run({"geodesic", "--group", "su2", "--phi0", "0", "--beta", "0", "--t-max", "3.14159265", "--steps",
                     "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "t,a_re,a_im,b_re,b_im");
  EXPECT_EQ(rows[1], "0,1,0,0,0");
  const auto last = row_values(rows[3]);
  EXPECT_NEAR(last[0], kPi, 1e-8);
  EXPECT_NEAR(last[1], 0.0, 1e-8);
  EXPECT_NEAR(last[3], 1.0, 1e-8);
}

TEST(CliGeodesic, SO3RowsAreRotations) {
  const CliRun r = run({"geodesic", "--group", "so3", "--phi0", "0", "--beta", "1", "--t-max", "1", "--steps", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 102u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto v = row_values(rows[i]);
    ASSERT_EQ(v.size(), 10u);
    Matrix3 m{};
    for (int k = 0; k < 9; ++k) m[k / 3][k % 3] = v[k + 1];
    EXPECT_NO_THROW(SO3Element{m});
  }
}

TEST(CliGeodesic, CsvRoundTripsByteForByte) {
  const CliRun r = run({"geodesic", "--group", "su2", "--phi0", "0.3", "--beta", "-1.7", "--t-max", "5", "--steps", "50"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  std::vector<std::vector<double>> parsed;
  for (std::size_t i = 1; i < rows.size(); ++i) parsed.push_back(row_values(rows[i]));
  std::ostringstream again;
  write_csv(again, {"t", "a_re", "a_im", "b_re", "b_im"}, parsed);
  EXPECT_EQ(again.str(), r.out);
}

TEST(CliGeodesic, JsonAndFileOutput) {
  const std::string path = ::testing::TempDir() + "geodesic_out.json";
  const CliRun r = run({"geodesic", "--group", "su2", "--phi0", "1", "--beta", "2", "--t-max", "1", "--steps", "4",
                     "--format", "json", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["command"], "geodesic");
  EXPECT_EQ(doc["params"]["steps"], 4);
  ASSERT_EQ(doc["records"].size(), 5u);
  EXPECT_EQ(doc["records"][4]["t"], 1.0);
  std::remove(path.c_str());
}

TEST(CliGeodesic, InvalidInputs) {
  EXPECT_EQ(run({"geodesic", "--phi0", "0", "--beta", "0", "--t-max", "1", "--steps", "0"}).code, 2);
  EXPECT_EQ(run({"geodesic", "--phi0", "0", "--beta", "0", "--t-max", "0", "--steps", "3"}).code, 2);
  EXPECT_EQ(run({"geodesic", "--group", "so4", "--phi0", "0", "--beta", "0", "--t-max", "1", "--steps", "3"}).code, 2);
  EXPECT_EQ(run({"geodesic", "--phi0", "0", "--beta", "0", "--t-max", "1", "--steps", "3", "--out",
                 "/nonexistent-dir/x.csv"})
                .code,
            2);
}

TEST(CliSphere, SmallRadiusKeepsEverything) {
  const CliRun r = run({"sphere", "--group", "su2", "--radius", "0.1", "--samples", "100", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  EXPECT_EQ(rows[0], "a_re,a_im,b_re,b_im,r,phi0,beta");
  EXPECT_EQ(rows.size(), 101u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto v = row_values(rows[i]);
    EXPECT_NEAR(distance_su2(SU2Element::from_components(v[0], v[1], v[2], v[3])).t, 0.1, 1e-6);
  }
  EXPECT_NE(r.err.find("kept 100"), std::string::npos);
}

TEST(CliSphere, NearDiameterPointsSitAtMinusOne) {
  const CliRun r = run({"sphere", "--group", "su2", "--radius", "6.28318", "--samples", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_GT(rows.size(), 1u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_NEAR(row_values(rows[i])[0], -1.0, 1e-4);
}

TEST(CliSphere, SO3RecordsSitOnTheSphere) {
  const CliRun r = run({"sphere", "--group", "so3", "--radius", "1.5", "--samples", "200", "--seed", "9", "--format",
                     "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["group"], "so3");
  EXPECT_EQ(doc["summary"]["kept"].get<int>() + doc["summary"]["discarded"].get<int>(), 200);
  ASSERT_GT(doc["records"].size(), 0u);
  for (const auto& rec : doc["records"]) {
    Matrix3 m{};
    const char* names[] = {"m11", "m12", "m13", "m21", "m22", "m23", "m31", "m32", "m33"};
    for (int k = 0; k < 9; ++k) m[k / 3][k % 3] = rec[names[k]].get<double>();
    EXPECT_NEAR(distance_so3(SO3Element(m)).t, 1.5, 1e-6);
  }
}

TEST(CliSphere, DeterministicForFixedSeed) {
  const std::vector<std::string> args = {"sphere", "--group", "su2", "--radius", "3", "--samples", "50", "--seed", "17"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliSphere, InvalidRadius) {
  EXPECT_EQ(run({"sphere", "--radius", "-1", "--samples", "10"}).code, 2);
  EXPECT_EQ(run({"sphere", "--radius", "0", "--samples", "10"}).code, 2);
  EXPECT_EQ(run({"sphere", "--group", "su2", "--radius", "6.3", "--samples", "10"}).code, 2);
  EXPECT_EQ(run({"sphere", "--group", "so3", "--radius", "5.5", "--samples", "10"}).code, 2);
}

TEST(CliCutLocus, Examples) {
  EXPECT_EQ(lines(run({"cutlocus", "--matrix", "1,0,0,0,1,0,0,0,1"}).out)[0], "NotCut");
  EXPECT_EQ(lines(run({"cutlocus", "--matrix", "-1,0,0,0,1,0,0,0,-1"}).out)[0], "Sym");
  const CliRun loc = run({"cutlocus", "--matrix", "1,0,0,0,0,-1,0,1,0"});
  EXPECT_EQ(lines(loc.out)[0], "Loc");
  EXPECT_NE(loc.out.find("block_residual=0"), std::string::npos);
  EXPECT_EQ(lines(run({"cutlocus", "--su2", "0.6,0.8,0,0"}).out)[0], "Loc");
  EXPECT_EQ(run({"cutlocus"}).code, 2);
  EXPECT_EQ(run({"cutlocus", "--su2", "1,1,0,0"}).code, 2);
}

TEST(CliVerify, Suites) {
  const CliRun sub = run({"verify", "--suite", "submetry", "--n", "200", "--seed", "7"});
  EXPECT_EQ(sub.code, 0) << sub.out;
  EXPECT_NE(sub.out.find("200/200 within 1e-09"), std::string::npos);
  EXPECT_EQ(sub.out, run({"verify", "--suite", "submetry", "--n", "200", "--seed", "7"}).out);

  const CliRun br = run({"verify", "--suite", "br-counterexample"});
  EXPECT_EQ(br.code, 0);
  EXPECT_NE(br.out.find("1.85459044"), std::string::npos);

  EXPECT_EQ(run({"verify", "--suite", "lemmas", "--n", "10000"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "cutlocus", "--n", "300"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--n", "0"}).code, 2);
}
