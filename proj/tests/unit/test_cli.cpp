#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cstates_cli/commands.hpp"
#include "cstates_cli/options.hpp"
#include "cstates_cli/report.hpp"
#include "json.hpp"

using namespace cstates;
using namespace cstates::cli;
using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cstates");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<double>> csv_rows(const std::string& text, std::string* header = nullptr) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

const std::string kCustom = std::string(CSTATES_DATA_DIR) + "/custom_spectrum.txt";

}  // namespace

TEST(Options, ParseModel) {
  EXPECT_TRUE(parse_model("harmonic").is_harmonic());
  EXPECT_EQ(parse_model("pt:3.5,1.2").nu(), std::optional<double>(4.7));
  EXPECT_EQ(parse_model("well").nu(), std::optional<double>(2.0));
  EXPECT_TRUE(parse_model("custom:" + kCustom).is_custom());
  EXPECT_THROW(parse_model("pt:2"), UsageError);
  EXPECT_THROW(parse_model("oscillator"), UsageError);
}

TEST(Options, ParseComplexAndGrid) {
  EXPECT_EQ(parse_complex("1.5,-2"), std::complex<double>(1.5, -2.0));
  EXPECT_EQ(parse_complex("3"), std::complex<double>(3.0, 0.0));
  EXPECT_THROW(parse_complex("1,x"), UsageError);
  const Grid g = parse_grid("lambda-theta:-1.3:1.3:27");
  EXPECT_EQ(g.axis, GridAxis::theta);
  ASSERT_EQ(g.values.size(), 27u);
  EXPECT_DOUBLE_EQ(g.values.front(), -1.3);
  EXPECT_DOUBLE_EQ(g.values.back(), 1.3);
  const Grid l = parse_grid("lambda-mod:0.5,1,2");
  EXPECT_EQ(l.axis, GridAxis::modulus);
  EXPECT_EQ(l.values, (std::vector<double>{0.5, 1.0, 2.0}));
  EXPECT_THROW(parse_grid("lambda-mod:"), UsageError);
  EXPECT_THROW(parse_grid("mu:1:2:3"), UsageError);
}

TEST(Report, JsonShape) {
  VerificationReport r;
  r.suite = "demo";
  r.cases.push_back({"demo", "a", Status::pass, 1e-12, 1e-9, 1, ""});
  r.cases.push_back({"demo", "b", Status::fail, std::nan(""), 1e-9, 0, "boom"});
  r.cases.push_back({"demo", "c", Status::skipped, 0.0, 1e-9, 0, "n/a"});
  const json j = r.to_json();
  EXPECT_EQ(j["schema"], kSchemaVersion);
  EXPECT_TRUE(j["cases"][1]["residual"].is_null());
  EXPECT_EQ(j["cases"][0]["status"], "PASS");
  EXPECT_EQ(j["summary"]["pass"], 1);
  EXPECT_EQ(j["summary"]["fail"], 1);
  EXPECT_EQ(j["summary"]["skipped"], 1);
  EXPECT_EQ(j["summary"]["total"], 3);
  EXPECT_TRUE(r.any_fail());
  EXPECT_EQ(judge(std::nan(""), 1.0), Status::fail);
  EXPECT_EQ(judge(1.0, 1.0), Status::pass);
}

TEST(CliState, HarmonicGk) {
  const CliRun r = invoke({"state", "--model", "harmonic", "--family", "gk", "--z", "1,0", "--nmax", "20"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 21u);
  const double re = j["rows"][0]["re"];
  const double im = j["rows"][0]["im"];
  EXPECT_NEAR(std::hypot(re, im), std::exp(-0.5), 1e-14);
}

TEST(CliState, PoschlTellerGisRows) {
  const CliRun r = invoke({"state", "--model", "pt:2,2", "--family", "gis", "--z", "1,0", "--lambda", "2,0",
                     "--nmax", "30"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["classification"], "squeezed");
  const double d0 = j["rows"][0]["re"];
  const double d2 = j["rows"][2]["re"];
  EXPECT_NEAR(d2 / d0, 19.0 / (9.0 * std::sqrt(60.0)), 1e-13);
}

TEST(CliState, CsvFormat) {
  const CliRun r = invoke({"state", "--family", "perelomov", "--z", "0.5,0.5", "--nmax", "10", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::string header;
  const auto rows = csv_rows(r.out, &header);
  EXPECT_EQ(header, "n,re,im,abs2,cumulative");
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_NEAR(rows.back()[4], 1.0, 1e-6);
}

TEST(CliState, LambdaMinusOneRejected) {
  const CliRun r = invoke({"state", "--family", "gis", "--lambda", "-1,0", "--z", "1,0"});
  EXPECT_EQ(r.code, kExitRejected);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["error"]["reason"], "lambda_minus_one");
}

TEST(CliState, UsageErrors) {
  EXPECT_EQ(invoke({"state", "--family", "gis"}).code, kExitUsage);
  EXPECT_EQ(invoke({"state", "--family", "nope"}).code, kExitUsage);
  EXPECT_EQ(invoke({"state", "--z", "1,i"}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
}

TEST(CliState, TruncationIsNumericalFailure) {
  const CliRun r = invoke({"state", "--model", "harmonic", "--z", "6,0", "--nmax", "10"});
  EXPECT_EQ(r.code, kExitNumerical);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["error"]["kind"], "truncation");
  EXPECT_TRUE(j["error"].contains("suggested_n_max"));
}

TEST(CliVerify, CustomSkipsIdentityResolution) {
  const CliRun r = invoke({"verify", "--suite", "gk", "--model", "custom:" + kCustom});
  ASSERT_EQ(r.code, kExitOk) << r.out;
  const json j = json::parse(r.out);
  bool found = false;
  for (const auto& c : j["cases"]) {
    if (c["status"] == "SKIPPED") {
      EXPECT_EQ(c["reason"], "no closed measure");
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(CliVerify, TinyToleranceReportsFailures) {
  const CliRun r = invoke({"verify", "--suite", "specfun", "--tol", "1e-30"});
  EXPECT_EQ(r.code, kExitNumerical);
  const json j = json::parse(r.out);
  EXPECT_GT(j["summary"]["fail"].get<int>(), 0);
  EXPECT_EQ(j["tolerance_override"], 1e-30);
  for (const auto& c : j["cases"]) {
    if (c["status"] == "FAIL") EXPECT_TRUE(c["residual"].is_number());
  }
}

TEST(CliVerify, Schema) {
  const CliRun r = invoke({"verify", "--suite", "ladder", "--model", "pt:2,2"});
  ASSERT_EQ(r.code, kExitOk) << r.out;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema"], kSchemaVersion);
  EXPECT_EQ(j["suite"], "ladder");
  for (const auto& c : j["cases"]) {
    for (const char* key : {"suite", "name", "status", "residual", "tolerance", "runtime_ms"}) {
      EXPECT_TRUE(c.contains(key)) << key;
    }
    EXPECT_EQ(c["status"], "PASS") << c["name"];
  }
  EXPECT_EQ(invoke({"verify", "--suite", "bogus"}).code, kExitUsage);
}

TEST(CliSweep, ThetaGridMeanF) {
  const CliRun r = invoke({"sweep", "--family", "gis", "--grid", "lambda-theta:-1.3:1.3:27", "--model", "pt:2,2",
                     "--z", "1,0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::string header;
  const auto rows = csv_rows(r.out, &header);
  EXPECT_EQ(header, "theta,var_x,var_p,mean_g,mean_f,equality_gap");
  ASSERT_EQ(rows.size(), 27u);
  for (const auto& row : rows) {
    EXPECT_NEAR(row[4], std::tan(row[0]) * row[3], 1e-8 * std::abs(row[3])) << row[0];
  }
}

TEST(CliSweep, ModulusGridRatioLaw) {
  const CliRun r = invoke({"sweep", "--grid", "lambda-mod:0.5,1,2", "--theta", "0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) EXPECT_NEAR(row[1] / row[2], row[0] * row[0], 1e-8 * row[0] * row[0]);
}

TEST(CliSweep, SinglePointAndEmptyGrid) {
  EXPECT_EQ(csv_rows(invoke({"sweep", "--grid", "lambda-mod:2"}).out).size(), 1u);
  EXPECT_EQ(invoke({"sweep", "--grid", "lambda-mod:"}).code, kExitUsage);
}

TEST(CliWavefunction, Csv) {
  const CliRun r = invoke({"wavefunction", "--model", "pt:2,2", "--n", "2", "--points", "50"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::string header;
  EXPECT_EQ(csv_rows(r.out, &header).size(), 50u);
  EXPECT_EQ(header, "x,value");
  EXPECT_EQ(invoke({"wavefunction", "--model", "harmonic"}).code, kExitUsage);
}
