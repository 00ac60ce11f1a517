// Copyright 2026 The mzq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mzq/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = mzq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Value column of a "name,value" row.
std::string row_value(const std::string& csv, const std::string& name) {
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(name + ",", 0) == 0) return line.substr(name.size() + 1);
  }
  return {};
}

std::string comment_value(const std::string& csv, const std::string& key) {
  std::istringstream in(csv);
  const std::string prefix = "# " + key + ": ";
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  }
  return {};
}

constexpr const char* kUnbiased = "0.70710678118654757,0,0.70710678118654757";

}  // namespace

TEST(CliState, UnbiasedPureState) {
  const auto r = run({"state", "--bloch", kUnbiased});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(row_value(r.out, "P")), 0.70710678118654757, 1e-15);
  EXPECT_NEAR(std::stod(row_value(r.out, "V")), 0.70710678118654757, 1e-15);
  EXPECT_EQ(row_value(r.out, "pure"), "true");
  EXPECT_EQ(row_value(r.out, "duality.saturated"), "true");
  EXPECT_EQ(row_value(r.out, "schrodinger_robertson.saturated"), "true");
  EXPECT_EQ(row_value(r.out, "landau_pollak.saturated"), "true");
  EXPECT_EQ(row_value(r.out, "heisenberg_robertson.holds"), "true");
  EXPECT_TRUE(contains(r.out, "# seed: 0"));
  EXPECT_TRUE(contains(r.out, "# tolerances: eps_gap=1.0000000000000001e-09 eps_pos="));
}

TEST(CliState, FourDigitInputNeedsLooserGap) {
  // sqrt(0.7071^2 * 2) misses 1 by about 2e-5.
  const auto strict = run({"state", "--bloch", "0.7071,0,0.7071"});
  ASSERT_EQ(strict.code, 0) << strict.err;
  EXPECT_EQ(row_value(strict.out, "duality.saturated"), "false");
  const auto loose = run({"--tolerance", "eps_gap=1e-4", "state", "--bloch", "0.7071,0,0.7071"});
  ASSERT_EQ(loose.code, 0) << loose.err;
  EXPECT_EQ(row_value(loose.out, "duality.saturated"), "true");
}

TEST(CliState, MixedStateIsNotSaturated) {
  const auto r = run({"state", "--bloch", "0.3,0,0.4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(row_value(r.out, "pure"), "false");
  EXPECT_EQ(row_value(r.out, "duality.holds"), "true");
  EXPECT_EQ(row_value(r.out, "duality.saturated"), "false");
  EXPECT_EQ(row_value(r.out, "schrodinger_robertson.saturated"), "false");
  EXPECT_EQ(row_value(r.out, "landau_pollak.saturated"), "false");
}

TEST(CliState, MatrixVariables) {
  // w+ = 1, r = 0: the |D1> eigenstate.
  const auto r = run({"state", "--matrix", "1,0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(row_value(r.out, "sz"), "1");
  EXPECT_EQ(row_value(r.out, "P"), "1");
}

TEST(CliState, RejectsUnphysicalState) {
  const auto r = run({"state", "--bloch", "1,1,0"});
  EXPECT_EQ(r.code, mzq::cli::kExitValidation);
  EXPECT_TRUE(contains(r.err, "Bloch norm exceeds 1"));
  EXPECT_TRUE(r.out.empty());
}

TEST(CliState, RejectsDegrees) {
  const auto r = run({"state", "--matrix", "0.5,0.5,90deg"});
  EXPECT_EQ(r.code, mzq::cli::kExitValidation);
  EXPECT_TRUE(contains(r.err, "radians"));
}

TEST(CliState, RequiresExactlyOneStateSource) {
  EXPECT_EQ(run({"state"}).code, mzq::cli::kExitValidation);
  EXPECT_EQ(run({"state", "--bloch", "0,0,1", "--matrix", "1,0,0"}).code, mzq::cli::kExitValidation);
  EXPECT_EQ(run({"state", "--bloch", "0,0"}).code, mzq::cli::kExitValidation);
}

TEST(CliState, JsonOutput) {
  const auto r = run({"--format", "json", "state", "--bloch", "0,0,-1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["P"].get<double>(), 1.0);
  EXPECT_EQ(j["V"].get<double>(), 0.0);
  EXPECT_TRUE(j["duality"]["saturated"].get<bool>());
  EXPECT_EQ(j["meta"]["seed"], "0");
  EXPECT_EQ(j["state"]["s"].size(), 3u);
}

TEST(CliMz, FooterReportsBothVisibilities) {
  const auto r = run({"mz", "--bloch", "0,0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "phi,p_D1,p_D2\n"));
  // BS1 takes |D1> to full visibility.
  EXPECT_NEAR(std::stod(comment_value(r.out, "V_operational")), 1.0, 2e-4);
  EXPECT_EQ(std::stod(comment_value(r.out, "V_analytic (2r)")), 1.0);
  std::size_t rows = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) rows += !line.empty() && line[0] != '#';
  EXPECT_EQ(rows, 361u);
}

TEST(CliMz, RejectsTooFewPhases) {
  EXPECT_EQ(run({"mz", "--bloch", "0,0,1", "--phases", "4"}).code, mzq::cli::kExitValidation);
}

TEST(CliVerify, SeededRunAgrees) {
  const auto r = run({"--seed", "42", "verify", "--n", "1000"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "# result: 1000/1000 agree"));
  EXPECT_TRUE(contains(r.out, "# states: 1000 (500 pure, 500 mixed)"));
  EXPECT_TRUE(contains(r.out, "duality,1000,500\n"));
  EXPECT_TRUE(contains(r.out, "schrodinger_robertson,1000,500\n"));
  EXPECT_TRUE(contains(r.out, "landau_pollak,1000,500\n"));
}

TEST(CliVerify, ByteIdenticalForFixedSeed) {
  const auto a = run({"--seed", "7", "verify", "--n", "200"});
  const auto b = run({"--seed", "7", "verify", "--n", "200"});
  EXPECT_EQ(a.out, b.out);
  const auto c = run({"--seed", "8", "verify", "--n", "200"});
  EXPECT_EQ(c.code, 0);
}

TEST(CliVerify, ZeroStatesIsUsageError) {
  const auto r = run({"verify", "--n", "0"});
  EXPECT_EQ(r.code, mzq::cli::kExitValidation);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliVerify, PinnedState) {
  const auto r = run({"verify", "--n", "1", "--bloch", kUnbiased});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "# result: 1/1 agree"));
  EXPECT_TRUE(contains(r.out, "duality,1,1\n"));
  EXPECT_EQ(run({"verify", "--bloch", kUnbiased}).code, mzq::cli::kExitValidation);
}

TEST(CliQscan, RegimeFlipsAcrossCriticalIndex) {
  const auto r = run({"qscan", "--q-min", "1.2", "--q-max", "1.6", "--steps", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "q,min_value,regime,n_minimizers,minimizers_V:P\n"));
  EXPECT_TRUE(contains(r.out, "\n1.2,0.69314718055994"));
  EXPECT_TRUE(contains(r.out, ",I,2,"));
  EXPECT_TRUE(contains(r.out, ",III,1,"));
}

TEST(CliQscan, RejectsIndicesAboveTwo) {
  const auto r = run({"qscan", "--q-min", "1", "--q-max", "2.5"});
  EXPECT_EQ(r.code, mzq::cli::kExitValidation);
  EXPECT_TRUE(contains(r.err, "concavity"));
}

TEST(CliQstar, ReportsRoot) {
  const auto r = run({"--format", "json", "qstar", "--tol", "1e-12"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["q_star"].get<double>(), 1.4313558811842463, 1e-11);
  EXPECT_EQ(run({"qstar", "--tol", "0.1"}).code, mzq::cli::kExitValidation);
}

TEST(CliContour, CollisionGrid) {
  const auto r = run({"contour", "--q", "2", "--n", "32"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "V,P,H_sum\n0,0,1.3862943611198906\n"));
  EXPECT_TRUE(contains(r.out, "\n1,1,0\n"));
  EXPECT_EQ(run({"contour", "--q", "2", "--n", "8"}).code, mzq::cli::kExitValidation);
  EXPECT_EQ(run({"contour", "--n", "64"}).code, mzq::cli::kExitValidation);
}

TEST(CliContour, JsonGrid) {
  const auto r = run({"--format", "json", "contour", "--q", "1", "--n", "32"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["coords"].size(), 32u);
  EXPECT_EQ(j["values"].size(), 32u);
}

TEST(CliGlobal, UnknownToleranceRejected) {
  const auto r = run({"--tolerance", "eps_magic=1", "state", "--bloch", "0,0,1"});
  EXPECT_EQ(r.code, mzq::cli::kExitValidation);
  EXPECT_TRUE(contains(r.err, "eps_magic"));
}

TEST(CliGlobal, ToleranceOverrideIsEchoed) {
  const auto r = run({"--tolerance", "eps_gap=1e-6", "state", "--bloch", "0,0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "eps_gap=9.9999999999999995e-07"));
}

TEST(CliGlobal, SubcommandRequired) {
  EXPECT_EQ(run({}).code, mzq::cli::kExitValidation);
  EXPECT_EQ(run({"bogus"}).code, mzq::cli::kExitValidation);
}

TEST(CliGlobal, OutFileReceivesResults) {
  const auto path = std::filesystem::temp_directory_path() / "mzq_cli_test_out.csv";
  std::filesystem::remove(path);
  const auto r = run({"--out", path.string(), "state", "--bloch", "0,0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_TRUE(contains(text, "quantity,value\n"));
  std::filesystem::remove(path);
}
