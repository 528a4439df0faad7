// Copyright 2026 The antimagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "antimagic/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "antimagic/errors.h"

namespace antimagic::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("antimagic_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, ConstructLabelVerifyRoundTrip) {
  const std::string graph = Path("g.txt"), labeled = Path("l.txt");
  ASSERT_EQ(Call({"construct", "--family", "wheel", "--m", "3", "--n", "1",
                  "--out", graph}).code, kOk);
  ASSERT_EQ(Call({"label", "--family", "wheel", "--m", "3", "--n", "1",
                  "--variant", "errata", "--graph", graph, "--out", labeled}).code,
            kOk);
  std::istringstream lines(Slurp(labeled));
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "8 12");
  std::vector<int> seen(13, 0);
  int count = 0;
  for (std::string a, b; lines >> a >> b;) {
    int label = 0;
    lines >> label;
    ASSERT_GE(label, 1);
    ASSERT_LE(label, 12);
    ++seen[label];
    ++count;
  }
  EXPECT_EQ(count, 12);
  for (int l = 1; l <= 12; ++l) EXPECT_EQ(seen[l], 1) << l;

  const Result v = Call({"verify", "--input", labeled, "--graph", graph});
  EXPECT_EQ(v.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(v.out)["antimagic"], true);
}

TEST_F(CliTest, PrintedWheelFailsVerification) {
  const std::string labeled = Path("l.txt");
  ASSERT_EQ(Call({"label", "--family", "wheel", "--m", "3", "--n", "1",
                  "--variant", "as-printed", "--out", labeled}).code,
            kOk);
  const Result v = Call({"verify", "--input", labeled});
  EXPECT_EQ(v.code, kVerificationFailed);
  const auto j = nlohmann::json::parse(v.out);
  EXPECT_EQ(j["duplicate_labels"][1]["label"], 5);
  EXPECT_EQ(j["missing_labels"], nlohmann::json::array({2, 6}));
}

TEST_F(CliTest, UncoveredSchemeExitsWithCoverageCode) {
  const Result r = Call({"label", "--family", "flower", "--m", "3", "--n", "1",
                         "--variant", "as-printed"});
  EXPECT_EQ(r.code, kCoverageOrCapacity);
  EXPECT_NE(r.err.find("undefined-reference"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Call({}).code, kUsage);
  EXPECT_EQ(Call({"bogus"}).code, kUsage);
  EXPECT_EQ(Call({"label", "--family", "tree", "--m", "3", "--n", "1"}).code, kUsage);
  EXPECT_EQ(Call({"label", "--family", "wheel", "--m", "2", "--n", "1"}).code, kUsage);
  EXPECT_EQ(Call({"verify"}).code, kUsage);
  EXPECT_EQ(Call({"verify", "--input", Path("missing.txt")}).code, kUsage);
  EXPECT_EQ(Call({"grid-report", "--family", "wheel", "--m", "3..x", "--n", "1"}).code,
            kUsage);
  EXPECT_EQ(Call({"--help"}).code, kOk);
}

TEST_F(CliTest, SearchVerdicts) {
  const std::string p2 = Path("p2.txt"), c4 = Path("c4.txt"), k4 = Path("k4.txt");
  { std::ofstream(p2) << "2 1\nu1 u2\n"; }
  { std::ofstream(c4) << "4 4\nu1 u2\nu2 u3\nu3 u4\nu1 u4\n"; }
  ASSERT_EQ(Call({"construct", "--base", "--family", "complete", "--m", "4",
                  "--out", k4}).code, kOk);
  const Result none = Call({"search", "--input", p2});
  EXPECT_EQ(none.code, kVerificationFailed);
  EXPECT_EQ(nlohmann::json::parse(none.out)["verdict"], "none-exists");
  const Result found = Call({"search", "--input", c4});
  EXPECT_EQ(found.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(found.out)["verdict"], "found");
  EXPECT_EQ(Call({"search", "--input", k4, "--max-edges", "5"}).code,
            kCoverageOrCapacity);
  EXPECT_EQ(Call({"search", "--input", k4, "--strategy", "local", "--seed", "9"}).code,
            kOk);
  const Result cross = Call({"search", "--family", "helm", "--m", "3", "--n", "1"});
  EXPECT_EQ(cross.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(cross.out)["function"], "f1");
}

TEST_F(CliTest, SearchOutputIsReproducible) {
  const std::vector<std::string> args = {"search", "--family", "wheel", "--m", "4",
                                         "--n", "2", "--strategy", "local"};
  EXPECT_EQ(Call(args).out, Call(args).out);
  const auto timed = nlohmann::json::parse(Call({"search", "--family", "wheel", "--m",
                                                 "3", "--n", "1", "--timing"}).out);
  EXPECT_TRUE(timed["search_stats"].contains("wall_time_ms"));
}

TEST_F(CliTest, SumsObservedAndExpected) {
  const Result expected = Call({"sums", "--family", "wheel", "--m", "4", "--n", "2",
                                "--expected"});
  EXPECT_EQ(expected.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(expected.out)["sums"]["w0_0"], 194);
  const Result observed = Call({"sums", "--family", "wheel", "--m", "3", "--n", "1"});
  EXPECT_EQ(observed.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(observed.out)["w0_1"], 30);
  EXPECT_EQ(Call({"sums", "--family", "helm", "--m", "3", "--n", "1", "--expected"}).code,
            kCoverageOrCapacity);
}

TEST_F(CliTest, GridReportIsDeterministic) {
  const std::vector<std::string> serial = {"grid-report", "--family", "helm", "--m",
                                           "3..5", "--n", "1..3"};
  std::vector<std::string> parallel = serial;
  parallel.insert(parallel.end(), {"--jobs", "4"});
  const Result a = Call(serial), b = Call(serial), c = Call(parallel);
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  std::istringstream lines(a.out);
  std::vector<nlohmann::json> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(rows.size(), 18u);
  EXPECT_EQ(rows[0]["variant"], "as-printed");
  EXPECT_EQ(rows[1]["variant"], "errata");
  EXPECT_EQ(rows[0]["m"], 3);
  EXPECT_EQ(rows[17]["m"], 5);
  EXPECT_EQ(rows[17]["n"], 3);
}

TEST_F(CliTest, ExportDot) {
  const std::string dot = Path("g.dot");
  ASSERT_EQ(Call({"export", "--family", "wheel", "--m", "3", "--n", "1", "--format",
                  "dot", "--out", dot}).code, kOk);
  EXPECT_NE(Slurp(dot).find("\"w0_0\" [label=\"27\"];"), std::string::npos);
  EXPECT_EQ(Call({"export", "--family", "wheel", "--m", "3", "--n", "1", "--format",
                  "svg"}).code, kUsage);
}

TEST(ParseRangeTest, Forms) {
  EXPECT_EQ(ParseRange("3..8"), std::make_pair(3, 8));
  EXPECT_EQ(ParseRange("4"), std::make_pair(4, 4));
  for (const char* bad : {"", "..", "3..", "a..4", "8..3", "3...4"}) {
    EXPECT_THROW(ParseRange(bad), FormatError) << bad;
  }
}

}  // namespace
}  // namespace antimagic::cli
