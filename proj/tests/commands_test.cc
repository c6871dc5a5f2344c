// Copyright 2026 The sdpi Authors
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

#include "commands.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sdpi/channel_io.h"

namespace sdpi::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("sdpi_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& body) {
    const auto p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

  std::filesystem::path dir_;
};

using BoundChannel = TempDir;

TEST_F(BoundChannel, BscAndIdentity) {
  const auto bsc = call({"bound", "channel", write("bsc.csv", "0.9,0.1\n0.1,0.9\n"), "--format", "json"});
  ASSERT_EQ(bsc.code, 0) << bsc.err;
  const auto doc = nlohmann::json::parse(bsc.out);
  EXPECT_NEAR(doc["eta"].get<double>(), 0.64, 1e-12);
  EXPECT_EQ(doc["witness"].size(), 2u);

  const auto id = call({"bound", "channel", write("id.json", R"({"rows": [[1,0,0],[0,1,0],[0,0,1]]})")});
  ASSERT_EQ(id.code, 0) << id.err;
  EXPECT_EQ(csv_rows(id.out).at(1).at(0), "1");
}

TEST_F(BoundChannel, MalformedRowIsInputError) {
  const auto r = call({"bound", "channel", write("bad.csv", "0.5,0.5\n0.2,0.7\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("row 1"), std::string::npos) << r.err;
  EXPECT_EQ(call({"bound", "channel", (dir_ / "missing.csv").string()}).code, 2);
}

TEST_F(BoundChannel, OutFlagWritesFile) {
  const std::string target = (dir_ / "out.csv").string();
  const auto r = call({"--out", target, "bound", "channel", write("bsc.csv", "0.9,0.1\n0.1,0.9\n")});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(target).rfind("# invocation: sdpi --out", 0), 0u);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"bogus"}).code, 2);
  EXPECT_EQ(call({"bound", "layer", "--n", "3"}).code, 2);
  EXPECT_EQ(call({"bound", "layer", "--xi", "0.7", "--n", "3"}).code, 2);
  EXPECT_EQ(call({"fig", "4"}).code, 2);
  EXPECT_EQ(call({"--format", "xml", "fig", "2"}).code, 2);
  EXPECT_EQ(call({"verify", "no-such-suite"}).code, 2);
}

TEST(Cli, HeaderCarriesInvocationAndSeed) {
  const auto r = call({"fig", "2", "--seed", "17"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# invocation: sdpi fig 2 --seed 17; seed=17\n", 0), 0u);
}

TEST(Cli, ByteIdenticalReruns) {
  const std::vector<std::string> args = {"mem", "simulate", "--n", "5", "--xi", "0.1", "--delta", "0.3",
                                         "--T", "6", "--trials", "2000", "--seed", "4"};
  EXPECT_EQ(call(args).out, call(args).out);
}

TEST(Cli, LayerBoundMatchesClosedForm) {
  const auto r = call({"bound", "layer", "--xi", "0.1", "--n", "3"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  EXPECT_EQ(rows[1][2], "0.953344");
  EXPECT_EQ(rows[1][3], "0.953344");
}

TEST(Fig2, PlugInRowAndOrdering) {
  const auto r = call({"fig", "2"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"xi", "evans_schulman", "ours"}));
  bool saw_quarter = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LE(std::stod(rows[i][2]), std::stod(rows[i][1]));
    if (rows[i][0] == "0.25") {
      saw_quarter = true;
      EXPECT_EQ(rows[i][1], "0.75");
      EXPECT_EQ(rows[i][2], "0.578125");
    }
  }
  EXPECT_TRUE(saw_quarter);
  EXPECT_EQ(rows.back()[0], "0.5");
  EXPECT_EQ(std::stod(rows.back()[1]), 0.0);
  EXPECT_EQ(std::stod(rows.back()[2]), 0.0);
}

TEST(Fig3, DefaultsAndOrdering) {
  const auto r = call({"fig", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.err.empty());
  const auto rows = csv_rows(r.out);
  EXPECT_EQ(rows[1][1], rows[1][2]);
  EXPECT_EQ(rows[1][1], rows[1][3]);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LE(std::stod(rows[i][3]), std::stod(rows[i][1]) + 1e-9);
  }
  const auto wide = call({"fig", "3", "--xi1-grid", "0.1"});
  EXPECT_EQ(wide.code, 0);
  EXPECT_NE(wide.err.find("warning"), std::string::npos);
}

TEST(Fig5, SectionFourCell) {
  const auto r = call({"fig", "5", "--xi-grid", "0.37", "--delta-list", "0.4", "--layers-list", "4,5"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  EXPECT_NEAR(std::stod(rows[1][3]), 60.22, 0.01);
  EXPECT_GT(std::stod(rows[2][3]), std::stod(rows[1][3]));
  const auto inf = call({"fig", "5", "--xi-grid", "0.49", "--delta-list", "0.1", "--layers-list", "3"});
  EXPECT_EQ(csv_rows(inf.out)[1][3], "inf");
}

TEST(Fig6, SummaryLines) {
  const auto r = call({"fig", "6"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# optimal_depth: 4\n"), std::string::npos);
  EXPECT_NE(r.out.find("# minimum_neurons: 61.218"), std::string::npos);
  const auto rows = csv_rows(r.out);
  EXPECT_EQ(rows.back()[0], "6");
  EXPECT_NEAR(std::stod(rows.back()[1]), 6.915, 1e-3);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(std::stod(rows[i][3]), std::stod(rows[i][1]));
    EXPECT_GE(std::stod(rows[i][3]), std::stod(rows[i][2]));
  }
}

TEST(Fig8, MonotoneSeries) {
  const auto r = call({"fig", "8", "--pairs", "0.4:0.1"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  double prev = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double n = std::stod(rows[i][3]);
    EXPECT_GT(n, prev);
    prev = n;
    if (rows[i][0] == "100") EXPECT_NEAR(n, 3.288, 1e-3);
  }
}

TEST(Nn, MinNeuronsExitCodes) {
  EXPECT_EQ(call({"nn", "min-neurons", "--xi", "0.37", "--delta", "0.4", "--layers", "4"}).code, 0);
  EXPECT_EQ(call({"nn", "min-neurons", "--xi", "0.49", "--delta", "0.1", "--layers", "3"}).code, 1);
  EXPECT_EQ(call({"nn", "tradeoff", "--n", "1e4", "--xi", "0.49", "--delta", "0.05", "--max-depth", "4"}).code, 1);
}

TEST(Nn, BoundAndMiAgreeWithLibrary) {
  const auto b = call({"nn", "bound", "--widths", "5,5,5", "--xi", "0.35", "--hx", "1"});
  ASSERT_EQ(b.code, 0);
  EXPECT_NEAR(std::stod(csv_rows(b.out)[1][3]), 0.053144, 1e-6);
}

using NnMi = TempDir;

TEST_F(NnMi, ExactUnderTheoremTwo) {
  const std::string net = write("net.json", R"({"xi": 0.1, "input_width": 2, "layers": [
      {"neurons": [{"weights": [1, 1], "bias": -1.5}, {"weights": [1, 1], "bias": -0.5}]},
      {"neurons": [{"weights": [1, 0], "bias": -0.5}]}]})");
  const auto r = call({"nn", "mi", net});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  EXPECT_EQ(rows[1][0], "exact");
  EXPECT_LE(std::stod(rows[1][1]), std::stod(rows[1][4]));
  EXPECT_EQ(call({"nn", "mi", write("bad.json", "{")}).code, 2);
}

TEST(Mem, Commands) {
  auto rows = csv_rows(call({"mem", "reptime", "--n", "9", "--xi", "0.3", "--delta", "0.4"}).out);
  EXPECT_NEAR(std::stod(rows[1][3]), 0.09881, 1e-5);
  EXPECT_NEAR(std::stod(rows[1][5]), 7.31, 0.01);
  rows = csv_rows(call({"mem", "relax", "--n", "9", "--xi", "0.3", "--delta", "0.4"}).out);
  EXPECT_NEAR(std::stod(rows[1][3]), 15.157, 1e-3);
  rows = csv_rows(call({"mem", "overhead", "--delta", "0.4", "--T", "100", "--xi", "0.1"}).out);
  EXPECT_NEAR(std::stod(rows[1][3]), 3.288, 1e-3);
}

TEST(Verify, SuitesPass) {
  for (const std::string suite : {"prop1-equality", "memory-sandwich"}) {
    const auto r = call({"verify", suite});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(nlohmann::json::parse(r.out)["pass"].get<bool>());
  }
  const auto fuzz = call({"verify", "sdpi-fuzz", "--budget", "300", "--seed", "5"});
  EXPECT_EQ(fuzz.code, 0);
  const auto app = call({"verify", "appendix-identity", "--budget", "100"});
  EXPECT_EQ(app.code, 0);
  EXPECT_LT(nlohmann::json::parse(app.out)["worst"].get<double>(), 1e-9);
}

}  // namespace
}  // namespace sdpi::cli
