// Copyright 2026 The Elite Authors.
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

#include "cli.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "test_support.hpp"

namespace elite::cli {
namespace {

using elite::testing::read_file;
using elite::testing::TempDir;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<SweepRow> load_csv(const std::string& path) {
  std::ifstream in(path);
  return read_sweep_csv(in);
}

TEST(CliGenerateTest, BaRespectsEdgeBound) {
  TempDir dir;
  const auto path = dir.file("g.txt");
  const auto r = run_cli({"generate", "--model", "ba", "--n", "1000", "--mprime", "10", "--seed", "7",
                          "-o", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto parsed = parse_edge_list(EdgeListSource::file(path), false);
  EXPECT_LE(parsed.graph.edge_count(), 45u + 9900u);
  EXPECT_NE(r.out.find("seed=7"), std::string::npos);
}

TEST(CliGenerateTest, ErWithCertainEdges) {
  TempDir dir;
  const auto path = dir.file("g.txt");
  ASSERT_EQ(run_cli({"generate", "--model", "er", "--n", "1000", "--p", "1.0", "-o", path}).code, 0);
  EXPECT_EQ(parse_edge_list(EdgeListSource::file(path), false).graph.edge_count(), 499500u);
}

TEST(CliGenerateTest, SameSeedGivesIdenticalFiles) {
  TempDir dir;
  for (const char* model : {"er", "ba", "affil"}) {
    std::vector<std::string> base{"generate", "--model", model, "--n", "500", "--p", "0.01",
                                  "--mprime", "3", "--seed", "11", "-o"};
    auto a = base;
    a.push_back(dir.file("a.txt"));
    auto b = base;
    b.push_back(dir.file("b.txt"));
    ASSERT_EQ(run_cli(a).code, 0);
    ASSERT_EQ(run_cli(b).code, 0);
    EXPECT_EQ(read_file(dir.file("a.txt")), read_file(dir.file("b.txt"))) << model;
  }
}

TEST(CliGenerateTest, MissingSeedIsPrintedAndReproducible) {
  TempDir dir;
  const auto r = run_cli({"generate", "--model", "ba", "--n", "300", "--mprime", "2", "-o", dir.file("a.txt")});
  ASSERT_EQ(r.code, 0);
  const auto pos = r.out.find("seed=");
  ASSERT_NE(pos, std::string::npos);
  const auto seed = r.out.substr(pos + 5, r.out.find('\n', pos) - pos - 5);
  ASSERT_EQ(run_cli({"generate", "--model", "ba", "--n", "300", "--mprime", "2", "--seed", seed, "-o",
                     dir.file("b.txt")}).code, 0);
  EXPECT_EQ(read_file(dir.file("a.txt")), read_file(dir.file("b.txt")));
}

TEST(CliGenerateTest, AffiliationWritesBipartiteSidecar) {
  TempDir dir;
  const auto path = dir.file("aff.txt");
  ASSERT_EQ(run_cli({"generate", "--model", "affil", "--n", "200", "--cq", "2", "--cu", "2", "--s", "2",
                     "--beta", "0.5", "--seed", "3", "-o", path}).code, 0);
  const auto text = read_file(path + ".bipartite.txt");
  EXPECT_EQ(text.rfind("# bipartite", 0), 0u);
  EXPECT_NE(text.find('\t'), std::string::npos);
}

TEST(CliGenerateTest, UsageErrorsExitTwo) {
  TempDir dir;
  const auto out = dir.file("g.txt");
  EXPECT_EQ(run_cli({"generate", "--model", "er", "--n", "10", "--p", "1.5", "-o", out}).code, 2);
  EXPECT_EQ(run_cli({"generate", "--model", "zz", "--n", "10", "-o", out}).code, 2);
  EXPECT_EQ(run_cli({"generate", "--model", "ba", "--n", "3", "--mprime", "5", "-o", out}).code, 2);
  EXPECT_EQ(run_cli({"generate", "--n", "10", "-o", out}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
  EXPECT_FALSE(std::filesystem::exists(out));
}

TEST(CliGenerateTest, IoFailureExitsOne) {
  EXPECT_EQ(run_cli({"generate", "--model", "ba", "--n", "30", "--mprime", "2", "--seed", "1", "-o",
                     "/nonexistent/dir/g.txt"}).code, 1);
}

class CliSweepTest : public ::testing::Test {
 protected:
  void SetUp() override {
    graph_ = dir_.file("g.txt");
    ASSERT_EQ(run_cli({"generate", "--model", "ba", "--n", "100", "--mprime", "3", "--seed", "5", "-o",
                       graph_}).code, 0);
  }
  TempDir dir_;
  std::string graph_;
};

TEST_F(CliSweepTest, FullGridHasOneRowPerNode) {
  const auto csv = dir_.file("s.csv");
  const auto r = run_cli({"sweep", "-i", graph_, "--grid", "full", "-o", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(load_csv(csv).size(), 100u);
  EXPECT_NE(r.out.find("floor(sqrt(m))=17"), std::string::npos) << r.out;  // m = 3 + 97*3
}

TEST_F(CliSweepTest, RootGridContainsSqrtMRow) {
  const auto csv = dir_.file("s.csv");
  ASSERT_EQ(run_cli({"sweep", "-i", graph_, "--grid", "root", "--points", "5", "-o", csv}).code, 0);
  bool found = false;
  for (const auto& row : load_csv(csv)) found = found || row.k == 17;
  EXPECT_TRUE(found);
}

TEST_F(CliSweepTest, DirectedInputWritesArcVariant) {
  const auto dg = dir_.file("d.txt");
  ASSERT_EQ(run_cli({"generate", "--model", "er", "--directed", "--n", "200", "--p", "0.05", "--seed", "2",
                     "-o", dg}).code, 0);
  const auto csv = dir_.file("d.csv");
  const auto r = run_cli({"sweep", "-i", dg, "-o", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto projected = load_csv(csv);
  const auto arcs = load_csv(dir_.file("d.arcs.csv"));
  ASSERT_EQ(projected.size(), arcs.size());
  EXPECT_TRUE(projected.back().internal_arcs.has_value());
  EXPECT_EQ(arcs.back().internal_edges, *arcs.back().internal_arcs);
  EXPECT_NE(r.out.find("[arcs]"), std::string::npos);
}

TEST_F(CliSweepTest, ParseErrorsExitOneWithLineNumber) {
  const auto bad = dir_.file("bad.txt");
  std::ofstream(bad) << "0 1\n1 2\nfoo bar\n";
  const auto csv = dir_.file("s.csv");
  const auto r = run_cli({"sweep", "-i", bad, "-o", csv});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_FALSE(std::filesystem::exists(csv));
  EXPECT_FALSE(std::filesystem::exists(csv + ".partial"));
  EXPECT_EQ(run_cli({"sweep", "-i", dir_.file("missing.txt"), "-o", csv}).code, 1);
  EXPECT_EQ(run_cli({"sweep", "-i", graph_, "--grid", "spiral", "-o", csv}).code, 2);
}

TEST(CliAxiomsTest, CompleteGraphPassesWithDefaults) {
  TempDir dir;
  const auto g = dir.file("k4.txt");
  std::ofstream(g) << "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
  const auto json_path = dir.file("r.json");
  const auto r = run_cli({"axioms", "-i", g, "-o", json_path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(read_file(json_path));
  EXPECT_EQ(j["passes"]["a1"], true);
  EXPECT_EQ(j["passes"]["a2"], true);
  EXPECT_EQ(j["passes"]["a4"], true);
  EXPECT_LE(j["minimal_k"].get<int>(), 3);
  EXPECT_EQ(j["sqrt_m"], 2);
}

TEST(CliAxiomsTest, ErFailsInfluence) {
  TempDir dir;
  const auto g = dir.file("er.txt");
  ASSERT_EQ(run_cli({"generate", "--model", "er", "--n", "100000", "--p", "0.0002", "--seed", "1", "-o", g}).code, 0);
  const auto json_path = dir.file("r.json");
  ASSERT_EQ(run_cli({"axioms", "-i", g, "-o", json_path}).code, 0);
  const auto j = nlohmann::json::parse(read_file(json_path));
  EXPECT_EQ(j["passes"]["a1"], false);
}

TEST(CliAxiomsTest, AffiliationStabilityExceedsOne) {
  TempDir dir;
  const auto g = dir.file("af.txt");
  ASSERT_EQ(run_cli({"generate", "--model", "affil", "--n", "20000", "--seed", "1", "-o", g}).code, 0);
  const auto json_path = dir.file("r.json");
  ASSERT_EQ(run_cli({"axioms", "-i", g, "-o", json_path}).code, 0);
  const auto j = nlohmann::json::parse(read_file(json_path));
  EXPECT_GT(j["constants"]["c2"].get<double>(), 1.0);
}

TEST(CliAxiomsTest, ZeroThresholdDisablesAxiom) {
  TempDir dir;
  const auto g = dir.file("k4.txt");
  std::ofstream(g) << "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
  const auto json_path = dir.file("r.json");
  ASSERT_EQ(run_cli({"axioms", "-i", g, "--c3min", "0", "-o", json_path}).code, 0);
  const auto j = nlohmann::json::parse(read_file(json_path));
  EXPECT_TRUE(j["passes"]["a4"].is_null());
  EXPECT_TRUE(j["thresholds"]["c3_min"].is_null());
  EXPECT_EQ(run_cli({"axioms", "-i", g, "--c1min", "1.5", "-o", json_path}).code, 2);
}

TEST(CliReportTest, WritesSeriesAndRejectsMismatchedInputs) {
  TempDir dir;
  const auto g1 = dir.file("g1.txt");
  const auto g2 = dir.file("g2.txt");
  ASSERT_EQ(run_cli({"generate", "--model", "ba", "--n", "2000", "--mprime", "3", "--seed", "1", "-o", g1}).code, 0);
  ASSERT_EQ(run_cli({"generate", "--model", "ba", "--n", "2500", "--mprime", "3", "--seed", "1", "-o", g2}).code, 0);
  ASSERT_EQ(run_cli({"sweep", "-i", g1, "-o", dir.file("a.csv")}).code, 0);
  ASSERT_EQ(run_cli({"sweep", "-i", g2, "-o", dir.file("b.csv")}).code, 0);

  const auto out1 = dir.file("plots1");
  const auto r = run_cli({"report", "-i", dir.file("a.csv"), "-o", out1});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto soc = read_file(out1 + "/sociability.dat");
  EXPECT_NE(soc.find("max=1 argmax_k="), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(out1 + "/c1.dat"));
  EXPECT_TRUE(std::filesystem::exists(out1 + "/c3.dat"));

  const auto out2 = dir.file("plots2");
  ASSERT_EQ(run_cli({"report", "-i", dir.file("a.csv"), "-i", dir.file("a.csv"), "-o", out2}).code, 0);
  for (const char* f : {"c1.dat", "c2.dat", "c3.dat", "sociability.dat", "coverage.dat"}) {
    EXPECT_EQ(read_file(out1 + "/" + f), read_file(out2 + "/" + f)) << f;
  }

  const auto out3 = dir.file("plots3");
  const auto bad = run_cli({"report", "-i", dir.file("a.csv"), "-i", dir.file("b.csv"), "-o", out3});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("b.csv"), std::string::npos) << bad.err;
  EXPECT_FALSE(std::filesystem::exists(out3 + "/c1.dat"));
}

}  // namespace
}  // namespace elite::cli
