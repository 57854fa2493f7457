// Copyright 2026 The linforest Authors
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

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "linforest/generators.hpp"
#include "linforest/graph.hpp"

namespace linforest {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "linforest");
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / ("linforest_test_" + name);
  std::ofstream(p) << body;
  return p;
}

TEST(Cli, GenCliquesThenMinforest) {
  const Result g = run_cli({"gen", "--family", "cliques", "--k", "2", "--d", "3"});
  ASSERT_EQ(g.code, cli::kExitOk) << g.err;
  EXPECT_EQ(load_graph(g.out), disjoint_cliques(2, 3));
  const Result m = run_cli({"minforest"}, g.out);
  ASSERT_EQ(m.code, cli::kExitOk) << m.err;
  EXPECT_EQ(m.out.rfind("paths: 2\n", 0), 0u) << m.out;
}

TEST(Cli, MinforestEdgeless) {
  const Result m = run_cli({"minforest"}, "3 0\n");
  ASSERT_EQ(m.code, cli::kExitOk) << m.err;
  EXPECT_EQ(m.out.rfind("paths: 3\n", 0), 0u);
}

TEST(Cli, MinforestJson) {
  const Result g = run_cli({"gen", "--family", "regular", "--n", "30", "--d", "4", "--seed", "2"});
  const Result m = run_cli({"--format", "json", "minforest"}, g.out);
  ASSERT_EQ(m.code, cli::kExitOk) << m.err;
  const auto j = nlohmann::json::parse(m.out);
  EXPECT_TRUE(j.contains("meta"));
  EXPECT_LE(j["paths"].get<int>(), 12);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"--seed", "9", "--trials", "20", "sample"};
  const Result g = run_cli({"gen", "--family", "regular", "--n", "20", "--d", "3", "--seed", "4"});
  const Result a = run_cli(args, g.out);
  const Result b = run_cli(args, g.out);
  ASSERT_EQ(a.code, cli::kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("vertex,frequency,stderr"), std::string::npos);
  EXPECT_NE(a.out.find("# prng=mt19937_64 seed=9"), std::string::npos);
}

TEST(Cli, DecomposeJsonPartition) {
  const Result g = run_cli({"gen", "--family", "regular", "--n", "40", "--d", "6", "--seed", "1"});
  const Result d = run_cli({"--format", "json", "decompose"}, g.out);
  ASSERT_EQ(d.code, cli::kExitOk) << d.err;
  const auto j = nlohmann::json::parse(d.out);
  EXPECT_TRUE(j.contains("forests"));
  EXPECT_TRUE(j.contains("stats"));
  EXPECT_GE(j["total_parts"].get<int>(), 4);
}

TEST(Cli, FractionalAndTour) {
  const Result g = run_cli({"gen", "--family", "connected", "--n", "40", "--d", "4", "--seed", "3"});
  const Result f = run_cli({"--trials", "5", "fractional"}, g.out);
  ASSERT_EQ(f.code, cli::kExitOk) << f.err;
  const Result t = run_cli({"tour"}, g.out);
  ASSERT_EQ(t.code, cli::kExitOk) << t.err;
  EXPECT_NE(t.out.find("length:"), std::string::npos);
  EXPECT_NE(t.out.find("ratio:"), std::string::npos);
}

TEST(Cli, VerifyCorpus) {
  const Result v = run_cli({"verify", "--corpus", "small"});
  EXPECT_EQ(v.code, cli::kExitOk) << v.err;
  EXPECT_NE(v.out.find("failures=0"), std::string::npos);
}

TEST(Cli, VerifyInstance) {
  const auto gp = temp_file("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
  const auto fp = temp_file("c4_forest.txt", "path 0 1 2 3\n");
  const Result v = run_cli({"verify", gp.string(), "--forest", fp.string(), "--fixed", "3"});
  EXPECT_EQ(v.code, cli::kExitOk) << v.err;
  EXPECT_NE(v.out.find("component_bound"), std::string::npos);
  const auto bad = temp_file("c4_short.txt", "path 0 1\npath 2 3\n");
  const Result nm = run_cli({"verify", gp.string(), "--forest", bad.string()});
  EXPECT_EQ(nm.code, cli::kExitUsage);
}

TEST(Cli, BenchHasBoundColumns) {
  const Result b = run_cli({"bench", "--n", "30", "--d", "3", "--seeds", "2", "--what", "paths,decompose,tour"});
  ASSERT_EQ(b.code, cli::kExitOk) << b.err;
  EXPECT_NE(b.out.find("bound_2n_over_d1"), std::string::npos) << b.out;
}

TEST(Cli, ErrorCodes) {
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"nosuch"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"gen", "--family", "regular", "--n", "3", "--d", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"minforest"}, "2 1\n0 0\n").code, cli::kExitIo);
  EXPECT_EQ(run_cli({"minforest", "/nonexistent/graph.txt"}).code, cli::kExitIo);
  EXPECT_EQ(run_cli({"--format", "xml", "minforest"}, "3 0\n").code, cli::kExitUsage);
}

TEST(Cli, OutFile) {
  const auto p = std::filesystem::temp_directory_path() / "linforest_test_out.txt";
  std::filesystem::remove(p);
  const Result r = run_cli({"--out", p.string(), "minforest"}, "3 0\n");
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::ifstream in(p);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "paths: 3");
}

}  // namespace
}  // namespace linforest
