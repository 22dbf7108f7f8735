// Copyright 2026 The PDC Sampler Authors
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


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

using nlohmann::json;

struct Run {
  int exit_code = -1;
  std::string out;
};

Run Pdc(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " + PDC_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<json> JsonLines(const std::string& text) {
  std::vector<json> out;
  for (const auto& line : Lines(text)) out.push_back(json::parse(line));
  return out;
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
  return cells;
}

TEST(Cli, PartitionSamples) {
  const auto r = Pdc("sample partition --n 50 --count 3 --seed 7");
  ASSERT_EQ(r.exit_code, 0);
  const auto records = JsonLines(r.out);
  ASSERT_EQ(records.size(), 3u);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    EXPECT_EQ(rec["schema"], 1);
    EXPECT_EQ(rec["family"], "partition");
    EXPECT_EQ(rec["n"], 50);
    EXPECT_EQ(rec["seed"], 7);
    EXPECT_EQ(rec["index"], i);
    EXPECT_GE(rec["attempts"].get<int>(), 1);
    EXPECT_GE(rec["rng_calls"].get<int>(), 1);
    const auto c = rec["outcome"].get<std::vector<std::int64_t>>();
    ASSERT_EQ(c.size(), 50u);
    std::int64_t total = 0;
    for (std::size_t j = 0; j < c.size(); ++j) total += static_cast<std::int64_t>(j + 1) * c[j];
    EXPECT_EQ(total, 50);
  }
}

TEST(Cli, HypersimplexSample) {
  const auto r = Pdc("sample hypersimplex --n 5 --k 2.5 --count 1");
  ASSERT_EQ(r.exit_code, 0);
  const auto x = JsonLines(r.out).at(0)["outcome"].get<std::vector<double>>();
  ASSERT_EQ(x.size(), 5u);
  double s = 0.0;
  for (double v : x) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    s += v;
  }
  EXPECT_NEAR(s, 2.5, 1e-9);
}

TEST(Cli, SeedsAreReproducible) {
  const auto a = Pdc("sample ewens --n 12 --k 4 --count 5 --seed 3");
  const auto b = Pdc("sample ewens --n 12 --k 4 --count 5 --seed 3");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto env = Pdc("sample ewens --n 12 --k 4 --count 5", "PDC_SEED=3");
  EXPECT_EQ(env.out, a.out);
  const auto other = Pdc("sample ewens --n 12 --k 4 --count 5 --seed 4");
  EXPECT_NE(other.out, a.out);
  const auto fixed = Pdc("sample partition --n 10");
  EXPECT_EQ(JsonLines(fixed.out).at(0)["seed"], 20260101);
}

TEST(Cli, EverySelectorSamples) {
  const std::vector<std::string> selectors = {
      "partition --n 12",
      "distinct --n 12",
      "selection --n 6 --colors 2 1 1 2 1 1",
      "multiset --n 6",
      "assembly --n 6",
      "setpartition --n 8 --blocks",
      "plane --n 12",
      "ewens --n 8 --k 3",
      "feller --n 6",
      "exponential --rates 1 1 1 --k 1",
      "beta --alphas 2 2 2 --betas 2 3 2 --k 1.5",
      "hypersimplex --n 4 --k 2",
      "permutahedron --n 5",
      "spacings --m 4",
      "polytope --vertices \"0,0;1,0;0,1\"",
      "sphere --n 3 --k 2",
      "smallball --weights 1 2 3 --region -0.5:0.5",
      "borel --variant 3",
  };
  for (const auto& s : selectors) {
    const auto r = Pdc("sample " + s + " --count 2 --seed 5");
    ASSERT_EQ(r.exit_code, 0) << s;
    const auto records = JsonLines(r.out);
    ASSERT_EQ(records.size(), 2u) << s;
    EXPECT_TRUE(records[0].contains("outcome")) << s;
  }
}

TEST(Cli, SetPartitionBlocksMatchProfile) {
  const auto r = Pdc("sample setpartition --n 9 --blocks --count 4 --seed 2");
  ASSERT_EQ(r.exit_code, 0);
  for (const auto& rec : JsonLines(r.out)) {
    const auto c = rec["outcome"].get<std::vector<std::int64_t>>();
    std::vector<std::int64_t> sizes(c.size(), 0);
    std::vector<int> seen(10, 0);
    for (const auto& block : rec["blocks"]) {
      ++sizes[block.size() - 1];
      for (int e : block) ++seen[e];
    }
    EXPECT_EQ(sizes, c);
    for (int e = 1; e <= 9; ++e) EXPECT_EQ(seen[e], 1);
  }
}

TEST(Cli, CsvSamples) {
  const auto r = Pdc("sample partition --n 6 --count 3 --format csv");
  ASSERT_EQ(r.exit_code, 0);
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "schema,family,n,seed,index,attempts,rng_calls,outcome");
  EXPECT_EQ(SplitCsv(lines[1])[1], "partition");
}

TEST(Cli, BenchmarkSpeedupColumn) {
  const auto r = Pdc("benchmark partition --n 100 --methods hard,dsh --trials 2000 --seed 1");
  ASSERT_EQ(r.exit_code, 0);
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0],
            "schema,family,n,method,trials,accept_rate,rng_calls_per_sample,speedup_vs_hard");
  const auto hard = SplitCsv(lines[1]);
  const auto dsh = SplitCsv(lines[2]);
  EXPECT_EQ(hard[3], "hard");
  EXPECT_EQ(std::stod(hard[7]), 1.0);
  EXPECT_EQ(dsh[3], "dsh");
  EXPECT_NEAR(std::stod(dsh[7]), 8.31, 0.3 * 8.31);
}

TEST(Cli, BenchmarkHardOnly) {
  const auto r = Pdc("benchmark partition --n 20 --methods hard --trials 50 --format jsonl");
  ASSERT_EQ(r.exit_code, 0);
  const auto records = JsonLines(r.out);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0]["speedup_vs_hard"], 1);
  EXPECT_EQ(records[0]["trials"], 50);
}

TEST(Cli, BenchmarkJobsAreDeterministic) {
  const auto a = Pdc("benchmark multiset --n 30,60 --methods hard,dsh,soft --trials 200 --jobs 3");
  const auto b = Pdc("benchmark multiset --n 30,60 --methods hard,dsh,soft --trials 200 --jobs 3");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(Lines(a.out).size(), 7u);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifyReports) {
  const auto partition = Pdc("verify partition --n 8 --trials 22000 --seed 1");
  ASSERT_EQ(partition.exit_code, 0);
  const auto p = JsonLines(partition.out).at(0);
  EXPECT_EQ(p["test"], "chi2");
  EXPECT_EQ(p["cells"], 22);
  EXPECT_EQ(p["passed"], true);

  const auto ewens = Pdc("verify ewens --n 4 --k 2 --trials 100000 --methods hard,dsh,soft");
  ASSERT_EQ(ewens.exit_code, 0);
  const auto e = JsonLines(ewens.out);
  ASSERT_EQ(e.size(), 3u);
  for (const auto& rec : e) EXPECT_EQ(rec["cells"], 2);

  const auto borel = Pdc("verify borel --variant 2 --trials 100000");
  ASSERT_EQ(borel.exit_code, 0);
  EXPECT_EQ(JsonLines(borel.out).at(0)["test"], "ks");

  const auto feller = Pdc("verify feller --n 5 --trials 20000");
  EXPECT_EQ(feller.exit_code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(Pdc("sample partition --n 0").exit_code, 2);
  EXPECT_EQ(Pdc("sample nosuchthing --n 5").exit_code, 2);
  EXPECT_EQ(Pdc("sample partition --n 5 --method uniform").exit_code, 2);
  EXPECT_EQ(Pdc("sample partition --n 5 --bogus").exit_code, 2);
  EXPECT_EQ(Pdc("sample partition --n 5 --format xml").exit_code, 2);
  EXPECT_EQ(Pdc("sample hypersimplex --n 3 --k 3 --max-attempts 100").exit_code, 3);
  EXPECT_EQ(Pdc("verify partition --n 40 --support-cap 100").exit_code, 4);
  EXPECT_EQ(Pdc("").exit_code, 2);
}

}  // namespace
