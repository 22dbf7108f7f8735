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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every criterion also has a wall-clock budget.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/geometry.hpp"
#include "core/structures.hpp"
#include "verify/benchmark.hpp"
#include "verify/counting.hpp"
#include "verify/oracle.hpp"
#include "verify/report.hpp"
#include "verify/stats.hpp"

namespace {

using namespace pdc;

struct Verdict {
  bool passed = true;
  std::ostringstream detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [failed: " << what << "]";
    }
  }
};

StructureFamily Family(FamilyKind kind, std::int64_t n) {
  StructureFamily f;
  f.kind = kind;
  f.n = n;
  return f;
}

TrialFn StructureTrial(const StructureProblem& sp, Method m) {
  return [&sp, m](CountingRng& rng) {
    const auto r = SampleStructure(sp, m, rng);
    return TrialCost{r.attempts, r.rng_calls};
  };
}

// Accept-rate ratio DSH / hard for one family instance.
double AcceptRatio(const StructureFamily& f, std::uint64_t trials, std::uint64_t seed) {
  const auto sp = BuildProblem(f);
  const auto hard = Benchmark(StructureTrial(sp, Method::kHard), trials, seed);
  const auto dsh = Benchmark(StructureTrial(sp, Method::kDsh), trials, seed + 1);
  return dsh.accept_rate / hard.accept_rate;
}

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void Ac1(Verdict& o) {
  for (std::int64_t n : {4, 6, 8}) {
    const auto count = CountingOracle(CountKind::kPartitions, n).convert_to<std::uint64_t>();
    const auto r =
        VerifyFamily(Family(FamilyKind::kPartition, n), Method::kDsh, 1000 * count, 11 + n);
    o.detail << " n=" << n << " cells=" << r.result.cells << " p=" << Fmt(r.result.p_value);
    o.Require(r.passed, "chi-squared at n=" + std::to_string(n));
    o.Require(r.result.cells == count, "cell count at n=" + std::to_string(n));
  }
}

void Ac2(Verdict& o) {
  const auto sp = BuildProblem(Family(FamilyKind::kPartition, 100));
  // About 1.1e6 attempts at the expected rate.
  const auto s = Benchmark(StructureTrial(sp, Method::kHard), 10000, 2);
  const double asymptote = 1.0 / (std::pow(96.0, 0.25) * std::pow(100.0, 0.75));
  o.detail << " rate=" << Fmt(s.accept_rate) << " target=" << Fmt(asymptote)
           << " attempts=" << s.attempts_total;
  o.Require(s.attempts_total >= 1'000'000, "attempt count");
  o.Require(std::abs(s.accept_rate / asymptote - 1.0) <= 0.35, "rate within 35%");
}

void Ac3(Verdict& o) {
  const double x = SolveTilt(FamilyKind::kPartition, 100);
  const double target = 1.0 / (1.0 - x);
  const double r100 = AcceptRatio(Family(FamilyKind::kPartition, 100), 5000, 31);
  const double r25 = AcceptRatio(Family(FamilyKind::kPartition, 25), 5000, 33);
  const double r400 = AcceptRatio(Family(FamilyKind::kPartition, 400), 3000, 35);
  o.detail << " ratio(100)=" << Fmt(r100) << " target=" << Fmt(target)
           << " ratio(400)/ratio(25)=" << Fmt(r400 / r25);
  o.Require(std::abs(r100 / target - 1.0) <= 0.30, "n=100 ratio within 30%");
  o.Require(r400 / r25 >= 2.8 && r400 / r25 <= 5.7, "growth factor in [2.8, 5.7]");
}

void Ac4(Verdict& o) {
  struct Case {
    FamilyKind kind;
    std::int64_t n;
    std::vector<std::int64_t> colors;
    std::int64_t parts = 0;
  };
  const std::vector<Case> suite = {
      {FamilyKind::kPartition, 5, {}},
      {FamilyKind::kPartition, 7, {}},
      {FamilyKind::kDistinctPartition, 10, {}},
      {FamilyKind::kSelection, 6, {2, 1, 3, 1, 2, 1}},
      {FamilyKind::kMultiset, 6, {1, 2, 1, 2, 1, 1}},
      {FamilyKind::kAssembly, 6, {1, 1, 2, 1, 3, 1}},
      {FamilyKind::kSetPartition, 6, {}},
      {FamilyKind::kSetPartition, 8, {}},
      {FamilyKind::kPlanePartitionGrid, 5, {}},
      {FamilyKind::kEwensProfile, 4, {}, 2},
      {FamilyKind::kEwensProfile, 7, {}, 3},
  };
  auto ewens = Family(FamilyKind::kEwensProfile, 4);
  ewens.parts = 2;
  std::vector<double> probs;
  const FamilyOracle oracle(ewens);
  for (const auto& [x, p] : oracle.distribution()) probs.push_back(p);
  std::sort(probs.begin(), probs.end());
  o.Require(probs.size() == 2 && std::abs(probs[0] - 3.0 / 11.0) < 1e-12 &&
                std::abs(probs[1] - 8.0 / 11.0) < 1e-12,
            "Ewens oracle 8/11, 3/11");

  std::uint64_t seed = 400;
  double min_p = 1.0;
  int runs = 0;
  for (const auto& c : suite) {
    auto f = Family(c.kind, c.n);
    if (!c.colors.empty()) f.colors = c.colors;
    f.parts = c.parts;
    for (Method m : {Method::kHard, Method::kDsh, Method::kSoft}) {
      const auto r = VerifyFamily(f, m, 100000, ++seed);
      min_p = std::min(min_p, r.result.p_value);
      ++runs;
      o.Require(r.passed, std::string(ToString(c.kind)) + " n=" + std::to_string(c.n) +
                              " method " + std::to_string(static_cast<int>(m)));
    }
  }
  o.detail << " instances=" << suite.size() << " runs=" << runs << " min_p=" << Fmt(min_p);
}

void Ac5(Verdict& o) {
  auto f = Family(FamilyKind::kPartition, 6);
  f.tilt = 0.3;
  const auto a = EnumerateConditional(BuildProblem(f).problem());
  f.tilt = 0.7;
  const auto b = EnumerateConditional(BuildProblem(f).problem());
  const double tv = TvDistance(a, b);
  o.detail << " tv=" << tv << " outcomes=" << a.size();
  o.Require(tv < 1e-9, "TV below 1e-9");
}

void Ac6(Verdict& o) {
  const std::vector<double> rates = {1.0, 1.0, 1.0};
  CountingRng rng(6);
  std::vector<double> a;
  std::vector<double> b;
  double worst = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const auto r = SampleExponentialSum(rates, 1.0, 2, rng);
    worst = std::max(worst, std::abs(r.outcome[0] + r.outcome[1] + r.outcome[2] - 1.0));
    a.push_back(r.outcome[0]);
    b.push_back(UniformSpacings(2, rng)[0]);
  }
  const auto ks = KsTwoSample(a, b);
  o.detail << " ks_p=" << Fmt(ks.p_value) << " max_sum_error=" << worst;
  o.Require(ks.p_value > kPassThreshold, "two-sample KS");
  o.Require(worst <= 1e-9, "sum to k");
}

void Ac7(Verdict& o) {
  CountingRng rng(7);
  std::uint64_t attempts = 0;
  bool no_aux = true;
  const std::uint64_t trials = 100000;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const auto r = SampleHypersimplex(3, 1.5, rng);
    attempts += r.attempts;
    no_aux = no_aux && r.rng_calls == 2 * r.attempts;
  }
  const double rate = static_cast<double>(trials) / static_cast<double>(attempts);
  o.detail << " rate=" << Fmt(rate) << " rng_calls_per_attempt=2";
  o.Require(std::abs(rate - 0.75) <= 0.01, "rate 0.75 +- 0.01");
  o.Require(no_aux, "no auxiliary uniforms");
}

void Ac8(Verdict& o) {
  std::vector<std::vector<double>> draws(3);
  for (int v = 1; v <= 3; ++v) {
    const auto variant = static_cast<BorelVariant>(v);
    CountingRng rng(80 + v);
    for (int i = 0; i < 100000; ++i) {
      draws[v - 1].push_back(BorelConditionalSample(variant, rng).outcome[1]);
    }
    const auto ks =
        KsOneSample(draws[v - 1], [variant](double x) { return BorelConditionalCdf(variant, x); });
    o.detail << " v" << v << "_p=" << Fmt(ks.p_value);
    o.Require(ks.p_value > kPassThreshold, "closed form for variant " + std::to_string(v));
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const auto ks = KsTwoSample(draws[i], draws[j]);
      o.detail << " p" << i + 1 << j + 1 << "=" << Fmt(ks.p_value);
      o.Require(ks.p_value < 1e-6, "variants differ");
    }
  }
}

void Ac9(Verdict& o) {
  CountingRng rng(9);
  int members = 0;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const auto r = SamplePermutahedron(4, rng);
    members += RadoCheck(r.outcome) ? 1 : 0;
    worst = std::max(worst, std::abs(std::accumulate(r.outcome.begin(), r.outcome.end(), 0.0) -
                                     10.0));
  }
  const bool outsider = RadoCheck(std::vector<double>{4, 4, 1, 1});
  o.detail << " members=" << members << "/10000 max_sum_error=" << worst;
  o.Require(members == 10000, "all points pass Rado");
  o.Require(worst <= 1e-12, "sum equals 10");
  o.Require(!outsider, "(4,4,1,1) rejected");
}

void Ac10(Verdict& o) {
  CountingRng rng(10);
  std::map<MultiplicityVector, std::uint64_t> seen;
  bool exact_calls = true;
  for (int i = 0; i < 100000; ++i) {
    const auto before = rng.calls();
    ++seen[FellerPermutationCycles(3, rng)];
    exact_calls = exact_calls && rng.calls() - before == 3;
  }
  const std::vector<std::uint64_t> counts = {seen[{3, 0, 0}], seen[{1, 1, 0}], seen[{0, 0, 1}]};
  const auto r = ChiSquaredGof(counts, std::vector<double>{1.0 / 6, 1.0 / 2, 1.0 / 3});
  o.detail << " p=" << Fmt(r.p_value);
  o.Require(seen.size() == 3, "three cycle types");
  o.Require(r.p_value > kPassThreshold, "chi-squared");
  o.Require(exact_calls, "n rng calls per sample");
}

void Ac11(Verdict& o) {
  const auto small = VerifyFamily(Family(FamilyKind::kPlanePartitionGrid, 5), Method::kDsh,
                                  30000, 11);
  o.detail << " n=5 cells=" << small.result.cells << " p=" << Fmt(small.result.p_value);
  o.Require(small.passed && small.result.cells == 3, "n=5 uniform over 3 grids");
  const std::vector<std::pair<std::int64_t, std::uint64_t>> plan = {
      {100, 2000}, {400, 800}, {1600, 200}};
  std::vector<double> ratios;
  for (const auto& [n, trials] : plan) {
    ratios.push_back(AcceptRatio(Family(FamilyKind::kPlanePartitionGrid, n), trials, 110 + n));
    o.detail << " ratio(" << n << ")=" << Fmt(ratios.back());
  }
  o.Require(ratios[0] < ratios[1] && ratios[1] < ratios[2], "strictly increasing ratio");
}

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun RunCli(const std::string& args) {
  const std::string command = std::string(PDC_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void Ac12(Verdict& o) {
  const std::vector<std::string> commands = {
      "sample partition --n 50 --count 20 --seed 7",
      "sample distinct --n 40 --count 10 --method soft",
      "sample selection --n 30 --count 10 --method hard",
      "sample multiset --n 30 --count 10",
      "sample assembly --n 30 --count 10",
      "sample setpartition --n 30 --count 10 --blocks",
      "sample plane --n 40 --count 5",
      "sample ewens --n 20 --k 5 --count 10 --format csv",
      "sample feller --n 20 --count 10",
      "sample exponential --rates 1 2 3 4 --k 2 --count 10",
      "sample beta --alphas 2 3 2 --betas 2 2 4 --k 1.2 --count 10",
      "sample hypersimplex --n 5 --k 2.5 --count 10",
      "sample permutahedron --n 5 --count 10",
      "sample spacings --m 5 --count 10",
      "sample polytope --vertices \"0,0;1,0;0,1\" --count 10",
      "sample sphere --n 4 --k 2 --count 10",
      "sample smallball --weights 1 2 3 4 --region -1.5:1.5 --count 10",
      "sample borel --variant 2 --count 10",
      "benchmark partition --n 25,50 --methods hard,dsh,soft --trials 200",
      "benchmark setpartition --n 20 --trials 200 --jobs 2 --format jsonl",
      "verify partition --n 8 --trials 22000 --seed 1",
      "verify ewens --n 4 --k 2 --trials 20000 --methods hard,dsh,soft",
      "verify borel --variant 1 --trials 20000",
      "verify feller --n 5 --trials 20000",
  };
  int identical = 0;
  for (const auto& c : commands) {
    const auto a = RunCli(c);
    const auto b = RunCli(c);
    const bool same = a.exit_code == 0 && b.exit_code == 0 && !a.out.empty() && a.out == b.out;
    identical += same ? 1 : 0;
    o.Require(same, c);
  }
  o.detail << " commands=" << commands.size() << " identical=" << identical;
}

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<void(Verdict&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "partition uniformity", 60, Ac1},
      {"AC2", "hard-rejection acceptance rate for partitions", 60, Ac2},
      {"AC3", "DSH speedup for partitions", 120, Ac3},
      {"AC4", "oracle equivalence suite", 300, Ac4},
      {"AC5", "tilt invariance", 1, Ac5},
      {"AC6", "continuous exactness for a probability-0 event", 60, Ac6},
      {"AC7", "hypersimplex acceptance", 10, Ac7},
      {"AC8", "Borel-paradox separation", 60, Ac8},
      {"AC9", "permutahedron membership", 30, Ac9},
      {"AC10", "Feller coupling", 30, Ac10},
      {"AC11", "plane-partition DSH", 180, Ac11},
      {"AC12", "CLI determinism", 60, Ac12},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Verdict o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.Require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.Require(seconds < c.budget_seconds, "time budget " + Fmt(c.budget_seconds) + "s");
    failures += o.passed ? 0 : 1;
    std::printf("%s %s: %s;%s (%.1fs)\n", o.passed ? "PASS" : "FAIL", c.id, c.title,
                o.detail.str().c_str(), seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
