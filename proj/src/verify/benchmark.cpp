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


#include "verify/benchmark.hpp"

#include <chrono>
#include <exception>
#include <thread>
#include <vector>

#include "core/errors.hpp"

namespace pdc {
namespace {

void Finalize(CostStats& s) {
  s.accept_rate = s.attempts_total == 0
                      ? 0.0
                      : static_cast<double>(s.acceptances) / static_cast<double>(s.attempts_total);
  s.rng_calls_per_sample =
      s.acceptances == 0
          ? 0.0
          : static_cast<double>(s.rng_calls_total) / static_cast<double>(s.acceptances);
}

CostStats RunShard(const TrialFn& trial, std::uint64_t trials, std::uint64_t seed) {
  CountingRng rng(seed);
  CostStats s;
  s.trials = trials;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const TrialCost c = trial(rng);
    ++s.acceptances;
    s.attempts_total += c.attempts;
    s.rng_calls_total += c.rng_calls;
  }
  Finalize(s);
  return s;
}

}  // namespace

CostStats MergeCostStats(const CostStats& a, const CostStats& b) {
  CostStats s;
  s.trials = a.trials + b.trials;
  s.acceptances = a.acceptances + b.acceptances;
  s.attempts_total = a.attempts_total + b.attempts_total;
  s.rng_calls_total = a.rng_calls_total + b.rng_calls_total;
  s.wall_seconds = a.wall_seconds + b.wall_seconds;
  Finalize(s);
  return s;
}

CostStats Benchmark(const TrialFn& trial, std::uint64_t trials, std::uint64_t seed,
                    unsigned jobs) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "benchmark needs trials >= 1");
  if (jobs < 1) jobs = 1;
  if (jobs > trials) jobs = static_cast<unsigned>(trials);
  const auto start = std::chrono::steady_clock::now();

  std::vector<CostStats> shards(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto run = [&](unsigned s) {
    const std::uint64_t share = trials / jobs + (s < trials % jobs ? 1 : 0);
    try {
      shards[s] = RunShard(trial, share, DeriveSeed(seed, s));
    } catch (...) {
      errors[s] = std::current_exception();
    }
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::thread> workers;
    for (unsigned s = 0; s < jobs; ++s) workers.emplace_back(run, s);
    for (auto& w : workers) w.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  CostStats total;
  for (const CostStats& s : shards) total = MergeCostStats(total, s);
  total.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

double SpeedupRatio(const CostStats& a, const CostStats& b) {
  if (!(b.rng_calls_per_sample > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "speedup baseline has zero cost per sample");
  }
  return a.rng_calls_per_sample / b.rng_calls_per_sample;
}

}  // namespace pdc
