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


// Cost harness. The cost of a sample is the number of uniforms it consumed;
// wall time is reported alongside but never compared.

#ifndef PDC_VERIFY_BENCHMARK_HPP_
#define PDC_VERIFY_BENCHMARK_HPP_

#include <cstdint>
#include <functional>

#include "core/rng.hpp"

namespace pdc {

struct TrialCost {
  std::uint64_t attempts = 0;
  std::uint64_t rng_calls = 0;
};

struct CostStats {
  std::uint64_t trials = 0;
  std::uint64_t acceptances = 0;
  std::uint64_t attempts_total = 0;
  std::uint64_t rng_calls_total = 0;
  double accept_rate = 0.0;           // acceptances / attempts_total
  double rng_calls_per_sample = 0.0;  // rng_calls_total / acceptances
  double wall_seconds = 0.0;
};

// Produces one accepted sample from `rng` and reports what it cost.
using TrialFn = std::function<TrialCost(CountingRng& rng)>;

// Runs `trial` until `trials` acceptances. Shard s of `jobs` draws from
// CountingRng(DeriveSeed(seed, s)) and runs an equal share of the trials
// (the first trials % jobs shards run one more); shards are merged in index
// order, so results depend on (seed, trials, jobs) only. `trial` must be safe
// to call concurrently with distinct rngs.
CostStats Benchmark(const TrialFn& trial, std::uint64_t trials, std::uint64_t seed,
                    unsigned jobs = 1);

// Additive merge; derived rates are recomputed.
CostStats MergeCostStats(const CostStats& a, const CostStats& b);

// rng_calls_per_sample(a) / rng_calls_per_sample(b). Throws
// Error(kInvalidArgument) when b has no recorded cost.
double SpeedupRatio(const CostStats& a, const CostStats& b);

}  // namespace pdc

#endif  // PDC_VERIFY_BENCHMARK_HPP_
