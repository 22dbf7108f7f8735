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


#include "verify/report.hpp"

#include <cmath>
#include <vector>

#include "core/errors.hpp"

namespace pdc {
namespace {

StructureFamily OracleFamily(StructureFamily family) {
  if (family.kind == FamilyKind::kPlanePartitionGrid) {
    family.plane_mode = PlaneGridMode::kPerCell;
  }
  return family;
}

GofReport ChiSquaredReport(const ExactDistribution& law,
                           const std::map<Outcome, std::uint64_t>& observed,
                           std::uint64_t trials) {
  GofReport report;
  report.test = "chi2";
  report.trials = trials;
  std::vector<std::uint64_t> counts;
  std::vector<double> expected;
  std::uint64_t matched = 0;
  for (const auto& [outcome, probability] : law) {
    const auto it = observed.find(outcome);
    const std::uint64_t c = it == observed.end() ? 0 : it->second;
    counts.push_back(c);
    expected.push_back(probability);
    matched += c;
  }
  if (matched != trials || law.empty()) {
    // Some sample fell outside the oracle support.
    report.result = {INFINITY, 0.0, counts.size()};
    report.passed = false;
    return report;
  }
  report.result = ChiSquaredGof(counts, expected);
  report.passed = report.result.p_value > kPassThreshold;
  return report;
}

}  // namespace

FamilyOracle::FamilyOracle(const StructureFamily& family, std::size_t support_cap)
    : oracle_(BuildProblem(OracleFamily(family))),
      distribution_(EnumerateConditional(oracle_.problem(), support_cap)) {
  if (family.kind == FamilyKind::kPlanePartitionGrid) {
    for (std::size_t j = 0; j < oracle_.problem().size(); ++j) cell_index_[oracle_.cell(j)] = j;
  }
}

Outcome FamilyOracle::Key(const StructureSample& sample) const {
  if (const auto* c = std::get_if<MultiplicityVector>(&sample)) {
    return Outcome(c->begin(), c->end());
  }
  const auto& grid = std::get<PlaneGrid>(sample);
  Outcome key(oracle_.problem().size(), 0.0);
  for (const GridCell& cell : grid.cells) {
    const auto it = cell_index_.find({cell.row, cell.col});
    if (it == cell_index_.end()) {
      throw Error(ErrorCode::kInvalidArgument, "grid cell outside the oracle's cells");
    }
    key[it->second] = static_cast<double>(cell.count);
  }
  return key;
}

GofReport VerifyFamily(const StructureFamily& family, Method method, std::uint64_t trials,
                       std::uint64_t seed, std::size_t support_cap) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "verification needs trials >= 1");
  const FamilyOracle oracle(family, support_cap);
  const StructureProblem sp = BuildProblem(family);
  CountingRng rng(seed);
  std::map<Outcome, std::uint64_t> observed;
  for (std::uint64_t t = 0; t < trials; ++t) {
    ++observed[oracle.Key(SampleStructure(sp, method, rng).sample)];
  }
  return ChiSquaredReport(oracle.distribution(), observed, trials);
}

GofReport VerifyBorel(BorelVariant variant, std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "verification needs trials >= 1");
  CountingRng rng(seed);
  std::vector<double> values;
  values.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    values.push_back(BorelConditionalSample(variant, rng).outcome[1]);
  }
  GofReport report;
  report.test = "ks";
  report.trials = trials;
  report.result =
      KsOneSample(values, [variant](double v) { return BorelConditionalCdf(variant, v); });
  report.passed = report.result.p_value > kPassThreshold;
  return report;
}

double CycleTypeProbability(const MultiplicityVector& c) {
  double log_p = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto ci = static_cast<double>(c[i]);
    log_p -= ci * std::log(static_cast<double>(i + 1)) + std::lgamma(ci + 1.0);
  }
  return std::exp(log_p);
}

GofReport VerifyFeller(std::int64_t n, std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "verification needs trials >= 1");
  StructureFamily partitions;
  partitions.kind = FamilyKind::kPartition;
  partitions.n = n;
  ExactDistribution law = EnumerateConditional(BuildProblem(partitions).problem());
  double total = 0.0;
  for (auto& [outcome, probability] : law) {
    probability = CycleTypeProbability(MultiplicityVector(outcome.begin(), outcome.end()));
    total += probability;
  }
  for (auto& [outcome, probability] : law) probability /= total;

  CountingRng rng(seed);
  std::map<Outcome, std::uint64_t> observed;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const MultiplicityVector c = FellerPermutationCycles(n, rng);
    ++observed[Outcome(c.begin(), c.end())];
  }
  return ChiSquaredReport(law, observed, trials);
}

}  // namespace pdc
