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


// Goodness-of-fit reports for the shipped samplers against their oracles.

#ifndef PDC_VERIFY_REPORT_HPP_
#define PDC_VERIFY_REPORT_HPP_

#include <cstdint>
#include <map>
#include <string>

#include "core/geometry.hpp"
#include "core/structures.hpp"
#include "verify/oracle.hpp"
#include "verify/stats.hpp"

namespace pdc {

inline constexpr double kPassThreshold = 1e-3;

struct GofReport {
  std::string test;  // "chi2" or "ks"
  TestResult result;
  std::uint64_t trials = 0;
  bool passed = false;
};

// Exact law of a family's output. Plane grids are enumerated over one
// coordinate per cell with i+j+1 <= n whatever the sampling mode, and samples
// are keyed by their cell counts in that order.
class FamilyOracle {
 public:
  explicit FamilyOracle(const StructureFamily& family,
                        std::size_t support_cap = kDefaultSupportCap);

  const ExactDistribution& distribution() const { return distribution_; }
  Outcome Key(const StructureSample& sample) const;

 private:
  StructureProblem oracle_;
  ExactDistribution distribution_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> cell_index_;
};

GofReport VerifyFamily(const StructureFamily& family, Method method, std::uint64_t trials,
                       std::uint64_t seed, std::size_t support_cap = kDefaultSupportCap);

// KS of the conditioned value against the variant's closed-form cdf.
GofReport VerifyBorel(BorelVariant variant, std::uint64_t trials, std::uint64_t seed);

// Chi-squared of Feller cycle types against n! / prod(i^c_i c_i!) / n!.
GofReport VerifyFeller(std::int64_t n, std::uint64_t trials, std::uint64_t seed);

// Probability that a uniform permutation has cycle type c.
double CycleTypeProbability(const MultiplicityVector& c);

}  // namespace pdc

#endif  // PDC_VERIFY_REPORT_HPP_
