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


// Brute-force conditional laws for small discrete problems, plus empirical
// distributions built from sampler output.

#ifndef PDC_VERIFY_ORACLE_HPP_
#define PDC_VERIFY_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "core/engine.hpp"

namespace pdc {

using ExactDistribution = std::map<Outcome, double>;

inline constexpr std::size_t kDefaultSupportCap = 1'000'000;

// Enumerates every admissible vector satisfying the problem's constraints,
// weights it by the product of marginal pmfs and normalizes. Returns an empty
// map when the conditioning event is empty.
//
// Throws Error(kInvalidArgument) for problems with continuous marginals and
// Error(kSupportTooLarge) when the per-coordinate ranges cannot be bounded or
// more than `support_cap` feasible outcomes exist.
ExactDistribution EnumerateConditional(const ConditioningProblem& p,
                                       std::size_t support_cap = kDefaultSupportCap);

ExactDistribution EmpiricalDistribution(std::span<const Outcome> samples);

// Half the L1 distance over the union of supports.
double TvDistance(const ExactDistribution& a, const ExactDistribution& b);

}  // namespace pdc

#endif  // PDC_VERIFY_ORACLE_HPP_
