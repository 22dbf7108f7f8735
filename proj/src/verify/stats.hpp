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


#ifndef PDC_VERIFY_STATS_HPP_
#define PDC_VERIFY_STATS_HPP_

#include <cstdint>
#include <functional>
#include <span>

namespace pdc {

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t cells = 0;  // chi-squared cells after merging; 0 for KS
};

// Pearson goodness of fit with dim-1 degrees of freedom. Cells with expected
// count below 5 are merged, smallest first. Cells with zero expectation and
// zero count are dropped.
//
// Throws Error(kDimensionMismatch) on length mismatch and
// Error(kInvalidArgument) when counts sum to zero, `expected` does not sum to
// 1, or a zero-probability cell has a nonzero count.
TestResult ChiSquaredGof(std::span<const std::uint64_t> counts,
                         std::span<const double> expected);

// One-sample Kolmogorov-Smirnov against a continuous cdf; asymptotic p-value.
TestResult KsOneSample(std::span<const double> samples,
                       const std::function<double(double)>& cdf);

// Two-sample Kolmogorov-Smirnov; asymptotic p-value.
TestResult KsTwoSample(std::span<const double> a, std::span<const double> b);

// Kolmogorov survival function Q(lambda) = 2 sum_k (-1)^(k-1) exp(-2 k^2 lambda^2).
double KolmogorovSurvival(double lambda);

}  // namespace pdc

#endif  // PDC_VERIFY_STATS_HPP_
