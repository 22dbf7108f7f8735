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


#include "verify/stats.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "core/errors.hpp"

namespace pdc {
namespace {

double KsPValue(double d, double effective_n) {
  const double root = std::sqrt(effective_n);
  return KolmogorovSurvival((root + 0.12 + 0.11 / root) * d);
}

}  // namespace

TestResult ChiSquaredGof(std::span<const std::uint64_t> counts,
                         std::span<const double> expected) {
  if (counts.size() != expected.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "counts and expected differ in length");
  }
  double total = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (!(expected[i] >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "negative expectation");
    if (expected[i] == 0.0 && counts[i] > 0) {
      throw Error(ErrorCode::kInvalidArgument, "count observed in a zero-probability cell");
    }
    total += static_cast<double>(counts[i]);
    mass += expected[i];
  }
  if (total == 0.0) throw Error(ErrorCode::kInvalidArgument, "no observations");
  if (std::abs(mass - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument, "expected probabilities must sum to 1");
  }

  struct Cell {
    double expected;
    double observed;
    bool operator>(const Cell& o) const { return expected > o.expected; }
  };
  std::priority_queue<Cell, std::vector<Cell>, std::greater<>> heap;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (expected[i] > 0.0) {
      heap.push({expected[i] * total, static_cast<double>(counts[i])});
    }
  }
  while (heap.size() > 1 && heap.top().expected < 5.0) {
    Cell a = heap.top();
    heap.pop();
    Cell b = heap.top();
    heap.pop();
    heap.push({a.expected + b.expected, a.observed + b.observed});
  }
  TestResult r;
  r.cells = heap.size();
  while (!heap.empty()) {
    const Cell c = heap.top();
    heap.pop();
    const double diff = c.observed - c.expected;
    r.statistic += diff * diff / c.expected;
  }
  if (r.cells < 2) {
    r.p_value = 1.0;
  } else {
    r.p_value = boost::math::gamma_q(0.5 * static_cast<double>(r.cells - 1), 0.5 * r.statistic);
  }
  return r;
}

double KolmogorovSurvival(double lambda) {
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

TestResult KsOneSample(std::span<const double> samples,
                       const std::function<double(double)>& cdf) {
  if (samples.empty()) throw Error(ErrorCode::kInvalidArgument, "KS needs samples");
  std::vector<double> x(samples.begin(), samples.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return {d, KsPValue(d, n), 0};
}

TestResult KsTwoSample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::kInvalidArgument, "KS needs samples");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double n = static_cast<double>(x.size());
  const double m = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }
  return {d, KsPValue(d, n * m / (n + m)), 0};
}

}  // namespace pdc
