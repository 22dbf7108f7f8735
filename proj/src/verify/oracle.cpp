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


#include "verify/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace pdc {
namespace {

struct Range {
  std::int64_t lo;
  std::int64_t hi;
};

class Enumerator {
 public:
  Enumerator(const ConditioningProblem& p, std::size_t cap) : p_(p), cap_(cap) {
    const std::size_t n = p.size();
    const auto& w = p.weights();
    ranges_.resize(n);
    // Static bounds: each coordinate starts at its support range; a finite
    // upper end is then derived from the first constraint using the smallest
    // possible contribution of every other coordinate.
    std::vector<double> lo(n), hi(n);
    for (std::size_t j = 0; j < n; ++j) {
      lo[j] = static_cast<double>(p.discrete(j).support_min());
      const std::int64_t top = p.discrete(j).support_max();
      hi[j] = top == std::numeric_limits<std::int64_t>::max() ? INFINITY
                                                              : static_cast<double>(top);
    }
    auto min_contrib = [&](std::size_t j) {
      return std::min(w[j] * lo[j], w[j] * hi[j]);
    };
    for (int sweep = 0; sweep < 2; ++sweep) {
      double total_min = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        total_min += w[j] == 0.0 ? 0.0 : min_contrib(j);
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (w[j] == 0.0) continue;
        const double others = total_min - min_contrib(j);
        const double bound = (p.target() - others) / w[j];
        if (w[j] > 0.0) {
          hi[j] = std::min(hi[j], std::floor(bound + 1e-9));
        } else {
          lo[j] = std::max(lo[j], std::ceil(bound - 1e-9));
        }
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(lo[j]) || !std::isfinite(hi[j]) || hi[j] - lo[j] > 1e7) {
        throw Error(ErrorCode::kSupportTooLarge,
                    "enumeration needs a bounded range for every coordinate");
      }
      ranges_[j] = {static_cast<std::int64_t>(lo[j]), static_cast<std::int64_t>(hi[j])};
    }
    // Reachable range of sum_{k >= j} w_k x_k, for pruning.
    suffix_min_.assign(n + 1, 0.0);
    suffix_max_.assign(n + 1, 0.0);
    for (std::size_t j = n; j-- > 0;) {
      const double a = w[j] * static_cast<double>(ranges_[j].lo);
      const double b = w[j] * static_cast<double>(ranges_[j].hi);
      suffix_min_[j] = suffix_min_[j + 1] + std::min(a, b);
      suffix_max_[j] = suffix_max_[j + 1] + std::max(a, b);
    }
    slack_ = p.integral() ? 0.0 : kRealTolerance * std::max(1.0, std::abs(p.target()));
    node_budget_ = std::max<std::size_t>(cap_, 1) * 1000;
  }

  ExactDistribution Run() {
    current_.assign(p_.size(), 0.0);
    Visit(0, 0.0, 1.0);
    double total = 0.0;
    for (const auto& [outcome, mass] : result_) total += mass;
    if (total > 0.0) {
      for (auto& [outcome, mass] : result_) mass /= total;
    }
    return std::move(result_);
  }

 private:
  void Visit(std::size_t j, double partial, double weight) {
    if (++nodes_ > node_budget_) {
      throw Error(ErrorCode::kSupportTooLarge, "enumeration exceeded its node budget");
    }
    const double remaining = p_.target() - partial;
    if (remaining < suffix_min_[j] - slack_ || remaining > suffix_max_[j] + slack_) return;
    if (j == p_.size()) {
      if (!p_.Satisfies(current_)) return;
      if (result_.size() >= cap_) {
        throw Error(ErrorCode::kSupportTooLarge, "conditional support exceeds the cap");
      }
      result_[current_] += weight;
      return;
    }
    const DiscreteMarginal& m = p_.discrete(j);
    const double w = p_.weights()[j];
    for (std::int64_t v = ranges_[j].lo; v <= ranges_[j].hi; ++v) {
      const double mass = m.pmf(v);
      if (mass <= 0.0) continue;
      current_[j] = static_cast<double>(v);
      Visit(j + 1, partial + w * static_cast<double>(v), weight * mass);
    }
    current_[j] = 0.0;
  }

  const ConditioningProblem& p_;
  std::size_t cap_;
  std::vector<Range> ranges_;
  std::vector<double> suffix_min_;
  std::vector<double> suffix_max_;
  double slack_ = 0.0;
  std::size_t nodes_ = 0;
  std::size_t node_budget_ = 0;
  Outcome current_;
  ExactDistribution result_;
};

}  // namespace

ExactDistribution EnumerateConditional(const ConditioningProblem& p, std::size_t support_cap) {
  if (!p.all_discrete()) {
    throw Error(ErrorCode::kInvalidArgument, "enumeration requires discrete marginals");
  }
  return Enumerator(p, support_cap).Run();
}

ExactDistribution EmpiricalDistribution(std::span<const Outcome> samples) {
  ExactDistribution out;
  if (samples.empty()) return out;
  for (const Outcome& s : samples) out[s] += 1.0;
  const double n = static_cast<double>(samples.size());
  for (auto& [outcome, mass] : out) mass /= n;
  return out;
}

double TvDistance(const ExactDistribution& a, const ExactDistribution& b) {
  double sum = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      sum += std::abs(ia->second);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      sum += std::abs(ib->second);
      ++ib;
    } else {
      sum += std::abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return 0.5 * sum;
}

}  // namespace pdc
