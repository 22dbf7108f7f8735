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

// Exact samplers for L(X_1..X_n | sum_i w_i X_i = t [, sum_i u_i X_i = k])
// with independent X_i.
//
// The coordinates are split into a first half (everything off the index set
// I) and a second half (the coordinates on I). When the second half is
// determined by the first half, the conditional law is obtained by sampling
// the first half unconditionally and accepting it with probability
//
//     P(X_I = y_I) / max_l P(X_I = l)        (discrete)
//     f_{X_I}(y_I) / sup_l f_{X_I}(l)        (continuous)
//
// where y_I is the unique completion. Hard rejection, the generic
// soft-rejection scheme with an injected second half, and the
// constant-weight variant that never draws an auxiliary uniform are provided
// alongside for comparison.
//
// Index sets are 0-based throughout the C++ API.

#ifndef PDC_CORE_ENGINE_HPP_
#define PDC_CORE_ENGINE_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "core/marginals.hpp"
#include "core/rng.hpp"

namespace pdc {

using Outcome = std::vector<double>;

inline constexpr std::uint64_t kDefaultMaxAttempts = 100'000'000;
// Relative tolerance for real-valued constraint checks, scaled by max(1,|t|).
inline constexpr double kRealTolerance = 1e-9;
// Slack allowed on an evaluated acceptance ratio before it is reported as a
// bound violation; covers rounding between tied modes.
inline constexpr double kRatioSlack = 1e-12;

struct SecondConstraint {
  std::vector<double> coefficients;
  double target = 0.0;
};

// Decides whether `value` is an admissible value of coordinate `index`.
using SupportCheck = std::function<bool(std::size_t index, double value)>;

class ConditioningProblem {
 public:
  // Throws Error(kInvalidArgument) when the index set does not match the
  // constraint count (|I| = 1 without a second constraint, 2 with one), an
  // index is out of range or repeated, or a weight on I is zero.
  ConditioningProblem(std::vector<Marginal> marginals, std::vector<double> weights,
                      double target, std::vector<std::size_t> index_set,
                      std::optional<SecondConstraint> second = std::nullopt,
                      SupportCheck support_check = {});

  std::size_t size() const { return marginals_.size(); }
  const std::vector<Marginal>& marginals() const { return marginals_; }
  const std::vector<double>& weights() const { return weights_; }
  double target() const { return target_; }
  const std::optional<SecondConstraint>& second() const { return second_; }
  const std::vector<std::size_t>& index_set() const { return index_set_; }
  std::span<const std::size_t> first_half() const { return first_half_; }

  bool all_discrete() const { return discrete_.size() == marginals_.size(); }
  bool all_continuous() const { return continuous_.size() == marginals_.size(); }
  // Valid only when all_discrete() / all_continuous().
  const DiscreteMarginal& discrete(std::size_t i) const { return discrete_[i]; }
  const ContinuousMarginal& continuous(std::size_t i) const { return continuous_[i]; }

  // True when every weight, coefficient and target is an integer and every
  // marginal is discrete; constraint checks are then exact.
  bool integral() const { return integral_; }

  bool Admissible(std::size_t index, double value) const;
  // Every active constraint holds (exactly when integral(), otherwise to
  // kRealTolerance) and every coordinate is admissible.
  bool Satisfies(std::span<const double> outcome) const;

  double SampleCoordinate(std::size_t i, CountingRng& rng) const;

 private:
  std::vector<Marginal> marginals_;
  std::vector<double> weights_;
  double target_;
  std::vector<std::size_t> index_set_;
  std::optional<SecondConstraint> second_;
  SupportCheck support_check_;
  std::vector<std::size_t> first_half_;
  std::vector<DiscreteMarginal> discrete_;
  std::vector<ContinuousMarginal> continuous_;
  bool integral_ = false;
};

struct Completion {
  enum class Status { kUnique, kNotCompletable };

  Status status = Status::kNotCompletable;
  // Values on I in index-set order; only the first |I| entries are used.
  std::array<double, 2> values{};

  bool completable() const { return status == Status::kUnique; }
  static Completion NotCompletable() { return {}; }
};

struct SampleRecord {
  Outcome outcome;
  std::uint64_t attempts = 0;
  std::uint64_t rng_calls = 0;
};

struct SamplerOptions {
  std::uint64_t max_attempts = kDefaultMaxAttempts;
};

// `partial` has full length; entries on I are ignored.
Completion SolveCompletionLinear(const ConditioningProblem& p,
                                 std::span<const double> partial);
// Throws Error(kSingularSystem) when the 2x2 system on I is singular.
Completion SolveCompletionTwoConstraint(const ConditioningProblem& p,
                                        std::span<const double> partial);
// Dispatches on the presence of a second constraint.
Completion SolveCompletion(const ConditioningProblem& p, std::span<const double> partial);

SampleRecord HardRejectionSample(const ConditioningProblem& p, CountingRng& rng,
                                 const SamplerOptions& options = {});

// Weight q(a) of a first half; `outcome` has full length with I unset.
using WeightFunction = std::function<double(std::span<const double> outcome)>;
// Writes the coordinates on I into `outcome`.
using SecondHalfSampler = std::function<void(std::span<double> outcome, CountingRng& rng)>;

// Accepts a first half a ~ L(X off I) with probability q(a)/q_sup, then lets
// `second_half` complete it. Throws Error(kInvalidRejection) when q(a) > q_sup.
// No auxiliary uniform is drawn when q(a) = 0 or q(a) = q_sup.
SampleRecord SoftRejectionSample(const ConditioningProblem& p, const WeightFunction& q,
                                 double q_sup, CountingRng& rng,
                                 const SecondHalfSampler& second_half,
                                 const SamplerOptions& options = {});

// q(a) = P(X_I = y_I(a)) and q_sup = max P(X_I = l): the discrete DSH
// rejection function expressed through the generic soft-rejection sampler.
SampleRecord SoftRejectionWithCompletion(const ConditioningProblem& p, CountingRng& rng,
                                         const SamplerOptions& options = {});

SampleRecord DshDiscreteSample(const ConditioningProblem& p, CountingRng& rng,
                               const SamplerOptions& options = {});
SampleRecord DshContinuousSample(const ConditioningProblem& p, CountingRng& rng,
                                 const SamplerOptions& options = {});
// Caller asserts that the completion weight is constant over completable
// first halves; every completable first half is accepted.
SampleRecord DshUniformWeightSample(const ConditioningProblem& p, CountingRng& rng,
                                    const SamplerOptions& options = {});

// Product over I of max_pmf (discrete) or sup_pdf (continuous).
double CompletionWeightBound(const ConditioningProblem& p);
// Product over I of pmf / pdf at the completion; 0 when not completable.
double CompletionWeight(const ConditioningProblem& p, const Completion& c);

}  // namespace pdc

#endif  // PDC_CORE_ENGINE_HPP_
