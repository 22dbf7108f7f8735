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

#include "core/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/errors.hpp"

namespace pdc {
namespace {

bool IsInteger(double v) { return std::isfinite(v) && v == std::nearbyint(v); }

[[noreturn]] void ThrowNonTerminating(const char* sampler, std::uint64_t attempts) {
  std::ostringstream os;
  os << sampler << ": no acceptance after " << attempts
     << " attempts (conditioning event may have probability zero)";
  throw Error(ErrorCode::kNonTerminating, os.str());
}

void CheckRatio(double ratio) {
  if (!(ratio >= 0.0) || ratio > 1.0 + kRatioSlack) {
    std::ostringstream os;
    os << "acceptance ratio " << ratio << " outside [0,1]";
    throw Error(ErrorCode::kInvalidRejection, os.str());
  }
}

// Samples every coordinate off I into `outcome`.
void SampleFirstHalf(const ConditioningProblem& p, std::span<double> outcome,
                     CountingRng& rng) {
  if (p.all_discrete()) {
    for (std::size_t j : p.first_half()) {
      outcome[j] = static_cast<double>(p.discrete(j).Sample(rng));
    }
  } else {
    for (std::size_t j : p.first_half()) outcome[j] = p.SampleCoordinate(j, rng);
  }
}

void WriteCompletion(const ConditioningProblem& p, const Completion& c,
                     std::span<double> outcome) {
  const auto& index = p.index_set();
  for (std::size_t r = 0; r < index.size(); ++r) outcome[index[r]] = c.values[r];
}

SampleRecord Finish(Outcome outcome, std::uint64_t attempts, std::uint64_t calls_before,
                    const CountingRng& rng) {
  return SampleRecord{std::move(outcome), attempts, rng.calls() - calls_before};
}

}  // namespace

// ---------------------------------------------------------------------------
// ConditioningProblem

ConditioningProblem::ConditioningProblem(std::vector<Marginal> marginals,
                                         std::vector<double> weights, double target,
                                         std::vector<std::size_t> index_set,
                                         std::optional<SecondConstraint> second,
                                         SupportCheck support_check)
    : marginals_(std::move(marginals)),
      weights_(std::move(weights)),
      target_(target),
      index_set_(std::move(index_set)),
      second_(std::move(second)),
      support_check_(std::move(support_check)) {
  const std::size_t n = marginals_.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "problem needs at least one marginal");
  if (weights_.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "weights must match the number of marginals");
  }
  if (second_ && second_->coefficients.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "second-constraint coefficients must match the number of marginals");
  }
  const std::size_t expected = second_ ? 2 : 1;
  if (index_set_.size() != expected) {
    throw Error(ErrorCode::kInvalidArgument,
                second_ ? "index set must have two elements with a second constraint"
                        : "index set must have exactly one element");
  }
  for (std::size_t r = 0; r < index_set_.size(); ++r) {
    const std::size_t i = index_set_[r];
    if (i >= n) throw Error(ErrorCode::kInvalidArgument, "index set entry out of range");
    if (weights_[i] == 0.0 && !second_) {
      throw Error(ErrorCode::kInvalidArgument, "weight on the index set must be nonzero");
    }
    for (std::size_t s = 0; s < r; ++s) {
      if (index_set_[s] == i) throw Error(ErrorCode::kInvalidArgument, "repeated index");
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (std::find(index_set_.begin(), index_set_.end(), j) == index_set_.end()) {
      first_half_.push_back(j);
    }
  }
  for (const Marginal& m : marginals_) {
    if (const auto* d = std::get_if<DiscreteMarginal>(&m)) discrete_.push_back(*d);
    if (const auto* c = std::get_if<ContinuousMarginal>(&m)) continuous_.push_back(*c);
  }
  if (discrete_.size() != n) discrete_.clear();
  if (continuous_.size() != n) continuous_.clear();

  integral_ = all_discrete() && IsInteger(target_) &&
              std::all_of(weights_.begin(), weights_.end(), IsInteger);
  if (integral_ && second_) {
    integral_ = IsInteger(second_->target) &&
                std::all_of(second_->coefficients.begin(), second_->coefficients.end(),
                            IsInteger);
  }
}

bool ConditioningProblem::Admissible(std::size_t index, double value) const {
  if (support_check_) return support_check_(index, value);
  if (!std::isfinite(value)) return false;
  if (const auto* d = std::get_if<DiscreteMarginal>(&marginals_[index])) {
    if (!IsInteger(value)) return false;
    return d->InSupport(static_cast<std::int64_t>(value));
  }
  const auto& c = std::get<ContinuousMarginal>(marginals_[index]);
  return value >= c.support_min() && value <= c.support_max();
}

bool ConditioningProblem::Satisfies(std::span<const double> outcome) const {
  if (outcome.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!Admissible(i, outcome[i])) return false;
  }
  auto check = [&](const std::vector<double>& w, double t) {
    double sum = 0.0;
    for (std::size_t i = 0; i < size(); ++i) sum += w[i] * outcome[i];
    if (integral_) return sum == t;
    return std::abs(sum - t) <= kRealTolerance * std::max(1.0, std::abs(t));
  };
  if (!check(weights_, target_)) return false;
  return !second_ || check(second_->coefficients, second_->target);
}

double ConditioningProblem::SampleCoordinate(std::size_t i, CountingRng& rng) const {
  return std::visit(
      [&rng](const auto& m) { return static_cast<double>(m.Sample(rng)); }, marginals_[i]);
}

// ---------------------------------------------------------------------------
// Completions

Completion SolveCompletionLinear(const ConditioningProblem& p,
                                 std::span<const double> partial) {
  if (p.second()) {
    throw Error(ErrorCode::kInvalidArgument,
                "linear completion requires a single constraint");
  }
  const std::size_t i = p.index_set()[0];
  const auto& w = p.weights();
  double rest = 0.0;
  for (std::size_t j : p.first_half()) rest += w[j] * partial[j];
  const double y = (p.target() - rest) / w[i];
  if (!p.Admissible(i, y)) return Completion::NotCompletable();
  return Completion{Completion::Status::kUnique, {y, 0.0}};
}

Completion SolveCompletionTwoConstraint(const ConditioningProblem& p,
                                        std::span<const double> partial) {
  if (!p.second()) {
    throw Error(ErrorCode::kInvalidArgument,
                "two-constraint completion requires a second constraint");
  }
  const std::size_t i1 = p.index_set()[0];
  const std::size_t i2 = p.index_set()[1];
  const auto& w = p.weights();
  const auto& u = p.second()->coefficients;
  const double det = w[i1] * u[i2] - w[i2] * u[i1];
  if (det == 0.0) {
    throw Error(ErrorCode::kSingularSystem, "2x2 completion system is singular");
  }
  double rest_w = 0.0;
  double rest_u = 0.0;
  for (std::size_t j : p.first_half()) {
    rest_w += w[j] * partial[j];
    rest_u += u[j] * partial[j];
  }
  const double r1 = p.target() - rest_w;
  const double r2 = p.second()->target - rest_u;
  // Cramer's rule; exact for integer data with det = +-1.
  const double y = (r1 * u[i2] - w[i2] * r2) / det;
  const double z = (w[i1] * r2 - u[i1] * r1) / det;
  if (!p.Admissible(i1, y) || !p.Admissible(i2, z)) return Completion::NotCompletable();
  return Completion{Completion::Status::kUnique, {y, z}};
}

Completion SolveCompletion(const ConditioningProblem& p, std::span<const double> partial) {
  return p.second() ? SolveCompletionTwoConstraint(p, partial)
                    : SolveCompletionLinear(p, partial);
}

double CompletionWeightBound(const ConditioningProblem& p) {
  double bound = 1.0;
  for (std::size_t i : p.index_set()) {
    const Marginal& m = p.marginals()[i];
    if (const auto* d = std::get_if<DiscreteMarginal>(&m)) {
      bound *= d->max_pmf().probability;
    } else {
      bound *= std::get<ContinuousMarginal>(m).sup_pdf();
    }
  }
  return bound;
}

double CompletionWeight(const ConditioningProblem& p, const Completion& c) {
  if (!c.completable()) return 0.0;
  double weight = 1.0;
  const auto& index = p.index_set();
  for (std::size_t r = 0; r < index.size(); ++r) {
    const Marginal& m = p.marginals()[index[r]];
    if (const auto* d = std::get_if<DiscreteMarginal>(&m)) {
      weight *= d->pmf(static_cast<std::int64_t>(c.values[r]));
    } else {
      weight *= std::get<ContinuousMarginal>(m).pdf(c.values[r]);
    }
  }
  return weight;
}

// ---------------------------------------------------------------------------
// Samplers

SampleRecord HardRejectionSample(const ConditioningProblem& p, CountingRng& rng,
                                 const SamplerOptions& options) {
  const std::uint64_t before = rng.calls();
  const std::size_t n = p.size();
  const auto& w = p.weights();
  Outcome outcome(n);
  for (std::uint64_t attempt = 1; attempt <= options.max_attempts; ++attempt) {
    double sum = 0.0;
    double second_sum = 0.0;
    if (p.all_discrete()) {
      for (std::size_t j = 0; j < n; ++j) {
        outcome[j] = static_cast<double>(p.discrete(j).Sample(rng));
        sum += w[j] * outcome[j];
      }
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        outcome[j] = p.SampleCoordinate(j, rng);
        sum += w[j] * outcome[j];
      }
    }
    // Exact equality: for continuous problems the event has probability zero
    // and the attempt guard fires.
    if (sum != p.target()) continue;
    if (p.second()) {
      const auto& u = p.second()->coefficients;
      for (std::size_t j = 0; j < n; ++j) second_sum += u[j] * outcome[j];
      if (second_sum != p.second()->target) continue;
    }
    return Finish(std::move(outcome), attempt, before, rng);
  }
  ThrowNonTerminating("hard rejection", options.max_attempts);
}

SampleRecord SoftRejectionSample(const ConditioningProblem& p, const WeightFunction& q,
                                 double q_sup, CountingRng& rng,
                                 const SecondHalfSampler& second_half,
                                 const SamplerOptions& options) {
  if (!(q_sup > 0.0) || !std::isfinite(q_sup)) {
    throw Error(ErrorCode::kInvalidArgument, "q_sup must be positive and finite");
  }
  const std::uint64_t before = rng.calls();
  Outcome outcome(p.size(), 0.0);
  for (std::uint64_t attempt = 1; attempt <= options.max_attempts; ++attempt) {
    SampleFirstHalf(p, outcome, rng);
    const double qa = q(outcome);
    if (qa > q_sup * (1.0 + kRatioSlack)) {
      std::ostringstream os;
      os << "rejection weight " << qa << " exceeds the supplied bound " << q_sup;
      throw Error(ErrorCode::kInvalidRejection, os.str());
    }
    if (!(qa > 0.0)) continue;
    const double s = qa / q_sup;
    CheckRatio(s);
    if (s < 1.0 && !(rng.Uniform() < s)) continue;
    second_half(outcome, rng);
    return Finish(std::move(outcome), attempt, before, rng);
  }
  ThrowNonTerminating("soft rejection", options.max_attempts);
}

SampleRecord SoftRejectionWithCompletion(const ConditioningProblem& p, CountingRng& rng,
                                         const SamplerOptions& options) {
  const double q_sup = CompletionWeightBound(p);
  auto q = [&p](std::span<const double> outcome) {
    return CompletionWeight(p, SolveCompletion(p, outcome));
  };
  auto second_half = [&p](std::span<double> outcome, CountingRng&) {
    WriteCompletion(p, SolveCompletion(p, outcome), outcome);
  };
  return SoftRejectionSample(p, q, q_sup, rng, second_half, options);
}

SampleRecord DshDiscreteSample(const ConditioningProblem& p, CountingRng& rng,
                               const SamplerOptions& options) {
  if (!p.all_discrete()) {
    throw Error(ErrorCode::kInvalidArgument, "discrete DSH requires discrete marginals");
  }
  const std::uint64_t before = rng.calls();
  const double bound = CompletionWeightBound(p);
  Outcome outcome(p.size(), 0.0);
  for (std::uint64_t attempt = 1; attempt <= options.max_attempts; ++attempt) {
    SampleFirstHalf(p, outcome, rng);
    const Completion c = SolveCompletion(p, outcome);
    if (!c.completable()) continue;
    const double ratio = CompletionWeight(p, c) / bound;
    CheckRatio(ratio);
    if (!(rng.Uniform() < ratio)) continue;
    WriteCompletion(p, c, outcome);
    return Finish(std::move(outcome), attempt, before, rng);
  }
  ThrowNonTerminating("discrete DSH", options.max_attempts);
}

SampleRecord DshContinuousSample(const ConditioningProblem& p, CountingRng& rng,
                                 const SamplerOptions& options) {
  if (!p.all_continuous() || p.second()) {
    throw Error(ErrorCode::kInvalidArgument,
                "continuous DSH requires continuous marginals and one constraint");
  }
  const std::size_t i = p.index_set()[0];
  const ContinuousMarginal& target_marginal = p.continuous(i);
  // The density of T_I = w_I X_I at t_I is f(y_I)/|w_I|; the |w_I| cancels.
  const double sup = target_marginal.sup_pdf();
  const std::uint64_t before = rng.calls();
  Outcome outcome(p.size(), 0.0);
  for (std::uint64_t attempt = 1; attempt <= options.max_attempts; ++attempt) {
    SampleFirstHalf(p, outcome, rng);
    const Completion c = SolveCompletionLinear(p, outcome);
    if (!c.completable()) continue;
    const double ratio = target_marginal.pdf(c.values[0]) / sup;
    CheckRatio(ratio);
    if (!(rng.Uniform() < ratio)) continue;
    outcome[i] = c.values[0];
    return Finish(std::move(outcome), attempt, before, rng);
  }
  ThrowNonTerminating("continuous DSH", options.max_attempts);
}

SampleRecord DshUniformWeightSample(const ConditioningProblem& p, CountingRng& rng,
                                    const SamplerOptions& options) {
  const std::uint64_t before = rng.calls();
  Outcome outcome(p.size(), 0.0);
  for (std::uint64_t attempt = 1; attempt <= options.max_attempts; ++attempt) {
    SampleFirstHalf(p, outcome, rng);
    const Completion c = SolveCompletion(p, outcome);
    if (!c.completable()) continue;
    WriteCompletion(p, c, outcome);
    return Finish(std::move(outcome), attempt, before, rng);
  }
  ThrowNonTerminating("uniform-weight DSH", options.max_attempts);
}

}  // namespace pdc
