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

#include "core/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "core/errors.hpp"

namespace pdc {
namespace {

[[noreturn]] void Invalid(const char* what) { throw Error(ErrorCode::kInvalidArgument, what); }

ConditioningProblem SumProblem(std::vector<Marginal> marginals, double target,
                               std::size_t index) {
  const std::size_t n = marginals.size();
  if (index >= n) Invalid("completion index out of range");
  return ConditioningProblem(std::move(marginals), std::vector<double>(n, 1.0), target,
                             {index});
}

}  // namespace

IntervalUnion::IntervalUnion(std::vector<OpenInterval> intervals)
    : intervals_(std::move(intervals)) {
  if (intervals_.empty()) Invalid("interval union must not be empty");
  std::sort(intervals_.begin(), intervals_.end(),
            [](const OpenInterval& a, const OpenInterval& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (std::isnan(intervals_[i].lo) || std::isnan(intervals_[i].hi) ||
        !(intervals_[i].lo < intervals_[i].hi)) {
      Invalid("interval needs lo < hi");
    }
    if (i > 0 && intervals_[i].lo < intervals_[i - 1].hi) Invalid("intervals overlap");
  }
}

IntervalUnion IntervalUnion::WholeLine() {
  return IntervalUnion({{-INFINITY, INFINITY}});
}

bool IntervalUnion::Contains(double v) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [v](const OpenInterval& iv) { return iv.lo < v && v < iv.hi; });
}

bool IntervalUnion::AdmitsPairAtDistance(double distance) const {
  for (const OpenInterval& a : intervals_) {
    for (const OpenInterval& b : intervals_) {
      // Some v in a with v + distance in b.
      if (std::max(a.lo, b.lo - distance) < std::min(a.hi, b.hi - distance)) return true;
    }
  }
  return false;
}

Polytope::Polytope(std::vector<std::vector<double>> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty() || vertices_.front().empty()) Invalid("polytope needs vertices");
  for (const auto& v : vertices_) {
    if (v.size() != vertices_.front().size()) {
      throw Error(ErrorCode::kDimensionMismatch, "polytope vertices differ in dimension");
    }
  }
}

SampleRecord SampleExponentialSum(std::span<const double> rates, double k, std::size_t index,
                                  CountingRng& rng, const SamplerOptions& options) {
  if (rates.empty()) Invalid("need at least one rate");
  if (!(k > 0.0) || !std::isfinite(k)) Invalid("sum must be positive");
  std::vector<Marginal> marginals;
  for (double r : rates) marginals.emplace_back(ContinuousMarginal::Exponential(r));
  return DshContinuousSample(SumProblem(std::move(marginals), k, index), rng, options);
}

SampleRecord SampleBetaSum(std::span<const double> alphas, std::span<const double> betas,
                           double k, std::optional<std::size_t> index, CountingRng& rng,
                           const SamplerOptions& options) {
  if (alphas.size() != betas.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "alphas and betas differ in length");
  }
  if (alphas.empty()) Invalid("need at least one coordinate");
  std::vector<Marginal> marginals;
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    marginals.emplace_back(ContinuousMarginal::Beta(alphas[j], betas[j]));
  }
  if (!index) {
    for (std::size_t j = 0; j < alphas.size() && !index; ++j) {
      if (alphas[j] > 1.0 && betas[j] > 1.0) index = j;
    }
    if (!index) {
      throw Error(ErrorCode::kUnboundedDensity,
                  "no coordinate has alpha > 1 and beta > 1 to complete");
    }
  }
  if (*index >= alphas.size()) Invalid("completion index out of range");
  // Throws kUnboundedDensity for the chosen coordinate if needed.
  (void)std::get<ContinuousMarginal>(marginals[*index]).sup_pdf();
  return DshContinuousSample(SumProblem(std::move(marginals), k, *index), rng, options);
}

SampleRecord SampleHypersimplex(std::int64_t n, double k, CountingRng& rng,
                                const SamplerOptions& options) {
  if (n < 1) Invalid("dimension must be at least 1");
  if (!(k >= 0.0 && k <= static_cast<double>(n))) Invalid("k must lie in [0, n]");
  std::vector<Marginal> marginals(static_cast<std::size_t>(n),
                                  ContinuousMarginal::UniformReal(0.0, 1.0));
  return DshUniformWeightSample(
      SumProblem(std::move(marginals), k, static_cast<std::size_t>(n - 1)), rng, options);
}

bool RadoCheck(std::span<const double> point) {
  std::vector<double> x(point.begin(), point.end());
  std::sort(x.begin(), x.end(), std::greater<>());
  const auto n = static_cast<double>(x.size());
  double top = 0.0;
  for (std::size_t j = 1; j <= x.size(); ++j) {
    top += x[j - 1];
    const auto jd = static_cast<double>(j);
    const double bound = jd * (2.0 * n - jd + 1.0) / 2.0;
    if (top > bound + 1e-9 * bound) return false;
  }
  return true;
}

SampleRecord SamplePermutahedron(std::int64_t n, CountingRng& rng,
                                 const SamplerOptions& options) {
  if (n < 2) Invalid("dimension must be at least 2");
  const std::uint64_t before = rng.calls();
  const double nd = static_cast<double>(n);
  std::vector<Marginal> marginals(static_cast<std::size_t>(n),
                                  ContinuousMarginal::UniformReal(1.0, nd));
  const auto problem =
      SumProblem(std::move(marginals), nd * (nd + 1.0) / 2.0, static_cast<std::size_t>(n - 1));
  for (std::uint64_t attempt = 1; attempt <= options.max_attempts; ++attempt) {
    SampleRecord proposal = DshUniformWeightSample(problem, rng, options);
    if (RadoCheck(proposal.outcome)) {
      return {std::move(proposal.outcome), attempt, rng.calls() - before};
    }
  }
  throw Error(ErrorCode::kNonTerminating, "permutahedron rejection exceeded max_attempts");
}

std::vector<double> UniformSpacings(std::int64_t m, CountingRng& rng) {
  if (m < 0) Invalid("spacing count must be non-negative");
  std::vector<double> u(static_cast<std::size_t>(m));
  for (double& v : u) v = rng.Uniform();
  std::sort(u.begin(), u.end());
  std::vector<double> gaps;
  gaps.reserve(u.size() + 1);
  double prev = 0.0;
  for (double v : u) {
    gaps.push_back(v - prev);
    prev = v;
  }
  gaps.push_back(1.0 - prev);
  return gaps;
}

std::vector<double> FellerPolytopeSample(const Polytope& polytope, CountingRng& rng) {
  const auto& verts = polytope.vertices();
  const auto y = UniformSpacings(static_cast<std::int64_t>(verts.size()) - 1, rng);
  std::vector<double> point(polytope.dimension(), 0.0);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t d = 0; d < point.size(); ++d) point[d] += y[i] * verts[i][d];
  }
  return point;
}

SampleRecord SampleSphereSurface(const ContinuousMarginal& marginal, std::int64_t n, double k,
                                 std::size_t index, double sup_bound, CountingRng& rng,
                                 const SamplerOptions& options) {
  if (n < 1) Invalid("dimension must be at least 1");
  if (!(k > 0.0) || !std::isfinite(k)) Invalid("squared radius must be positive");
  if (!(sup_bound > 0.0) || !std::isfinite(sup_bound)) Invalid("sup bound must be positive");
  std::vector<Marginal> marginals(static_cast<std::size_t>(n), marginal);
  const auto problem = SumProblem(std::move(marginals), k, index);
  auto remainder = [&](std::span<const double> outcome) {
    double s = 0.0;
    for (std::size_t j : problem.first_half()) s += outcome[j] * outcome[j];
    return k - s;
  };
  auto q = [&](std::span<const double> outcome) {
    const double t = remainder(outcome);
    if (!(t > 0.0)) return 0.0;
    const double r = std::sqrt(t);
    return (marginal.pdf(r) + marginal.pdf(-r)) / (2.0 * r);
  };
  auto second_half = [&](std::span<double> outcome, CountingRng& r) {
    const double root = std::sqrt(remainder(outcome));
    const double fp = marginal.pdf(root);
    const double fm = marginal.pdf(-root);
    if (fp > 0.0 && fm > 0.0) {
      outcome[index] = r.Uniform() * (fp + fm) < fp ? root : -root;
    } else {
      outcome[index] = fp > 0.0 ? root : -root;
    }
  };
  return SoftRejectionSample(problem, q, sup_bound, rng, second_half, options);
}

SampleRecord BorelConditionalSample(BorelVariant variant, CountingRng& rng) {
  const auto normal = ContinuousMarginal::Normal(0.0, 1.0);
  switch (variant) {
    case BorelVariant::kDifference: {
      ConditioningProblem problem({normal, normal}, {1.0, -1.0}, 0.0, {1});
      return DshContinuousSample(problem, rng);
    }
    case BorelVariant::kRatio: {
      ConditioningProblem problem({normal, normal}, {0.0, 1.0}, 0.0, {1});
      auto q = [&](std::span<const double> outcome) {
        return std::abs(outcome[0]) * normal.pdf(outcome[0]);
      };
      auto second_half = [](std::span<double> outcome, CountingRng&) {
        outcome[1] = outcome[0];
      };
      return SoftRejectionSample(problem, q, normal.pdf(1.0), rng, second_half);
    }
    case BorelVariant::kIndicator: {
      const std::uint64_t before = rng.calls();
      const double z = SampleStandardNormal(rng);
      return {{z, z}, 1, rng.calls() - before};
    }
  }
  Invalid("unknown Borel variant");
}

double BorelConditionalCdf(BorelVariant variant, double v) {
  switch (variant) {
    case BorelVariant::kDifference:
      return 0.5 * std::erfc(-v);  // Phi(v * sqrt 2)
    case BorelVariant::kRatio:
      return v < 0.0 ? 0.5 * std::exp(-v * v) : 1.0 - 0.5 * std::exp(-v * v);
    case BorelVariant::kIndicator:
      return 0.5 * std::erfc(-v / std::numbers::sqrt2);
  }
  Invalid("unknown Borel variant");
}

}  // namespace pdc
