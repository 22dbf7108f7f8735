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

#ifndef PDC_CORE_GEOMETRY_HPP_
#define PDC_CORE_GEOMETRY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/engine.hpp"

namespace pdc {

struct OpenInterval {
  double lo;
  double hi;
};

// Finite union of disjoint open intervals; endpoints may be infinite.
class IntervalUnion {
 public:
  // Sorts the intervals; throws Error(kInvalidArgument) if empty, if some
  // lo >= hi, or if two intervals overlap.
  explicit IntervalUnion(std::vector<OpenInterval> intervals);
  static IntervalUnion WholeLine();

  bool Contains(double v) const;
  // True when some v and v + distance both lie in the union.
  bool AdmitsPairAtDistance(double distance) const;
  const std::vector<OpenInterval>& intervals() const { return intervals_; }

 private:
  std::vector<OpenInterval> intervals_;
};

// Convex hull of its vertices; all vertices share one dimension.
class Polytope {
 public:
  explicit Polytope(std::vector<std::vector<double>> vertices);

  std::size_t dimension() const { return vertices_.front().size(); }
  const std::vector<std::vector<double>>& vertices() const { return vertices_; }

 private:
  std::vector<std::vector<double>> vertices_;
};

// (X | sum X = k) for independent Exponential(rates[j]); completes `index`.
SampleRecord SampleExponentialSum(std::span<const double> rates, double k, std::size_t index,
                                  CountingRng& rng, const SamplerOptions& options = {});

// (X | sum X = k) for independent Beta(alphas[j], betas[j]). Completes
// `index`, or the first coordinate with alpha > 1 and beta > 1 when absent.
// Throws Error(kUnboundedDensity) when the chosen coordinate's density is
// unbounded or no bounded coordinate exists.
SampleRecord SampleBetaSum(std::span<const double> alphas, std::span<const double> betas,
                           double k, std::optional<std::size_t> index, CountingRng& rng,
                           const SamplerOptions& options = {});

// Uniform point of {x in [0,1]^n : sum x = k}; the last coordinate is the
// completed one.
SampleRecord SampleHypersimplex(std::int64_t n, double k, CountingRng& rng,
                                const SamplerOptions& options = {});

// Rado's condition on the descending-sorted coordinates; the top-j sums are
// compared with 1e-9 relative slack.
bool RadoCheck(std::span<const double> point);

// Uniform point of the permutahedron: scaled hypersimplex on [1,n]^n with sum
// n(n+1)/2, hard-rejected on Rado's condition. `attempts` counts hypersimplex
// proposals; rng_calls includes the inner completability loop.
SampleRecord SamplePermutahedron(std::int64_t n, CountingRng& rng,
                                 const SamplerOptions& options = {});

// m+1 gaps of m sorted uniforms on [0,1] (m uniforms).
std::vector<double> UniformSpacings(std::int64_t m, CountingRng& rng);

// sum_i y_i v_i with y the uniform spacings of m-1 uniforms.
std::vector<double> FellerPolytopeSample(const Polytope& polytope, CountingRng& rng);

// (X | sum X_j^2 = k) for iid `marginal`. `sup_bound` must bound the density
// of X^2. Completes `index` up to sign; the sign is drawn in proportion to
// f(+sqrt t) : f(-sqrt t).
SampleRecord SampleSphereSurface(const ContinuousMarginal& marginal, std::int64_t n, double k,
                                 std::size_t index, double sup_bound, CountingRng& rng,
                                 const SamplerOptions& options = {});

enum class BorelVariant { kDifference = 1, kRatio = 2, kIndicator = 3 };

// V given U = V for standard normals U, V under three conditionings:
//   kDifference  T = U - V = 0    -> density exp(-v^2)/sqrt(pi)
//   kRatio       T = V / U = 1    -> density |v| exp(-v^2)
//   kIndicator   T = 1(U = V) = 1 -> standard normal
// The record outcome is (u, v); the conditioned value is outcome[1].
SampleRecord BorelConditionalSample(BorelVariant variant, CountingRng& rng);

// Closed-form cdf of each variant's conditional law.
double BorelConditionalCdf(BorelVariant variant, double v);

}  // namespace pdc

#endif  // PDC_CORE_GEOMETRY_HPP_
