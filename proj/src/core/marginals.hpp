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

// One-dimensional laws with exact pmf/pdf, closed-form maximal point mass or
// density supremum, and counted sampling. The catalog is closed on purpose:
// every kind has an exact max_pmf / sup_pdf.

#ifndef PDC_CORE_MARGINALS_HPP_
#define PDC_CORE_MARGINALS_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <variant>

#include "core/rng.hpp"

namespace pdc {

struct Mode {
  std::int64_t argmax;
  double probability;
};

class DiscreteMarginal {
 public:
  enum class Kind {
    kGeometric,
    kPoisson,
    kBernoulli,
    kBinomial,
    kNegativeBinomial,
    kUniformInt,
    kSignedUnit,
  };

  // pmf(k) = ratio^k (1 - ratio), k >= 0. The ratio, not the success
  // probability, is the argument. ratio == 0 (underflowed tilt) is accepted
  // and gives a point mass at 0.
  static DiscreteMarginal Geometric(double ratio);
  static DiscreteMarginal Poisson(double rate);
  static DiscreteMarginal Bernoulli(double success);
  static DiscreteMarginal Binomial(std::int64_t trials, double success);
  // Sum of `shape` iid Geometric(ratio):
  // pmf(k) = C(shape+k-1, k) (1-ratio)^shape ratio^k.
  static DiscreteMarginal NegativeBinomial(std::int64_t shape, double ratio);
  static DiscreteMarginal UniformInt(std::int64_t lo, std::int64_t hi);
  static DiscreteMarginal SignedUnit();

  Kind kind() const { return kind_; }
  double pmf(std::int64_t k) const;
  double log_pmf(std::int64_t k) const;
  Mode max_pmf() const;

  // Inversion by sequential cdf accumulation; exactly one uniform per variate.
  std::int64_t Sample(CountingRng& rng) const;

  // Support bounds; upper is INT64_MAX for unbounded kinds.
  std::int64_t support_min() const;
  std::int64_t support_max() const;
  bool InSupport(std::int64_t k) const;

  double mean() const;
  double variance() const;
  std::string Describe() const;

 private:
  DiscreteMarginal(Kind kind, double a, double b);

  Kind kind_;
  double a_;  // ratio / rate / success / trials / shape / lo
  double b_;  // success / ratio / hi
  // Cached per-kind constants for the sampler hot path.
  double log_ratio_ = 0.0;
  double log_pmf0_ = 0.0;
  double pmf0_ = 1.0;
  std::int64_t mode_ = 0;
};

class ContinuousMarginal {
 public:
  enum class Kind {
    kUniformReal,
    kExponential,
    kBeta,
    kNormal,
    kAbsWeightedGaussian,  // density |y| exp(-y^2) on the real line
  };

  static ContinuousMarginal UniformReal(double a, double b);
  static ContinuousMarginal Exponential(double rate);
  static ContinuousMarginal Beta(double alpha, double beta);
  static ContinuousMarginal Normal(double mean, double variance);
  static ContinuousMarginal AbsWeightedGaussian();

  Kind kind() const { return kind_; }
  double pdf(double y) const;
  double cdf(double y) const;
  // Throws Error(kUnboundedDensity) for Beta with alpha < 1 or beta < 1.
  double sup_pdf() const;
  double Sample(CountingRng& rng) const;

  double support_min() const;
  double support_max() const;
  double mean() const;
  double variance() const;
  std::string Describe() const;

 private:
  ContinuousMarginal(Kind kind, double a, double b);

  Kind kind_;
  double a_;
  double b_;
  double log_norm_ = 0.0;  // log of the Beta normalizing constant
};

using Marginal = std::variant<DiscreteMarginal, ContinuousMarginal>;

// Standard gamma variate (Marsaglia-Tsang); consumes a variable number of
// uniforms.
double SampleGamma(double shape, CountingRng& rng);
// Standard normal by Box-Muller, two uniforms per variate.
double SampleStandardNormal(CountingRng& rng);

}  // namespace pdc

#endif  // PDC_CORE_MARGINALS_HPP_
