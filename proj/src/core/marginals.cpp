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

#include "core/marginals.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/beta.hpp>

#include "core/errors.hpp"

namespace pdc {
namespace {

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();
constexpr double kTinyMass = 1e-300;

void Require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

double LogChoose(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

// ---------------------------------------------------------------------------
// DiscreteMarginal

DiscreteMarginal::DiscreteMarginal(Kind kind, double a, double b)
    : kind_(kind), a_(a), b_(b) {
  switch (kind_) {
    case Kind::kGeometric:
      log_ratio_ = a_ > 0.0 ? std::log(a_) : -INFINITY;
      break;
    case Kind::kPoisson:
      log_pmf0_ = -a_;
      break;
    case Kind::kBinomial:
      log_pmf0_ = b_ < 1.0 ? a_ * std::log1p(-b_) : (a_ == 0.0 ? 0.0 : -INFINITY);
      break;
    case Kind::kNegativeBinomial:
      log_ratio_ = b_ > 0.0 ? std::log(b_) : -INFINITY;
      log_pmf0_ = a_ * std::log1p(-b_);
      break;
    default:
      break;
  }
  mode_ = max_pmf().argmax;
  pmf0_ = std::exp(log_pmf0_);
}

DiscreteMarginal DiscreteMarginal::Geometric(double ratio) {
  Require(ratio >= 0.0 && ratio < 1.0, "Geometric ratio must lie in [0,1)");
  return DiscreteMarginal(Kind::kGeometric, ratio, 0.0);
}

DiscreteMarginal DiscreteMarginal::Poisson(double rate) {
  Require(rate > 0.0 && std::isfinite(rate), "Poisson rate must be positive");
  return DiscreteMarginal(Kind::kPoisson, rate, 0.0);
}

DiscreteMarginal DiscreteMarginal::Bernoulli(double success) {
  Require(success >= 0.0 && success <= 1.0, "Bernoulli success must lie in [0,1]");
  return DiscreteMarginal(Kind::kBernoulli, success, 0.0);
}

DiscreteMarginal DiscreteMarginal::Binomial(std::int64_t trials, double success) {
  Require(trials >= 0, "Binomial trials must be nonnegative");
  Require(success >= 0.0 && success <= 1.0, "Binomial success must lie in [0,1]");
  return DiscreteMarginal(Kind::kBinomial, static_cast<double>(trials), success);
}

DiscreteMarginal DiscreteMarginal::NegativeBinomial(std::int64_t shape, double ratio) {
  Require(shape >= 1, "NegativeBinomial shape must be >= 1");
  Require(ratio >= 0.0 && ratio < 1.0, "NegativeBinomial ratio must lie in [0,1)");
  return DiscreteMarginal(Kind::kNegativeBinomial, static_cast<double>(shape), ratio);
}

DiscreteMarginal DiscreteMarginal::UniformInt(std::int64_t lo, std::int64_t hi) {
  Require(lo <= hi, "UniformInt requires lo <= hi");
  return DiscreteMarginal(Kind::kUniformInt, static_cast<double>(lo),
                          static_cast<double>(hi));
}

DiscreteMarginal DiscreteMarginal::SignedUnit() {
  return DiscreteMarginal(Kind::kSignedUnit, 0.0, 0.0);
}

std::int64_t DiscreteMarginal::support_min() const {
  switch (kind_) {
    case Kind::kUniformInt:
      return static_cast<std::int64_t>(a_);
    case Kind::kSignedUnit:
      return -1;
    default:
      return 0;
  }
}

std::int64_t DiscreteMarginal::support_max() const {
  switch (kind_) {
    case Kind::kGeometric:
      return a_ == 0.0 ? 0 : kUnbounded;
    case Kind::kNegativeBinomial:
      return b_ == 0.0 ? 0 : kUnbounded;
    case Kind::kPoisson:
      return kUnbounded;
    case Kind::kBernoulli:
      return 1;
    case Kind::kBinomial:
      return static_cast<std::int64_t>(a_);
    case Kind::kUniformInt:
      return static_cast<std::int64_t>(b_);
    case Kind::kSignedUnit:
      return 1;
  }
  return 0;
}

bool DiscreteMarginal::InSupport(std::int64_t k) const {
  if (kind_ == Kind::kSignedUnit) return k == -1 || k == 1;
  return k >= support_min() && k <= support_max() && pmf(k) > 0.0;
}

double DiscreteMarginal::log_pmf(std::int64_t k) const {
  const double p = pmf(k);
  if (p > kTinyMass) return std::log(p);
  // Fall back to the analytic log for masses that underflow.
  const double kd = static_cast<double>(k);
  switch (kind_) {
    case Kind::kPoisson:
      return k < 0 ? -INFINITY : kd * std::log(a_) - a_ - std::lgamma(kd + 1.0);
    case Kind::kBinomial:
      if (k < 0 || kd > a_ || b_ == 0.0 || b_ == 1.0) return std::log(p);
      return LogChoose(a_, kd) + kd * std::log(b_) + (a_ - kd) * std::log1p(-b_);
    case Kind::kNegativeBinomial:
      if (k < 0 || b_ == 0.0) return std::log(p);
      return std::lgamma(a_ + kd) - std::lgamma(kd + 1.0) - std::lgamma(a_) +
             log_pmf0_ + kd * log_ratio_;
    case Kind::kGeometric:
      if (k < 0 || a_ == 0.0) return std::log(p);
      return kd * log_ratio_ + std::log1p(-a_);
    default:
      return std::log(p);
  }
}

double DiscreteMarginal::pmf(std::int64_t k) const {
  const double kd = static_cast<double>(k);
  switch (kind_) {
    case Kind::kGeometric:
      if (k < 0) return 0.0;
      if (a_ == 0.0) return k == 0 ? 1.0 : 0.0;
      return std::pow(a_, kd) * (1.0 - a_);
    case Kind::kPoisson:
      if (k < 0) return 0.0;
      return std::exp(kd * std::log(a_) - a_ - std::lgamma(kd + 1.0));
    case Kind::kBernoulli:
      return k == 1 ? a_ : (k == 0 ? 1.0 - a_ : 0.0);
    case Kind::kBinomial:
      if (k < 0 || kd > a_) return 0.0;
      if (b_ == 0.0) return k == 0 ? 1.0 : 0.0;
      if (b_ == 1.0) return kd == a_ ? 1.0 : 0.0;
      return std::exp(LogChoose(a_, kd) + kd * std::log(b_) + (a_ - kd) * std::log1p(-b_));
    case Kind::kNegativeBinomial:
      if (k < 0) return 0.0;
      if (b_ == 0.0) return k == 0 ? 1.0 : 0.0;
      return std::exp(std::lgamma(a_ + kd) - std::lgamma(kd + 1.0) - std::lgamma(a_) +
                      log_pmf0_ + kd * log_ratio_);
    case Kind::kUniformInt:
      if (kd < a_ || kd > b_) return 0.0;
      return 1.0 / (b_ - a_ + 1.0);
    case Kind::kSignedUnit:
      return (k == 1 || k == -1) ? 0.5 : 0.0;
  }
  return 0.0;
}

Mode DiscreteMarginal::max_pmf() const {
  std::int64_t k = 0;
  switch (kind_) {
    case Kind::kGeometric:
      k = 0;
      break;
    case Kind::kPoisson: {
      const double f = std::floor(a_);
      // Integer rate: pmf(rate-1) == pmf(rate); keep the smaller argmax.
      k = static_cast<std::int64_t>(f == a_ && f >= 1.0 ? f - 1.0 : f);
      break;
    }
    case Kind::kBernoulli:
      k = a_ > 0.5 ? 1 : 0;
      break;
    case Kind::kBinomial: {
      const double v = (a_ + 1.0) * b_;
      double f = std::floor(v);
      if (f == v && f >= 1.0) f -= 1.0;
      k = static_cast<std::int64_t>(std::min(f, a_));
      break;
    }
    case Kind::kNegativeBinomial: {
      const double v = b_ == 0.0 ? 0.0 : (a_ - 1.0) * b_ / (1.0 - b_);
      double f = std::floor(v);
      if (f == v && f >= 1.0) f -= 1.0;
      k = static_cast<std::int64_t>(f);
      break;
    }
    case Kind::kUniformInt:
      k = static_cast<std::int64_t>(a_);
      break;
    case Kind::kSignedUnit:
      k = -1;
      break;
  }
  return {k, pmf(k)};
}

std::int64_t DiscreteMarginal::Sample(CountingRng& rng) const {
  const double u = rng.Uniform();
  switch (kind_) {
    case Kind::kGeometric:
      // P(K >= j) = ratio^j; K >= 1 iff u <= ratio.
      if (u > a_) return 0;
      return static_cast<std::int64_t>(std::floor(std::log(u) / log_ratio_));
    case Kind::kBernoulli:
      return u < a_ ? 1 : 0;
    case Kind::kUniformInt: {
      const double width = b_ - a_ + 1.0;
      const auto offset = static_cast<std::int64_t>(u * width);
      return static_cast<std::int64_t>(a_) + std::min<std::int64_t>(
                                                 offset, static_cast<std::int64_t>(width) - 1);
    }
    case Kind::kSignedUnit:
      return u < 0.5 ? -1 : 1;
    case Kind::kBinomial:
      if (b_ == 0.0) return 0;
      if (b_ == 1.0) return static_cast<std::int64_t>(a_);
      break;
    case Kind::kNegativeBinomial:
      if (b_ == 0.0) return 0;
      break;
    case Kind::kPoisson:
      break;
  }

  // Sequential cdf accumulation for Poisson, Binomial, NegativeBinomial.
  double p = pmf0_;
  if (u <= p) return 0;
  const std::int64_t mode = mode_;
  const std::int64_t upper = support_max();
  std::int64_t k = 0;
  const bool recurrence = p > kTinyMass;
  double cumulative = p;
  while (u > cumulative && k < upper) {
    const double kd = static_cast<double>(k);
    if (recurrence) {
      switch (kind_) {
        case Kind::kPoisson:
          p *= a_ / (kd + 1.0);
          break;
        case Kind::kBinomial:
          p *= (a_ - kd) / (kd + 1.0) * b_ / (1.0 - b_);
          break;
        default:
          p *= (a_ + kd) / (kd + 1.0) * b_;
          break;
      }
      ++k;
    } else {
      ++k;
      p = pmf(k);
    }
    cumulative += p;
    // Rounding can leave the cdf a hair below u; stop in the far tail.
    if (k > mode && p < kTinyMass) break;
  }
  return k;
}

double DiscreteMarginal::mean() const {
  switch (kind_) {
    case Kind::kGeometric:
      return a_ / (1.0 - a_);
    case Kind::kPoisson:
      return a_;
    case Kind::kBernoulli:
      return a_;
    case Kind::kBinomial:
      return a_ * b_;
    case Kind::kNegativeBinomial:
      return a_ * b_ / (1.0 - b_);
    case Kind::kUniformInt:
      return 0.5 * (a_ + b_);
    case Kind::kSignedUnit:
      return 0.0;
  }
  return 0.0;
}

double DiscreteMarginal::variance() const {
  switch (kind_) {
    case Kind::kGeometric:
      return a_ / ((1.0 - a_) * (1.0 - a_));
    case Kind::kPoisson:
      return a_;
    case Kind::kBernoulli:
      return a_ * (1.0 - a_);
    case Kind::kBinomial:
      return a_ * b_ * (1.0 - b_);
    case Kind::kNegativeBinomial:
      return a_ * b_ / ((1.0 - b_) * (1.0 - b_));
    case Kind::kUniformInt: {
      const double w = b_ - a_ + 1.0;
      return (w * w - 1.0) / 12.0;
    }
    case Kind::kSignedUnit:
      return 1.0;
  }
  return 0.0;
}

std::string DiscreteMarginal::Describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kGeometric: os << "Geometric(" << a_ << ")"; break;
    case Kind::kPoisson: os << "Poisson(" << a_ << ")"; break;
    case Kind::kBernoulli: os << "Bernoulli(" << a_ << ")"; break;
    case Kind::kBinomial: os << "Binomial(" << a_ << ", " << b_ << ")"; break;
    case Kind::kNegativeBinomial: os << "NegativeBinomial(" << a_ << ", " << b_ << ")"; break;
    case Kind::kUniformInt: os << "UniformInt(" << a_ << ", " << b_ << ")"; break;
    case Kind::kSignedUnit: os << "SignedUnit"; break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// ContinuousMarginal

ContinuousMarginal::ContinuousMarginal(Kind kind, double a, double b)
    : kind_(kind), a_(a), b_(b) {
  if (kind_ == Kind::kBeta) {
    log_norm_ = std::lgamma(a_ + b_) - std::lgamma(a_) - std::lgamma(b_);
  }
}

ContinuousMarginal ContinuousMarginal::UniformReal(double a, double b) {
  Require(a < b, "UniformReal requires a < b");
  return ContinuousMarginal(Kind::kUniformReal, a, b);
}

ContinuousMarginal ContinuousMarginal::Exponential(double rate) {
  Require(rate > 0.0, "Exponential rate must be positive");
  return ContinuousMarginal(Kind::kExponential, rate, 0.0);
}

ContinuousMarginal ContinuousMarginal::Beta(double alpha, double beta) {
  Require(alpha > 0.0 && beta > 0.0, "Beta parameters must be positive");
  return ContinuousMarginal(Kind::kBeta, alpha, beta);
}

ContinuousMarginal ContinuousMarginal::Normal(double mean, double variance) {
  Require(variance > 0.0, "Normal variance must be positive");
  return ContinuousMarginal(Kind::kNormal, mean, variance);
}

ContinuousMarginal ContinuousMarginal::AbsWeightedGaussian() {
  return ContinuousMarginal(Kind::kAbsWeightedGaussian, 0.0, 0.0);
}

double ContinuousMarginal::support_min() const {
  switch (kind_) {
    case Kind::kUniformReal: return a_;
    case Kind::kExponential: return 0.0;
    case Kind::kBeta: return 0.0;
    default: return -INFINITY;
  }
}

double ContinuousMarginal::support_max() const {
  switch (kind_) {
    case Kind::kUniformReal: return b_;
    case Kind::kBeta: return 1.0;
    default: return INFINITY;
  }
}

double ContinuousMarginal::pdf(double y) const {
  switch (kind_) {
    case Kind::kUniformReal:
      return (y >= a_ && y <= b_) ? 1.0 / (b_ - a_) : 0.0;
    case Kind::kExponential:
      return y >= 0.0 ? a_ * std::exp(-a_ * y) : 0.0;
    case Kind::kBeta:
      if (y < 0.0 || y > 1.0) return 0.0;
      return std::exp(log_norm_) * std::pow(y, a_ - 1.0) * std::pow(1.0 - y, b_ - 1.0);
    case Kind::kNormal: {
      const double z = y - a_;
      return std::exp(-0.5 * z * z / b_) / std::sqrt(2.0 * std::numbers::pi * b_);
    }
    case Kind::kAbsWeightedGaussian:
      return std::abs(y) * std::exp(-y * y);
  }
  return 0.0;
}

double ContinuousMarginal::cdf(double y) const {
  switch (kind_) {
    case Kind::kUniformReal:
      if (y <= a_) return 0.0;
      if (y >= b_) return 1.0;
      return (y - a_) / (b_ - a_);
    case Kind::kExponential:
      return y <= 0.0 ? 0.0 : -std::expm1(-a_ * y);
    case Kind::kBeta:
      if (y <= 0.0) return 0.0;
      if (y >= 1.0) return 1.0;
      return boost::math::ibeta(a_, b_, y);
    case Kind::kNormal:
      return 0.5 * std::erfc(-(y - a_) / std::sqrt(2.0 * b_));
    case Kind::kAbsWeightedGaussian:
      return y < 0.0 ? 0.5 * std::exp(-y * y) : 1.0 - 0.5 * std::exp(-y * y);
  }
  return 0.0;
}

double ContinuousMarginal::sup_pdf() const {
  switch (kind_) {
    case Kind::kUniformReal:
      return 1.0 / (b_ - a_);
    case Kind::kExponential:
      return a_;
    case Kind::kBeta: {
      if (a_ < 1.0 || b_ < 1.0) {
        throw Error(ErrorCode::kUnboundedDensity,
                    "Beta density is unbounded when alpha < 1 or beta < 1");
      }
      if (a_ == 1.0 && b_ == 1.0) return 1.0;
      return pdf((a_ - 1.0) / (a_ + b_ - 2.0));
    }
    case Kind::kNormal:
      return 1.0 / std::sqrt(2.0 * std::numbers::pi * b_);
    case Kind::kAbsWeightedGaussian:
      return std::exp(-0.5) / std::sqrt(2.0);
  }
  return 0.0;
}

double ContinuousMarginal::Sample(CountingRng& rng) const {
  switch (kind_) {
    case Kind::kUniformReal:
      return a_ + (b_ - a_) * rng.Uniform();
    case Kind::kExponential:
      return -std::log(rng.Uniform()) / a_;
    case Kind::kBeta: {
      const double g1 = SampleGamma(a_, rng);
      const double g2 = SampleGamma(b_, rng);
      return g1 / (g1 + g2);
    }
    case Kind::kNormal:
      return a_ + std::sqrt(b_) * SampleStandardNormal(rng);
    case Kind::kAbsWeightedGaussian: {
      // Y^2 ~ Exponential(1), sign symmetric.
      const double magnitude = std::sqrt(-std::log(rng.Uniform()));
      return rng.Uniform() < 0.5 ? -magnitude : magnitude;
    }
  }
  return 0.0;
}

double ContinuousMarginal::mean() const {
  switch (kind_) {
    case Kind::kUniformReal: return 0.5 * (a_ + b_);
    case Kind::kExponential: return 1.0 / a_;
    case Kind::kBeta: return a_ / (a_ + b_);
    case Kind::kNormal: return a_;
    case Kind::kAbsWeightedGaussian: return 0.0;
  }
  return 0.0;
}

double ContinuousMarginal::variance() const {
  switch (kind_) {
    case Kind::kUniformReal: return (b_ - a_) * (b_ - a_) / 12.0;
    case Kind::kExponential: return 1.0 / (a_ * a_);
    case Kind::kBeta: {
      const double s = a_ + b_;
      return a_ * b_ / (s * s * (s + 1.0));
    }
    case Kind::kNormal: return b_;
    case Kind::kAbsWeightedGaussian: return 1.0;
  }
  return 0.0;
}

std::string ContinuousMarginal::Describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kUniformReal: os << "UniformReal(" << a_ << ", " << b_ << ")"; break;
    case Kind::kExponential: os << "Exponential(" << a_ << ")"; break;
    case Kind::kBeta: os << "Beta(" << a_ << ", " << b_ << ")"; break;
    case Kind::kNormal: os << "Normal(" << a_ << ", " << b_ << ")"; break;
    case Kind::kAbsWeightedGaussian: os << "AbsWeightedGaussian"; break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

double SampleStandardNormal(CountingRng& rng) {
  const double u1 = rng.Uniform();
  const double u2 = rng.Uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double SampleGamma(double shape, CountingRng& rng) {
  if (shape < 1.0) {
    const double g = SampleGamma(shape + 1.0, rng);
    return g * std::pow(rng.Uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double x = SampleStandardNormal(rng);
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = rng.Uniform();
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
  }
}

}  // namespace pdc
