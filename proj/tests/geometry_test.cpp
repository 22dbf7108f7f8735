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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "core/errors.hpp"
#include "verify/stats.hpp"

namespace pdc {
namespace {

template <typename F>
void ExpectError(F&& f, ErrorCode code) {
  try {
    f();
    ADD_FAILURE() << "expected " << ToString(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

double Sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

double AcceptRate(std::uint64_t samples, std::uint64_t attempts) {
  return static_cast<double>(samples) / static_cast<double>(attempts);
}

// Binomial standard error of an acceptance-rate estimate.
double RateTolerance(double p, std::uint64_t attempts) {
  return 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(attempts));
}

TEST(ExponentialSum, TwoCoordinateAcceptance) {
  // P(accept) = int_0^2 e^{-x} e^{-(2-x)} dx = 2 e^{-2}.
  const std::vector<double> rates = {1.0, 1.0};
  CountingRng rng(1);
  std::uint64_t attempts = 0;
  const std::uint64_t n = 50000;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto r = SampleExponentialSum(rates, 2.0, 1, rng);
    attempts += r.attempts;
    EXPECT_NEAR(Sum(r.outcome), 2.0, 1e-9);
    EXPECT_GT(r.outcome[1], 0.0);
  }
  const double expected = 2.0 * std::exp(-2.0);
  EXPECT_NEAR(AcceptRate(n, attempts), expected, RateTolerance(expected, attempts));
}

TEST(ExponentialSum, SingleCoordinateIsForced) {
  CountingRng rng(2);
  std::uint64_t attempts = 0;
  for (int i = 0; i < 20000; ++i) {
    const auto r = SampleExponentialSum(std::vector<double>{0.5}, 1.5, 0, rng);
    ASSERT_EQ(r.outcome, (Outcome{1.5}));
    attempts += r.attempts;
  }
  const double expected = std::exp(-0.75);
  EXPECT_NEAR(AcceptRate(20000, attempts), expected, RateTolerance(expected, attempts));
}

TEST(ExponentialSum, MatchesUniformSpacings) {
  const std::vector<double> rates = {1.0, 1.0, 1.0};
  CountingRng rng(3);
  std::vector<double> a;
  std::vector<double> b;
  for (int i = 0; i < 20000; ++i) {
    a.push_back(SampleExponentialSum(rates, 1.0, 2, rng).outcome[0]);
    b.push_back(UniformSpacings(2, rng)[0]);
  }
  EXPECT_GT(KsTwoSample(a, b).p_value, 1e-3);
  // First spacing of two uniforms is Beta(1,2).
  EXPECT_GT(KsOneSample(a, [](double x) { return 1.0 - (1.0 - x) * (1.0 - x); }).p_value, 1e-3);
}

TEST(ExponentialSum, RejectsBadInput) {
  CountingRng rng(1);
  ExpectError([&] { SampleExponentialSum(std::vector<double>{1.0}, 0.0, 0, rng); },
              ErrorCode::kInvalidArgument);
  ExpectError([&] { SampleExponentialSum(std::vector<double>{1.0, 1.0}, 1.0, 2, rng); },
              ErrorCode::kInvalidArgument);
}

TEST(BetaSum, TwoBetasAcceptance) {
  // P(accept) = int 6x(1-x) 6(1-x)x / 1.5 dx = 24 B(3,3) = 0.8.
  const std::vector<double> ab = {2.0, 2.0};
  CountingRng rng(4);
  std::uint64_t attempts = 0;
  const std::uint64_t n = 50000;
  std::vector<double> first;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto r = SampleBetaSum(ab, ab, 1.0, std::nullopt, rng);
    attempts += r.attempts;
    ASSERT_NEAR(Sum(r.outcome), 1.0, 1e-9);
    first.push_back(r.outcome[0]);
  }
  EXPECT_NEAR(AcceptRate(n, attempts), 0.8, RateTolerance(0.8, attempts));
  // Conditional density of X_1 is proportional to x^2 (1-x)^2, i.e. Beta(3,3).
  auto beta33 = [](double x) { return x * x * x * (10.0 - 15.0 * x + 6.0 * x * x); };
  EXPECT_GT(KsOneSample(first, beta33).p_value, 1e-3);
}

TEST(BetaSum, NeedsABoundedDensity) {
  CountingRng rng(1);
  const std::vector<double> a = {0.5, 1.0};
  const std::vector<double> b = {2.0, 0.5};
  ExpectError([&] { SampleBetaSum(a, b, 1.0, std::nullopt, rng); }, ErrorCode::kUnboundedDensity);
  ExpectError([&] { SampleBetaSum(a, b, 1.0, std::size_t{0}, rng); },
              ErrorCode::kUnboundedDensity);
}

TEST(Hypersimplex, AcceptanceAndMembership) {
  CountingRng rng(5);
  std::uint64_t attempts = 0;
  const std::uint64_t n = 100000;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto r = SampleHypersimplex(3, 1.5, rng);
    attempts += r.attempts;
    ASSERT_NEAR(Sum(r.outcome), 1.5, 1e-9);
    for (double v : r.outcome) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
    }
  }
  EXPECT_NEAR(AcceptRate(n, attempts), 0.75, 0.01);
}

TEST(Hypersimplex, SegmentIsUniform) {
  CountingRng rng(6);
  std::vector<double> first;
  for (int i = 0; i < 20000; ++i) {
    const auto r = SampleHypersimplex(2, 1.0, rng);
    ASSERT_NEAR(r.outcome[0] + r.outcome[1], 1.0, 1e-12);
    first.push_back(r.outcome[0]);
  }
  EXPECT_GT(KsOneSample(first, [](double x) { return std::clamp(x, 0.0, 1.0); }).p_value, 1e-3);
}

TEST(Hypersimplex, FullCornerHitsTheGuard) {
  CountingRng rng(7);
  ExpectError([&] { SampleHypersimplex(3, 3.0, rng, {1000}); }, ErrorCode::kNonTerminating);
}

TEST(Rado, Examples) {
  EXPECT_TRUE(RadoCheck(std::vector<double>{1, 2, 3}));
  EXPECT_TRUE(RadoCheck(std::vector<double>{3, 1, 2}));
  EXPECT_FALSE(RadoCheck(std::vector<double>{4, 4, 1, 1}));
  for (int n : {2, 5, 9}) {
    EXPECT_TRUE(RadoCheck(std::vector<double>(n, (n + 1) / 2.0)));
  }
}

TEST(Permutahedron, Membership) {
  CountingRng rng(8);
  for (std::int64_t n : {3, 5, 7}) {
    for (int i = 0; i < 200; ++i) {
      const auto r = SamplePermutahedron(n, rng);
      ASSERT_EQ(r.outcome.size(), static_cast<std::size_t>(n));
      EXPECT_TRUE(RadoCheck(r.outcome));
      EXPECT_NEAR(Sum(r.outcome), n * (n + 1) / 2.0, 1e-9);
    }
  }
  ExpectError([&] { SamplePermutahedron(1, rng); }, ErrorCode::kInvalidArgument);
}

TEST(Permutahedron, SegmentIsUniform) {
  CountingRng rng(9);
  std::vector<double> first;
  for (int i = 0; i < 20000; ++i) first.push_back(SamplePermutahedron(2, rng).outcome[0]);
  EXPECT_GT(KsOneSample(first, [](double x) { return std::clamp(x - 1.0, 0.0, 1.0); }).p_value,
            1e-3);
}

TEST(Permutahedron, RadoAcceptanceShrinksWithDimension) {
  auto rate = [](std::int64_t n) {
    CountingRng rng(static_cast<std::uint64_t>(100 + n));
    std::uint64_t attempts = 0;
    const std::uint64_t samples = 300;
    for (std::uint64_t i = 0; i < samples; ++i) attempts += SamplePermutahedron(n, rng).attempts;
    return AcceptRate(samples, attempts);
  };
  const double r4 = rate(4);
  const double r6 = rate(6);
  const double r8 = rate(8);
  EXPECT_GT(r4, r6);
  EXPECT_GT(r6, r8);
}

TEST(Spacings, SmallCases) {
  CountingRng rng(10);
  EXPECT_EQ(UniformSpacings(0, rng), (std::vector<double>{1.0}));
  std::vector<double> first;
  for (int i = 0; i < 20000; ++i) {
    const auto s = UniformSpacings(1, rng);
    ASSERT_NEAR(s[0] + s[1], 1.0, 1e-12);
    first.push_back(s[0]);
  }
  EXPECT_GT(KsOneSample(first, [](double x) { return std::clamp(x, 0.0, 1.0); }).p_value, 1e-3);
}

TEST(Spacings, SecondOrderStatisticIsBeta23) {
  CountingRng rng(11);
  std::vector<double> u2;
  for (int i = 0; i < 100000; ++i) {
    const auto s = UniformSpacings(4, rng);
    ASSERT_EQ(s.size(), 5u);
    ASSERT_NEAR(Sum(s), 1.0, 1e-12);
    u2.push_back(s[0] + s[1]);
  }
  // Beta(2,3) cdf: 6x^2 - 8x^3 + 3x^4.
  auto cdf = [](double x) { return x * x * (6.0 - 8.0 * x + 3.0 * x * x); };
  EXPECT_GT(KsOneSample(u2, cdf).p_value, 1e-3);
}

TEST(Polytope, SingleVertexAndSegment) {
  CountingRng rng(12);
  const Polytope point({{2.0, -1.0}});
  EXPECT_EQ(FellerPolytopeSample(point, rng), (std::vector<double>{2.0, -1.0}));
  const Polytope segment({{0.0}, {1.0}});
  std::vector<double> xs;
  for (int i = 0; i < 20000; ++i) xs.push_back(FellerPolytopeSample(segment, rng)[0]);
  EXPECT_GT(KsOneSample(xs, [](double x) { return std::clamp(x, 0.0, 1.0); }).p_value, 1e-3);
}

TEST(Polytope, TriangleStaysInside) {
  CountingRng rng(13);
  const Polytope triangle({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
  for (int i = 0; i < 5000; ++i) {
    const auto p = FellerPolytopeSample(triangle, rng);
    EXPECT_GE(p[0], 0.0);
    EXPECT_GE(p[1], 0.0);
    EXPECT_LE(p[0] + p[1], 1.0 + 1e-12);
  }
}

TEST(Polytope, RejectsMalformedVertices) {
  ExpectError([] { Polytope({}); }, ErrorCode::kInvalidArgument);
  ExpectError([] { Polytope({{0.0}, {1.0, 2.0}}); }, ErrorCode::kDimensionMismatch);
}

TEST(Sphere, TwoDimensionalAcceptanceAndSigns) {
  // Acceptance is E[e^{-(1 - X^2)}; X^2 <= 1] with X^2 ~ Exp(1), which is e^{-1}.
  const auto marginal = ContinuousMarginal::AbsWeightedGaussian();
  CountingRng rng(14);
  std::uint64_t attempts = 0;
  std::uint64_t positive = 0;
  const std::uint64_t n = 50000;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto r = SampleSphereSurface(marginal, 2, 1.0, 1, 1.0, rng);
    attempts += r.attempts;
    ASSERT_NEAR(r.outcome[0] * r.outcome[0] + r.outcome[1] * r.outcome[1], 1.0, 1e-9);
    positive += r.outcome[1] > 0.0 ? 1 : 0;
  }
  const double expected = std::exp(-1.0);
  EXPECT_NEAR(AcceptRate(n, attempts), expected, RateTolerance(expected, attempts));
  EXPECT_NEAR(static_cast<double>(positive) / n, 0.5, 4.0 * 0.5 / std::sqrt(n));
}

TEST(Sphere, HigherDimensionOnSurface) {
  const auto marginal = ContinuousMarginal::AbsWeightedGaussian();
  CountingRng rng(15);
  for (int i = 0; i < 2000; ++i) {
    const auto r = SampleSphereSurface(marginal, 5, 3.0, 2, 1.0, rng);
    double s = 0.0;
    for (double v : r.outcome) s += v * v;
    ASSERT_NEAR(s, 3.0, 1e-9);
  }
}

TEST(Sphere, UnderstatedBoundIsReported) {
  const auto marginal = ContinuousMarginal::AbsWeightedGaussian();
  CountingRng rng(16);
  ExpectError(
      [&] {
        for (int i = 0; i < 1000; ++i) SampleSphereSurface(marginal, 2, 1.0, 1, 0.2, rng);
      },
      ErrorCode::kInvalidRejection);
}

struct BorelCase {
  BorelVariant variant;
  double second_moment;
};

TEST(Borel, SecondMoments) {
  for (const auto& c : {BorelCase{BorelVariant::kDifference, 0.5},
                        BorelCase{BorelVariant::kRatio, 1.0},
                        BorelCase{BorelVariant::kIndicator, 1.0}}) {
    CountingRng rng(17);
    const int n = 100000;
    double m2 = 0.0;
    double m4 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double v = BorelConditionalSample(c.variant, rng).outcome[1];
      m2 += v * v;
      m4 += v * v * v * v;
    }
    m2 /= n;
    m4 /= n;
    EXPECT_NEAR(m2, c.second_moment, 3.0 * std::sqrt((m4 - m2 * m2) / n))
        << static_cast<int>(c.variant);
  }
}

TEST(Borel, VariantsMatchTheirCdfsAndDiffer) {
  std::vector<std::vector<double>> draws(3);
  for (int v = 1; v <= 3; ++v) {
    CountingRng rng(static_cast<std::uint64_t>(20 + v));
    const auto variant = static_cast<BorelVariant>(v);
    for (int i = 0; i < 100000; ++i) {
      draws[v - 1].push_back(BorelConditionalSample(variant, rng).outcome[1]);
    }
    const auto ks = KsOneSample(draws[v - 1], [&](double x) {
      return BorelConditionalCdf(variant, x);
    });
    EXPECT_GT(ks.p_value, 1e-3) << v;
  }
  EXPECT_LT(KsTwoSample(draws[0], draws[1]).p_value, 1e-6);
  EXPECT_LT(KsTwoSample(draws[0], draws[2]).p_value, 1e-6);
  EXPECT_LT(KsTwoSample(draws[1], draws[2]).p_value, 1e-6);
}

TEST(Borel, CdfClosedForms) {
  EXPECT_NEAR(BorelConditionalCdf(BorelVariant::kDifference, 0.0), 0.5, 1e-15);
  EXPECT_NEAR(BorelConditionalCdf(BorelVariant::kRatio, -1.0), 0.5 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(BorelConditionalCdf(BorelVariant::kIndicator, 1.0), 0.841344746068543, 1e-12);
}

TEST(IntervalUnion, Validation) {
  ExpectError([] { IntervalUnion({}); }, ErrorCode::kInvalidArgument);
  ExpectError([] { IntervalUnion({{1.0, 1.0}}); }, ErrorCode::kInvalidArgument);
  ExpectError([] { IntervalUnion({{0.0, 2.0}, {1.0, 3.0}}); }, ErrorCode::kInvalidArgument);
  const IntervalUnion g({{2.0, 3.0}, {-1.0, 0.0}});
  EXPECT_EQ(g.intervals().front().lo, -1.0);
  EXPECT_FALSE(g.Contains(0.0));
  EXPECT_TRUE(g.Contains(2.5));
  EXPECT_TRUE(g.AdmitsPairAtDistance(2.5));
  EXPECT_FALSE(g.AdmitsPairAtDistance(10.0));
}

}  // namespace
}  // namespace pdc
