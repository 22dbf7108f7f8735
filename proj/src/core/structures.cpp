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

#include "core/structures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <tuple>

#include "core/errors.hpp"

namespace pdc {
namespace {

constexpr double kApery = 1.2020569031595942;  // zeta(3)

[[noreturn]] void InvalidFamily(const std::string& what) {
  throw Error(ErrorCode::kInvalidFamily, what);
}

std::size_t ArgminMaxPmf(const std::vector<Marginal>& marginals) {
  std::size_t best = 0;
  double best_mass = 2.0;
  for (std::size_t i = 0; i < marginals.size(); ++i) {
    const double mass = std::get<DiscreteMarginal>(marginals[i]).max_pmf().probability;
    if (mass < best_mass) {
      best_mass = mass;
      best = i;
    }
  }
  return best;
}

std::vector<std::int64_t> ColorsOrOnes(const StructureFamily& f) {
  if (!f.colors) return std::vector<std::int64_t>(static_cast<std::size_t>(f.n), 1);
  const auto& m = *f.colors;
  if (m.empty()) InvalidFamily("color counts must not be empty");
  if (static_cast<std::int64_t>(m.size()) != f.n) {
    InvalidFamily("color counts must have one entry per component size");
  }
  if (std::any_of(m.begin(), m.end(), [](std::int64_t v) { return v <= 0; })) {
    InvalidFamily("color counts must be positive");
  }
  return m;
}

// Spreads `total` balls over `slots` cells uniformly over weak compositions:
// choose the ball positions among total + slots - 1 places (Floyd's
// algorithm, `total` uniforms); a ball's cell is the number of bars before it.
std::vector<std::int64_t> UniformComposition(std::int64_t total, std::int64_t slots,
                                             CountingRng& rng) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(slots), 0);
  if (slots == 1) {
    counts[0] = total;
    return counts;
  }
  const std::int64_t places = total + slots - 1;
  std::vector<std::int64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(total));
  for (std::int64_t j = places - total; j < places; ++j) {
    const auto t = static_cast<std::int64_t>(rng.UniformIndex(static_cast<std::uint64_t>(j + 1)));
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
      chosen.push_back(t);
    } else {
      chosen.push_back(j);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  for (std::size_t r = 0; r < chosen.size(); ++r) {
    ++counts[static_cast<std::size_t>(chosen[r] - static_cast<std::int64_t>(r))];
  }
  return counts;
}

}  // namespace

std::int64_t PlaneGrid::Weight() const {
  std::int64_t w = 0;
  for (const GridCell& c : cells) w += (c.row + c.col + 1) * c.count;
  return w;
}

const char* ToString(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kPartition: return "partition";
    case FamilyKind::kDistinctPartition: return "distinct";
    case FamilyKind::kSelection: return "selection";
    case FamilyKind::kMultiset: return "multiset";
    case FamilyKind::kAssembly: return "assembly";
    case FamilyKind::kSetPartition: return "setpartition";
    case FamilyKind::kPlanePartitionGrid: return "plane";
    case FamilyKind::kEwensProfile: return "ewens";
  }
  return "unknown";
}

std::optional<FamilyKind> ParseFamilyKind(std::string_view name) {
  for (auto kind : {FamilyKind::kPartition, FamilyKind::kDistinctPartition,
                    FamilyKind::kSelection, FamilyKind::kMultiset, FamilyKind::kAssembly,
                    FamilyKind::kSetPartition, FamilyKind::kPlanePartitionGrid,
                    FamilyKind::kEwensProfile}) {
    if (name == ToString(kind)) return kind;
  }
  return std::nullopt;
}

double SolveTilt(FamilyKind kind, std::int64_t n) {
  if (n < 1) InvalidFamily("size must be at least 1");
  const double nd = static_cast<double>(n);
  switch (kind) {
    case FamilyKind::kPartition:
    case FamilyKind::kDistinctPartition:
    case FamilyKind::kSelection:
    case FamilyKind::kMultiset:
      return std::exp(-std::numbers::pi / (std::sqrt(6.0) * std::sqrt(nd)));
    case FamilyKind::kAssembly:
    case FamilyKind::kSetPartition: {
      // Newton on g(x) = x e^x - n; g is convex and increasing on x > 0.
      double x = std::log(nd + 1.0);
      for (int it = 0; it < 100; ++it) {
        const double ex = std::exp(x);
        const double step = (x * ex - nd) / ((x + 1.0) * ex);
        x -= step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, x)) break;
      }
      return x;
    }
    case FamilyKind::kPlanePartitionGrid: {
      const double x = 1.0 - std::cbrt(2.0 * kApery / nd);
      return std::clamp(x, 0.01, 1.0 - 1e-12);
    }
    case FamilyKind::kEwensProfile:
      return std::exp(-1.0 / nd);
  }
  return 0.5;
}

StructureProblem::StructureProblem(StructureFamily family, ConditioningProblem problem,
                                   double tilt,
                                   std::vector<std::pair<std::int64_t, std::int64_t>> cells)
    : family_(std::move(family)),
      problem_(std::move(problem)),
      tilt_(tilt),
      cells_(std::move(cells)) {}

StructureProblem BuildProblem(const StructureFamily& family) {
  const std::int64_t n = family.n;
  if (n < 1) InvalidFamily("size must be at least 1");
  const double x = family.tilt ? *family.tilt : SolveTilt(family.kind, n);
  const bool needs_unit_tilt = family.kind != FamilyKind::kAssembly &&
                               family.kind != FamilyKind::kSetPartition &&
                               family.kind != FamilyKind::kEwensProfile;
  if (!(x > 0.0) || !std::isfinite(x) || (needs_unit_tilt && x >= 1.0)) {
    InvalidFamily("tilt outside the family's range");
  }

  std::vector<Marginal> marginals;
  std::vector<double> weights;
  std::vector<std::size_t> index;
  std::optional<SecondConstraint> second;
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;
  const double nd = static_cast<double>(n);

  switch (family.kind) {
    case FamilyKind::kPartition:
    case FamilyKind::kDistinctPartition:
    case FamilyKind::kSelection:
    case FamilyKind::kMultiset:
    case FamilyKind::kAssembly:
    case FamilyKind::kSetPartition: {
      const bool colored = family.kind == FamilyKind::kSelection ||
                           family.kind == FamilyKind::kMultiset ||
                           family.kind == FamilyKind::kAssembly;
      const auto m = colored ? ColorsOrOnes(family)
                             : std::vector<std::int64_t>(static_cast<std::size_t>(n), 1);
      double log_factorial = 0.0;
      for (std::int64_t i = 1; i <= n; ++i) {
        const double id = static_cast<double>(i);
        const double xi = std::pow(x, id);
        const std::int64_t mi = m[static_cast<std::size_t>(i - 1)];
        log_factorial += std::log(id);
        switch (family.kind) {
          case FamilyKind::kPartition:
            marginals.emplace_back(DiscreteMarginal::Geometric(xi));
            break;
          case FamilyKind::kDistinctPartition:
            marginals.emplace_back(DiscreteMarginal::Bernoulli(xi / (1.0 + xi)));
            break;
          case FamilyKind::kSelection:
            marginals.emplace_back(DiscreteMarginal::Binomial(mi, xi / (1.0 + xi)));
            break;
          case FamilyKind::kMultiset:
            marginals.emplace_back(DiscreteMarginal::NegativeBinomial(mi, xi));
            break;
          default: {
            const double rate = std::exp(std::log(static_cast<double>(mi)) +
                                         id * std::log(x) - log_factorial);
            if (!(rate > 0.0)) InvalidFamily("assembly rate underflows; reduce n or raise tilt");
            marginals.emplace_back(DiscreteMarginal::Poisson(rate));
            break;
          }
        }
        weights.push_back(id);
      }
      if (family.kind == FamilyKind::kPartition) {
        index = {0};
      } else if (family.kind == FamilyKind::kSetPartition) {
        const auto i = std::clamp<std::int64_t>(std::llround(std::log(nd)), 1, n);
        index = {static_cast<std::size_t>(i - 1)};
      } else {
        index = {ArgminMaxPmf(marginals)};
      }
      break;
    }
    case FamilyKind::kEwensProfile: {
      if (n < 2) InvalidFamily("Ewens profile needs n >= 2");
      if (family.parts < 1 || family.parts > n) InvalidFamily("part count must lie in [1, n]");
      if (!(family.theta > 0.0)) InvalidFamily("theta must be positive");
      for (std::int64_t i = 1; i <= n; ++i) {
        const double id = static_cast<double>(i);
        marginals.emplace_back(
            DiscreteMarginal::Poisson(family.theta * std::pow(x, id) / id));
        weights.push_back(id);
      }
      second = SecondConstraint{std::vector<double>(static_cast<std::size_t>(n), 1.0),
                                static_cast<double>(family.parts)};
      index = {0, 1};
      break;
    }
    case FamilyKind::kPlanePartitionGrid: {
      if (n < 3) InvalidFamily("plane grids need n >= 3 (smallest cell weight is 3)");
      if (family.plane_mode == PlaneGridMode::kAggregated) {
        for (std::int64_t w = 3; w <= n; ++w) {
          const double ratio = std::pow(x, static_cast<double>(w));
          if (w == 3) {
            marginals.emplace_back(DiscreteMarginal::Geometric(ratio));
          } else {
            marginals.emplace_back(DiscreteMarginal::NegativeBinomial(w - 2, ratio));
          }
          weights.push_back(static_cast<double>(w));
        }
      } else {
        for (std::int64_t i = 1; i <= n; ++i) {
          for (std::int64_t j = 1; j <= n; ++j) {
            const std::int64_t w = i + j + 1;
            if (family.plane_mode == PlaneGridMode::kPerCell && w > n) continue;
            marginals.emplace_back(
                DiscreteMarginal::Geometric(std::pow(x, static_cast<double>(w))));
            weights.push_back(static_cast<double>(w));
            cells.emplace_back(i, j);
          }
        }
      }
      index = {0};  // cell (1,1)
      break;
    }
  }

  ConditioningProblem problem(std::move(marginals), std::move(weights), nd, std::move(index),
                              std::move(second));
  return StructureProblem(family, std::move(problem), x, std::move(cells));
}

StructureSample StructureProblem::Materialize(std::span<const double> outcome,
                                              CountingRng& rng) const {
  if (family_.kind != FamilyKind::kPlanePartitionGrid) {
    MultiplicityVector c(outcome.size());
    for (std::size_t i = 0; i < outcome.size(); ++i) c[i] = std::llround(outcome[i]);
    return c;
  }
  PlaneGrid grid;
  grid.n = family_.n;
  if (family_.plane_mode == PlaneGridMode::kAggregated) {
    for (std::size_t j = 0; j < outcome.size(); ++j) {
      const std::int64_t total = std::llround(outcome[j]);
      if (total == 0) continue;
      const auto w = static_cast<std::int64_t>(j) + 3;
      // Cells of weight w: (i, w-1-i) for i = 1..w-2.
      const auto counts = UniformComposition(total, w - 2, rng);
      for (std::int64_t i = 1; i <= w - 2; ++i) {
        const std::int64_t c = counts[static_cast<std::size_t>(i - 1)];
        if (c > 0) grid.cells.push_back({i, w - 1 - i, c});
      }
    }
  } else {
    for (std::size_t j = 0; j < outcome.size(); ++j) {
      const std::int64_t c = std::llround(outcome[j]);
      if (c > 0) grid.cells.push_back({cells_[j].first, cells_[j].second, c});
    }
  }
  std::sort(grid.cells.begin(), grid.cells.end(), [](const GridCell& a, const GridCell& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  return grid;
}

StructureRecord SampleStructure(const StructureProblem& sp, Method method, CountingRng& rng,
                                const SamplerOptions& options) {
  const std::uint64_t before = rng.calls();
  SampleRecord record;
  switch (method) {
    case Method::kHard:
      record = HardRejectionSample(sp.problem(), rng, options);
      break;
    case Method::kDsh:
      record = DshDiscreteSample(sp.problem(), rng, options);
      break;
    case Method::kSoft:
      record = SoftRejectionWithCompletion(sp.problem(), rng, options);
      break;
  }
  StructureRecord out;
  out.sample = sp.Materialize(record.outcome, rng);
  out.outcome = std::move(record.outcome);
  out.attempts = record.attempts;
  out.rng_calls = rng.calls() - before;
  return out;
}

MultiplicityVector FellerPermutationCycles(std::int64_t n, CountingRng& rng) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "permutation size must be >= 1");
  MultiplicityVector c(static_cast<std::size_t>(n), 0);
  std::int64_t open = 0;
  for (std::int64_t step = 1; step <= n; ++step) {
    ++open;
    // Close the open cycle with probability 1/(number of unplaced elements).
    if (rng.Uniform() * static_cast<double>(n - step + 1) < 1.0) {
      ++c[static_cast<std::size_t>(open - 1)];
      open = 0;
    }
  }
  return c;
}

SampleRecord SmallBallSample(std::span<const double> weights, const IntervalUnion& region,
                             std::size_t index, CountingRng& rng,
                             const SamplerOptions& options) {
  const std::size_t n = weights.size();
  if (n == 0 || index >= n) throw Error(ErrorCode::kInvalidArgument, "bad small-ball index");
  for (double w : weights) {
    if (!(std::abs(w) >= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "small-ball weights need |w_i| >= 1");
    }
  }
  std::vector<Marginal> marginals(n, DiscreteMarginal::SignedUnit());
  ConditioningProblem problem(std::move(marginals), {weights.begin(), weights.end()}, 0.0,
                              {index});
  const double wi = weights[index];
  auto partial_sum = [&](std::span<const double> outcome) {
    double s = 0.0;
    for (std::size_t j : problem.first_half()) s += weights[j] * outcome[j];
    return s;
  };
  // Both signs can complete only if the region holds two points 2|w_I| apart;
  // otherwise every completable first half has weight 1/2 and nothing is
  // rejected after completability.
  const double q_sup = region.AdmitsPairAtDistance(2.0 * std::abs(wi)) ? 1.0 : 0.5;
  auto q = [&](std::span<const double> outcome) {
    const double s = partial_sum(outcome);
    return 0.5 * (static_cast<double>(region.Contains(s + wi)) +
                  static_cast<double>(region.Contains(s - wi)));
  };
  auto second_half = [&](std::span<double> outcome, CountingRng& r) {
    const double s = partial_sum(outcome);
    const bool plus = region.Contains(s + wi);
    const bool minus = region.Contains(s - wi);
    if (plus && minus) {
      outcome[index] = r.Uniform() < 0.5 ? -1.0 : 1.0;
    } else {
      outcome[index] = plus ? 1.0 : -1.0;
    }
  };
  return SoftRejectionSample(problem, q, q_sup, rng, second_half, options);
}

std::vector<std::vector<std::int64_t>> MaterializeSetPartition(const MultiplicityVector& profile,
                                                               std::int64_t n,
                                                               CountingRng& rng) {
  if (n < 1 || static_cast<std::int64_t>(profile.size()) != n) {
    throw Error(ErrorCode::kInvalidProfile, "profile must have one entry per block size");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] < 0) throw Error(ErrorCode::kInvalidProfile, "negative block count");
    total += static_cast<std::int64_t>(i + 1) * profile[i];
  }
  if (total != n) throw Error(ErrorCode::kInvalidProfile, "profile does not sum to n");

  std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  for (std::size_t i = perm.size() - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.UniformIndex(i + 1)]);
  }
  std::vector<std::vector<std::int64_t>> blocks;
  auto next = perm.begin();
  for (std::size_t i = 0; i < profile.size(); ++i) {
    for (std::int64_t b = 0; b < profile[i]; ++b) {
      std::vector<std::int64_t> block(next, next + static_cast<std::ptrdiff_t>(i + 1));
      next += static_cast<std::ptrdiff_t>(i + 1);
      std::sort(block.begin(), block.end());
      blocks.push_back(std::move(block));
    }
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return blocks;
}

}  // namespace pdc
