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

// Combinatorial families as conditioned independent processes.
//
// A uniformly random object of size n in each family has component counts
// distributed as (Z_1..Z_n | sum_i i Z_i = n) for independent Z_i whose law
// depends on a free tilt x. The conditional law does not depend on x; the
// tilt only moves the acceptance rate.
//
//   Partition          Z_i ~ Geometric(x^i)
//   DistinctPartition  Z_i ~ Bernoulli(x^i / (1 + x^i))
//   Selection(m)       Z_i ~ Binomial(m_i, x^i / (1 + x^i))
//   Multiset(m)        Z_i ~ NegativeBinomial(m_i, x^i)
//   Assembly(m)        Z_i ~ Poisson(m_i x^i / i!)
//   SetPartition       Assembly with m_i = 1
//   EwensProfile       Z_i ~ Poisson(theta x^i / i), also sum_i Z_i = k
//   PlanePartitionGrid Z_ij ~ Geometric(x^(i+j+1)), sum (i+j+1) Z_ij = n

#ifndef PDC_CORE_STRUCTURES_HPP_
#define PDC_CORE_STRUCTURES_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "core/engine.hpp"
#include "core/geometry.hpp"

namespace pdc {

enum class FamilyKind {
  kPartition,
  kDistinctPartition,
  kSelection,
  kMultiset,
  kAssembly,
  kSetPartition,
  kPlanePartitionGrid,
  kEwensProfile,
};

// Coordinates of a plane-partition grid problem.
enum class PlaneGridMode {
  // One coordinate per weight class w = i+j+1 >= 3: the class total, a
  // NegativeBinomial(w-2, x^w). Cells are filled afterwards uniformly over
  // weak compositions, which is the conditional law of iid geometrics given
  // their sum. Cell (1,1) is the only cell of weight 3, so the DSH index is
  // unchanged.
  kAggregated,
  // One coordinate per cell with i+j+1 <= n (larger cells are forced to 0).
  kPerCell,
  // One coordinate per cell of the full n x n grid.
  kFullGrid,
};

enum class Method { kHard, kDsh, kSoft };

struct StructureFamily {
  FamilyKind kind = FamilyKind::kPartition;
  std::int64_t n = 0;
  std::optional<double> tilt;                      // family default when absent
  std::optional<std::vector<std::int64_t>> colors; // m_i; all ones when absent
  double theta = 1.0;                              // EwensProfile
  std::int64_t parts = 0;                          // EwensProfile k
  PlaneGridMode plane_mode = PlaneGridMode::kAggregated;
};

// c[i-1] = number of components of size i.
using MultiplicityVector = std::vector<std::int64_t>;

struct GridCell {
  std::int64_t row = 0;
  std::int64_t col = 0;
  std::int64_t count = 0;

  bool operator==(const GridCell&) const = default;
};

// Nonzero cells only, sorted by (row, col).
struct PlaneGrid {
  std::int64_t n = 0;
  std::vector<GridCell> cells;

  std::int64_t Weight() const;
};

using StructureSample = std::variant<MultiplicityVector, PlaneGrid>;

struct StructureRecord {
  StructureSample sample;
  Outcome outcome;  // raw engine coordinates
  std::uint64_t attempts = 0;
  std::uint64_t rng_calls = 0;
};

const char* ToString(FamilyKind kind);
std::optional<FamilyKind> ParseFamilyKind(std::string_view name);

double SolveTilt(FamilyKind kind, std::int64_t n);

// A family's conditioning problem together with the map from engine
// coordinates back to the family's output type.
class StructureProblem {
 public:
  const StructureFamily& family() const { return family_; }
  const ConditioningProblem& problem() const { return problem_; }
  double tilt() const { return tilt_; }

  // Grid cell of engine coordinate j (per-cell modes only).
  std::pair<std::int64_t, std::int64_t> cell(std::size_t j) const { return cells_[j]; }

  // Aggregated plane grids consume uniforms to spread class totals over cells.
  StructureSample Materialize(std::span<const double> outcome, CountingRng& rng) const;

 private:
  friend StructureProblem BuildProblem(const StructureFamily& family);
  StructureProblem(StructureFamily family, ConditioningProblem problem, double tilt,
                   std::vector<std::pair<std::int64_t, std::int64_t>> cells);

  StructureFamily family_;
  ConditioningProblem problem_;
  double tilt_;
  std::vector<std::pair<std::int64_t, std::int64_t>> cells_;
};

// Throws Error(kInvalidFamily) for n = 0, empty or non-positive colors, or a
// tilt outside the family's range.
StructureProblem BuildProblem(const StructureFamily& family);

StructureRecord SampleStructure(const StructureProblem& sp, Method method, CountingRng& rng,
                                const SamplerOptions& options = {});

// Cycle type of a uniform permutation of [n]; exactly n uniforms.
MultiplicityVector FellerPermutationCycles(std::int64_t n, CountingRng& rng);

// Exact sample of (X_1..X_n | sum w_i X_i in G) for X_i uniform on {-1,+1}.
// When both signs of X_I complete the first half, the first half is weighted
// by the number of valid completions and one is picked uniformly.
SampleRecord SmallBallSample(std::span<const double> weights, const IntervalUnion& region,
                             std::size_t index, CountingRng& rng,
                             const SamplerOptions& options = {});

// Uniform set partition of {1..n} with profile[i-1] blocks of size i. Blocks
// are ordered by size, then by minimum element; each block is sorted.
std::vector<std::vector<std::int64_t>> MaterializeSetPartition(const MultiplicityVector& profile,
                                                               std::int64_t n,
                                                               CountingRng& rng);

}  // namespace pdc

#endif  // PDC_CORE_STRUCTURES_HPP_
