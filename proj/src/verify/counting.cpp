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


#include "verify/counting.hpp"

#include <vector>

#include "core/errors.hpp"

namespace pdc {

std::optional<CountKind> ParseCountKind(std::string_view name) {
  if (name == "p") return CountKind::kPartitions;
  if (name == "q") return CountKind::kDistinctPartitions;
  if (name == "bell") return CountKind::kBell;
  return std::nullopt;
}

BigInt CountingOracle(CountKind kind, std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "count argument must be >= 0");
  const auto size = static_cast<std::size_t>(n);
  switch (kind) {
    case CountKind::kPartitions:
    case CountKind::kDistinctPartitions: {
      // Coin-change DP over part sizes; distinct parts iterate totals
      // downward so each size is used at most once.
      std::vector<BigInt> ways(size + 1, 0);
      ways[0] = 1;
      for (std::size_t part = 1; part <= size; ++part) {
        if (kind == CountKind::kPartitions) {
          for (std::size_t t = part; t <= size; ++t) ways[t] += ways[t - part];
        } else {
          for (std::size_t t = size; t >= part; --t) ways[t] += ways[t - part];
        }
      }
      return ways[size];
    }
    case CountKind::kBell: {
      // Bell triangle.
      std::vector<BigInt> row{1};
      for (std::size_t i = 1; i <= size; ++i) {
        std::vector<BigInt> next{row.back()};
        for (const BigInt& v : row) next.push_back(next.back() + v);
        row = std::move(next);
      }
      return row.front();
    }
  }
  return 0;
}

}  // namespace pdc
