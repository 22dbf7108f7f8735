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


#ifndef PDC_VERIFY_COUNTING_HPP_
#define PDC_VERIFY_COUNTING_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pdc {

using BigInt = boost::multiprecision::cpp_int;

enum class CountKind {
  kPartitions,          // p(n)
  kDistinctPartitions,  // q(n)
  kBell,                // B(n)
};

std::optional<CountKind> ParseCountKind(std::string_view name);

// Throws Error(kInvalidArgument) for n < 0.
BigInt CountingOracle(CountKind kind, std::int64_t n);

}  // namespace pdc

#endif  // PDC_VERIFY_COUNTING_HPP_
