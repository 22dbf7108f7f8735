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

#ifndef PDC_CORE_RNG_HPP_
#define PDC_CORE_RNG_HPP_

#include <cstdint>
#include <random>

namespace pdc {

// Seedable source of uniform(0,1) variates that counts every draw. The call
// counter is the cost unit used by all benchmarks: one call is one uniform.
class CountingRng {
 public:
  explicit CountingRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  // Uniform on the open interval (0,1); never returns 0 or 1, so -log(u) and
  // log(u)/log(r) are always finite.
  double Uniform() {
    ++calls_;
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform integer on [0, bound), one call.
  std::uint64_t UniformIndex(std::uint64_t bound) {
    const auto k = static_cast<std::uint64_t>(Uniform() * static_cast<double>(bound));
    return k < bound ? k : bound - 1;
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t calls() const { return calls_; }

 private:
  std::uint64_t seed_;
  std::uint64_t calls_ = 0;
  std::mt19937_64 engine_;
};

// Derives an independent stream seed for worker `index` from a base seed
// (splitmix64 finalizer applied to seed + (index+1) * golden gamma).
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index);

}  // namespace pdc

#endif  // PDC_CORE_RNG_HPP_
