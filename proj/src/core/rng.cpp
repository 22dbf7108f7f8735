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

#include "core/rng.hpp"

#include "core/errors.hpp"

namespace pdc {

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const char* ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidFamily: return "InvalidFamily";
    case ErrorCode::kInvalidProfile: return "InvalidProfile";
    case ErrorCode::kNonTerminating: return "NonTerminating";
    case ErrorCode::kSupportTooLarge: return "SupportTooLarge";
    case ErrorCode::kUnboundedDensity: return "UnboundedDensity";
    case ErrorCode::kInvalidRejection: return "InvalidRejection";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

}  // namespace pdc
