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

#ifndef PDC_CORE_ERRORS_HPP_
#define PDC_CORE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pdc {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidFamily,
  kInvalidProfile,
  kNonTerminating,
  kSupportTooLarge,
  kUnboundedDensity,
  kInvalidRejection,
  kSingularSystem,
  kDimensionMismatch,
};

const char* ToString(ErrorCode code);

// Every failure in the core is reported through this one exception type; the
// C API maps `code()` onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pdc

#endif  // PDC_CORE_ERRORS_HPP_
