// Copyright 2026 The gaborkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GABORKIT_ERROR_HPP_
#define GABORKIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace gaborkit {

// Numeric values are shared with the C API (gk_status) and must stay stable.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kNonHermitian = 2,
  kNonFinite = 3,
  kNoConvergence = 4,
  kSingular = 5,
  kQuadratureFailure = 6,
  kTailNotSummable = 7,
  kIrrationalLattice = 8,
  kRationalLattice = 9,
  kDensityViolation = 10,
  kNotPainless = 11,
  kResolutionInsufficient = 12,
  kDimensionMismatch = 13,
  kIo = 14,
  kInternal = 15,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gaborkit

#endif  // GABORKIT_ERROR_HPP_
