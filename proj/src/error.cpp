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

#include "gaborkit/error.hpp"

namespace gaborkit {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNonHermitian: return "NonHermitian";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kSingular: return "Singular";
    case ErrorCode::kQuadratureFailure: return "QuadratureFailure";
    case ErrorCode::kTailNotSummable: return "TailNotSummable";
    case ErrorCode::kIrrationalLattice: return "IrrationalLattice";
    case ErrorCode::kRationalLattice: return "RationalLattice";
    case ErrorCode::kDensityViolation: return "DensityViolation";
    case ErrorCode::kNotPainless: return "NotPainless";
    case ErrorCode::kResolutionInsufficient: return "ResolutionInsufficient";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace gaborkit
