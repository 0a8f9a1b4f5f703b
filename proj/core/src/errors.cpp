// Copyright 2026 The cavgate Authors
//
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

#include "cavgate/errors.hpp"

namespace cavgate {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::OpenLoop: return "OpenLoop";
    case ErrorCode::NonUnitaryResult: return "NonUnitaryResult";
    case ErrorCode::InfeasibleConstraint: return "InfeasibleConstraint";
    case ErrorCode::StepTooCoarse: return "StepTooCoarse";
  }
  return "Unknown";
}

std::string_view warning_code_name(WarningCode code) {
  switch (code) {
    case WarningCode::Truncation: return "TruncationWarning";
    case WarningCode::TrivialTarget: return "TrivialTarget";
  }
  return "Unknown";
}

}  // namespace cavgate
