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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cavgate {

enum class ErrorCode {
  InvalidArgument,
  PreconditionFailed,
  OpenLoop,
  NonUnitaryResult,
  InfeasibleConstraint,
  StepTooCoarse,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class WarningCode { Truncation, TrivialTarget };

std::string_view warning_code_name(WarningCode code);

struct Warning {
  WarningCode code;
  std::string message;
};

/// Optional collector for non-fatal diagnostics. Functions that can warn
/// take a `Warnings*`; passing nullptr discards them.
using Warnings = std::vector<Warning>;

inline void emit(Warnings* sink, WarningCode code, std::string message) {
  if (sink != nullptr) sink->push_back({code, std::move(message)});
}

}  // namespace cavgate
