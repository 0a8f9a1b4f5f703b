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

#include <string_view>

namespace cavgate::cli {

/// Evaluate a real-valued arithmetic expression: numbers, the constant `pi`,
/// + - * / with the usual precedence, unary minus and parentheses. A number
/// directly followed by `pi` multiplies (`2pi`, `10pi`). Throws
/// ConfigError on malformed input.
double evaluate_expression(std::string_view text);

}  // namespace cavgate::cli
