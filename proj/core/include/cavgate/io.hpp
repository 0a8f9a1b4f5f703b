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

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cavgate/gate.hpp"
#include "cavgate/phase.hpp"
#include "cavgate/validate.hpp"

namespace cavgate {

using Cell = std::variant<double, long long, bool, std::string>;

/// Flat table with a fixed column order; the common shape of every report
/// the tool writes.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// %.12g; "nan" / "inf" / "-inf" for non-finite values.
std::string format_number(double value);

/// Header line plus one line per row, '\n' terminated.
std::string to_csv(const Table& table);

/// {"columns": [...], "rows": [{column: value, ...}, ...]}; numbers rounded
/// to 12 significant digits, non-finite numbers as null.
std::string to_json(const Table& table);

/// Columns: branch, lambda, gamma_g, gamma_d, gamma, closure_residual,
/// enclosed_area. `areas` is parallel to `phases` (NaN when unavailable).
Table phases_table(std::span<const PhaseBreakdown> phases, std::span<const double> areas);

/// One row: method, gamma, fidelity, diagonality_residual, closure_residual,
/// unitarity_defect, nontrivial, entangling_entropy, then m<i><j>_re/_im.
Table gate_table(const GateReport& report);

/// Columns: scan, parameter, infidelity, diagonality_residual, phase_error,
/// fidelity_change, monotone, converged.
Table validation_table(std::span<const ValidationReport> reports);

}  // namespace cavgate
