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

#include "cavgate/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <type_traits>

#include "json.hpp"

namespace cavgate {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, double>) {
          return format_number(v);
        } else if constexpr (std::is_same_v<V, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<V, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      cell);
}

ordered_json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, double>) {
          if (!std::isfinite(v)) return nullptr;
          return std::stod(format_number(v));
        } else {
          return v;
        }
      },
      cell);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string to_csv(const Table& table) {
  std::ostringstream out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << csv_field(table.columns[c]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(cell_text(row[c]));
    out << '\n';
  }
  return out.str();
}

std::string to_json(const Table& table) {
  ordered_json doc;
  doc["columns"] = table.columns;
  doc["rows"] = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
      obj[table.columns[c]] = cell_json(row[c]);
    }
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

Table phases_table(std::span<const PhaseBreakdown> phases, std::span<const double> areas) {
  Table t;
  t.columns = {"branch", "lambda", "gamma_g", "gamma_d", "gamma", "closure_residual",
               "enclosed_area"};
  for (std::size_t k = 0; k < phases.size(); ++k) {
    const auto& p = phases[k];
    const double area = k < areas.size() ? areas[k] : std::nan("");
    t.rows.push_back({std::string(branch_name(p.branch)),
                      static_cast<long long>(branch_lambda(p.branch)), p.gamma_g, p.gamma_d,
                      p.gamma_total, p.closure_residual, area});
  }
  return t;
}

Table gate_table(const GateReport& report) {
  Table t;
  t.columns = {"method",           "gamma",           "fidelity",
               "diagonality_residual", "closure_residual", "unitarity_defect",
               "nontrivial",       "entangling_entropy"};
  std::vector<Cell> row = {std::string(gate_method_name(report.method)),
                           report.extracted_gamma,
                           report.fidelity,
                           report.diagonality_residual,
                           report.closure_residual,
                           report.unitarity_defect,
                           report.nontrivial,
                           entangling_check(report)};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const std::string name = "m" + std::to_string(i) + std::to_string(j);
      t.columns.push_back(name + "_re");
      t.columns.push_back(name + "_im");
      row.emplace_back(report.matrix(i, j).real());
      row.emplace_back(report.matrix(i, j).imag());
    }
  }
  t.rows.push_back(std::move(row));
  return t;
}

Table validation_table(std::span<const ValidationReport> reports) {
  Table t;
  t.columns = {"scan",        "parameter",       "infidelity", "diagonality_residual",
               "phase_error", "fidelity_change", "monotone",   "converged"};
  for (const auto& report : reports) {
    for (const auto& row : report.rows) {
      t.rows.push_back({report.parameter, row.parameter_value, row.infidelity,
                        row.diagonality_residual, row.phase_error, row.fidelity_change,
                        report.monotone, report.converged});
    }
  }
  return t;
}

}  // namespace cavgate
