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

#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <thread>

#include "cavgate/evolve.hpp"
#include "cavgate/gate.hpp"
#include "cavgate/io.hpp"
#include "cavgate/phase.hpp"
#include "cavgate/validate.hpp"
#include "expr.hpp"

namespace cavgate::cli {

namespace {

RunConfig load(const CommandOptions& options) {
  if (!options.config_path) throw ConfigError("--config: a configuration file is required");
  return resolve_config(load_config_file(*options.config_path), options.overrides);
}

std::string extension(OutputFormat format) { return format == OutputFormat::Json ? "json" : "csv"; }

std::string render(const Table& table, OutputFormat format) {
  return format == OutputFormat::Json ? to_json(table) : to_csv(table);
}

void write_text(const std::string& text, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("output: cannot write '" + path + "'");
  file << text;
}

void emit_output(const std::string& text, const std::optional<std::string>& path,
                 const std::string& stem, OutputFormat format, std::ostream& out) {
  if (path) {
    write_text(text, *path);
  } else if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    std::filesystem::create_directories(dir);
    write_text(text, (std::filesystem::path(dir) / (stem + "." + extension(format))).string());
  } else {
    out << text;
  }
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    for (const auto& d : e.diagnostics()) err << "config error: " << d << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return e.code() == ErrorCode::InvalidArgument ? kExitConfig : kExitGuard;
  }
}

GateOptions gate_options(const RunConfig& cfg) {
  GateOptions options;
  options.n_steps = cfg.steps;
  options.closure_tol = cfg.closure_tol;
  options.nontrivial_tol = cfg.nontrivial_tol;
  return options;
}

struct BranchResult {
  PhaseBreakdown phases;
  double area = 0.0;
};

BranchResult branch_phases(const PulseSpec& pulse, Branch branch, const RunConfig& cfg,
                           bool allow_open) {
  PhaseOptions options;
  options.n_steps = cfg.steps;
  options.closure_tol = cfg.closure_tol;
  options.require_closed = !allow_open;
  BranchResult result;
  result.phases = total_phase(pulse, branch, options);
  const auto traj = alpha_trajectory(pulse, branch, cfg.steps + 1);
  try {
    result.area = enclosed_area(traj, cfg.closure_tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OpenLoop) throw;
    result.area = std::nan("");
  }
  return result;
}

}  // namespace

int cmd_phases(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = load(options);
    std::vector<PhaseBreakdown> phases;
    std::vector<double> areas;
    for (Branch b : kBranches) {
      const auto r = branch_phases(*cfg.pulse, b, cfg, options.allow_open);
      phases.push_back(r.phases);
      areas.push_back(r.area);
    }
    emit_output(render(phases_table(phases, areas), cfg.format), cfg.out_path, "phases",
                cfg.format, out);
    return kExitOk;
  });
}

int cmd_gate(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = load(options);
    const GateReport report =
        gate_matrix(*cfg.pulse, FockSpace(cfg.dim), cfg.method, cfg.dt, gate_options(cfg));
    emit_output(render(gate_table(report), cfg.format), cfg.out_path, "gate", cfg.format, out);
    return kExitOk;
  });
}

int cmd_design(const DesignOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const double target = evaluate_expression(options.target);
    if (options.g0.has_value() == options.duration.has_value()) {
      throw ConfigError("design: give exactly one of --g0 or --T");
    }
    if (options.loops < 1) throw ConfigError("--loops: must be >= 1");
    DesignConstraint constraint = options.g0 ? DesignConstraint{FixedCoupling{*options.g0}}
                                             : DesignConstraint{FixedDuration{*options.duration}};
    Warnings warnings;
    const PulseSpec pulse = design_circular_pulse(target, constraint, options.loops, &warnings);
    for (const auto& w : warnings) err << "warning [" << warning_code_name(w.code) << "]: " << w.message << '\n';

    char header[96];
    std::snprintf(header, sizeof header, "# designed for gamma = %.17g over %d loop(s)\n", target,
                  options.loops);
    const std::string text = header + format_pulse_section(pulse);
    if (options.out) {
      write_text(text, *options.out);
    } else {
      out << text;
    }
    return kExitOk;
  });
}

int cmd_validate(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = load(options);
    if (cfg.r0_values.empty() && cfg.dims.empty()) {
      throw ConfigError("validate: [validate] needs r0_values and/or dims");
    }
    ScanOptions scan;
    scan.gate = gate_options(cfg);
    std::vector<ValidationReport> reports;
    bool regression = false;
    if (!cfg.r0_values.empty()) {
      reports.push_back(rwa_error_scan(*cfg.pulse, cfg.r0_values, FockSpace(cfg.dim), cfg.dt, scan));
      err << "rwa scan: monotone = " << (reports.back().monotone ? "true" : "false") << '\n';
      regression |= !reports.back().monotone;
    }
    if (!cfg.dims.empty()) {
      reports.push_back(truncation_scan(*cfg.pulse, cfg.dims, cfg.dt, scan));
      err << "truncation scan: converged = " << (reports.back().converged ? "true" : "false") << '\n';
      regression |= !reports.back().converged;
    }
    emit_output(render(validation_table(reports), cfg.format), cfg.out_path, "validate",
                cfg.format, out);
    return regression ? kExitRegression : kExitOk;
  });
}

int cmd_sweep(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = load(options);
    if (cfg.sweep.empty()) throw ConfigError("sweep: [sweep] defines no grid axes");
    std::size_t points = 1;
    for (const auto& axis : cfg.sweep) {
      if (axis.values.empty()) throw ConfigError("sweep." + axis.key + ": empty axis");
      points *= axis.values.size();
      if (points > cfg.max_points) {
        throw ConfigError("sweep: grid has more than max_points = " +
                          std::to_string(cfg.max_points) + " points");
      }
    }

    const ConfigSection& base = *cfg.file.find("pulse");
    auto point_pulse = [&](std::size_t index) {
      ConfigSection section = base;
      std::vector<double> values(cfg.sweep.size());
      for (std::size_t a = cfg.sweep.size(); a-- > 0;) {
        const auto& axis = cfg.sweep[a];
        values[a] = axis.values[index % axis.values.size()];
        index /= axis.values.size();
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", values[a]);
        section.set(axis.key, buf);
      }
      return std::make_pair(values, section);
    };

    // Validate every grid point before computing anything.
    std::vector<PulseSpec> pulses;
    std::vector<std::vector<double>> coords;
    pulses.reserve(points);
    for (std::size_t k = 0; k < points; ++k) {
      auto [values, section] = point_pulse(k);
      try {
        pulses.push_back(pulse_from_section(section));
      } catch (const ConfigError& e) {
        std::vector<std::string> diags;
        for (const auto& d : e.diagnostics()) diags.push_back("sweep point " + std::to_string(k) + ": " + d);
        throw ConfigError(diags);
      }
      coords.push_back(std::move(values));
    }

    std::vector<BranchResult> results(points);
    std::vector<std::exception_ptr> failures(points);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t k; (k = next++) < points;) {
        try {
          results[k] = branch_phases(pulses[k], Branch::PlusPlus, cfg, options.allow_open);
        } catch (...) {
          failures[k] = std::current_exception();
        }
      }
    };
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, points);
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }

    Table table;
    for (const auto& axis : cfg.sweep) table.columns.push_back(axis.key);
    for (const char* c : {"gamma_g", "gamma_d", "gamma", "closure_residual", "enclosed_area"}) {
      table.columns.emplace_back(c);
    }
    for (std::size_t k = 0; k < points; ++k) {
      std::vector<Cell> row(coords[k].begin(), coords[k].end());
      const auto& p = results[k].phases;
      row.insert(row.end(), {p.gamma_g, p.gamma_d, p.gamma_total, p.closure_residual,
                             results[k].area});
      table.rows.push_back(std::move(row));
    }
    emit_output(render(table, cfg.format), cfg.out_path, "sweep", cfg.format, out);
    return kExitOk;
  });
}

}  // namespace cavgate::cli
