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

#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cavgate/errors.hpp"
#include "expr.hpp"

namespace cavgate::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string exact_list(const std::vector<double>& values) {
  std::vector<std::string> parts;
  parts.reserve(values.size());
  for (double v : values) parts.push_back(exact(v));
  return join(parts, ", ");
}

class Diagnostics {
 public:
  void add(const std::string& path, const std::string& message) {
    messages_.push_back(path + ": " + message);
  }
  void add_raw(const std::string& message) { messages_.push_back(message); }
  bool empty() const { return messages_.empty(); }
  void raise_if_any() const {
    if (!messages_.empty()) throw ConfigError(messages_);
  }

 private:
  std::vector<std::string> messages_;
};

// Typed field access on one section, reporting failures as
// "<section>.<key>: message".
class Fields {
 public:
  Fields(const ConfigSection* section, std::string name, Diagnostics& diag)
      : section_(section), name_(std::move(name)), diag_(diag) {}

  bool has(std::string_view key) const {
    return section_ != nullptr && section_->find(key) != nullptr;
  }

  std::string path(std::string_view key) const { return name_ + "." + std::string(key); }

  void error(std::string_view key, const std::string& message) { diag_.add(path(key), message); }

  std::optional<std::string> text(std::string_view key) {
    touched_.emplace_back(key);
    if (!has(key)) return std::nullopt;
    return section_->find(key)->value;
  }

  std::optional<double> number(std::string_view key) {
    auto raw = text(key);
    if (!raw) return std::nullopt;
    try {
      return evaluate_expression(*raw);
    } catch (const ConfigError& e) {
      error(key, e.what());
      return std::nullopt;
    }
  }

  std::optional<double> required(std::string_view key) {
    if (!has(key)) {
      touched_.emplace_back(key);
      error(key, "required");
      return std::nullopt;
    }
    return number(key);
  }

  std::optional<int> integer(std::string_view key) {
    const auto v = number(key);
    if (!v) return std::nullopt;
    if (std::floor(*v) != *v || std::abs(*v) > 1e9) {
      error(key, "expected an integer, got " + exact(*v));
      return std::nullopt;
    }
    return static_cast<int>(*v);
  }

  std::optional<std::vector<double>> list(std::string_view key) {
    auto raw = text(key);
    if (!raw) return std::nullopt;
    try {
      return parse_list(*raw);
    } catch (const ConfigError& e) {
      error(key, e.what());
      return std::nullopt;
    }
  }

  // Keys present in the section that were never asked for.
  void reject_unknown() {
    if (section_ == nullptr) return;
    for (const auto& entry : section_->entries) {
      if (std::find(touched_.begin(), touched_.end(), entry.key) == touched_.end()) {
        diag_.add(path(entry.key), "unknown key (line " + std::to_string(entry.line) + ")");
      }
    }
  }

  void touch(std::string_view key) { touched_.emplace_back(key); }

 private:
  const ConfigSection* section_;
  std::string name_;
  Diagnostics& diag_;
  std::vector<std::string> touched_;
};

constexpr std::string_view kSweepableKeys[] = {"g0", "nu", "phase0", "loops", "T", "r0", "dt"};

PulseSpec build_pulse(const ConfigSection& section, Diagnostics& diag) {
  Fields f(&section, "pulse", diag);
  const std::string shape = trim(f.text("shape").value_or("circular"));
  const auto r0 = f.number("r0").value_or(0.0);
  const auto duration = f.number("T");

  std::optional<PulseShape> built;
  std::optional<double> total;
  if (shape == "circular") {
    const auto g0 = f.required("g0");
    const auto nu = f.required("nu");
    const double phase0 = f.number("phase0").value_or(0.0);
    const auto loops = f.number("loops");
    if (duration && loops) f.error("loops", "give either T or loops, not both");
    if (g0 && !(*g0 > 0.0)) f.error("g0", "must be > 0");
    if (nu && *nu == 0.0) f.error("nu", "must be nonzero");
    if (loops && !(*loops > 0.0)) f.error("loops", "must be > 0");
    if (g0 && nu) {
      built = CircularShape{*g0, *nu, phase0};
      if (duration) {
        total = *duration;
      } else if (*nu != 0.0) {
        total = loops.value_or(1.0) * kTwoPi / std::abs(*nu);
      }
    }
  } else if (shape == "piecewise") {
    const auto durations = f.list("durations");
    const auto g_re = f.list("g_re");
    auto g_im = f.list("g_im");
    if (!f.has("durations")) f.error("durations", "required");
    if (!f.has("g_re")) f.error("g_re", "required");
    if (durations && g_re) {
      if (!g_im) g_im = std::vector<double>(g_re->size(), 0.0);
      if (g_re->size() != durations->size() || g_im->size() != durations->size()) {
        f.error("g_re", "durations, g_re and g_im must have equal lengths");
      } else {
        PiecewiseConstantShape p;
        double sum = 0.0;
        for (std::size_t k = 0; k < durations->size(); ++k) {
          p.segments.push_back({(*durations)[k], cplx((*g_re)[k], (*g_im)[k])});
          sum += (*durations)[k];
        }
        built = std::move(p);
        total = duration.value_or(sum);
      }
    }
  } else if (shape == "sampled") {
    const auto dt = f.required("dt");
    const auto re = f.list("values_re");
    auto im = f.list("values_im");
    if (!f.has("values_re")) f.error("values_re", "required");
    if (dt && re) {
      if (!im) im = std::vector<double>(re->size(), 0.0);
      if (im->size() != re->size()) {
        f.error("values_im", "values_re and values_im must have equal lengths");
      } else {
        SampledShape s{*dt, {}};
        for (std::size_t k = 0; k < re->size(); ++k) s.values.emplace_back((*re)[k], (*im)[k]);
        const double span = re->empty() ? 0.0 : *dt * static_cast<double>(re->size() - 1);
        built = std::move(s);
        total = duration.value_or(span);
      }
    }
  } else if (shape == "zero") {
    if (!duration) f.error("T", "required for shape = zero");
    if (duration) {
      built = PiecewiseConstantShape{{Segment{*duration, cplx{}}}};
      total = *duration;
    }
  } else {
    f.error("shape", "expected circular, piecewise, sampled or zero; got '" + shape + "'");
  }
  f.reject_unknown();

  if (!built || !total || !diag.empty()) {
    diag.raise_if_any();
    throw ConfigError("pulse: incomplete definition");
  }
  try {
    return PulseSpec(std::move(*built), r0, *total);
  } catch (const Error& e) {
    diag.add("pulse", e.what());
    diag.raise_if_any();
    throw;
  }
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> diagnostics)
    : std::runtime_error(join(diagnostics, "\n")), diagnostics_(std::move(diagnostics)) {}

const ConfigEntry* ConfigSection::find(std::string_view key) const {
  for (const auto& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

void ConfigSection::set(const std::string& key, const std::string& value) {
  for (auto& e : entries) {
    if (e.key == key) {
      e.value = value;
      return;
    }
  }
  entries.push_back({key, value, 0});
}

const ConfigSection* ConfigFile::find(std::string_view name) const {
  for (const auto& s : sections) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

ConfigSection& ConfigFile::section(const std::string& name) {
  for (auto& s : sections) {
    if (s.name == name) return s;
  }
  sections.push_back({name, {}});
  return sections.back();
}

ConfigFile parse_config(std::string_view text) {
  ConfigFile file;
  std::vector<std::string> errors;
  std::string current;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto comment = raw.find_first_of("#;");
    const std::string line = trim(std::string_view(raw).substr(0, comment));
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (line.front() == '[') {
      if (line.back() != ']') {
        errors.push_back(where + ": malformed section header '" + line + "'");
        continue;
      }
      current = trim(std::string_view(line).substr(1, line.size() - 2));
      if (file.find(current) != nullptr) {
        errors.push_back(where + ": duplicate section [" + current + "]");
      }
      file.section(current);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      errors.push_back(where + ": expected 'key = value', got '" + line + "'");
      continue;
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) {
      errors.push_back(where + ": empty key");
      continue;
    }
    auto& section = file.section(current);
    if (section.find(key) != nullptr) {
      errors.push_back(where + ": duplicate key '" + key + "' in [" + current + "]");
      continue;
    }
    section.entries.push_back({key, value, line_no});
  }
  if (!errors.empty()) throw ConfigError(errors);
  return file;
}

ConfigFile load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start);
    const std::string item = trim(piece);
    if (item.empty()) {
      if (comma == std::string_view::npos && out.empty()) break;
      throw ConfigError("empty list element in '" + std::string(text) + "'");
    }
    out.push_back(evaluate_expression(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool is_sweepable_key(std::string_view key) {
  return std::find(std::begin(kSweepableKeys), std::end(kSweepableKeys), key) !=
         std::end(kSweepableKeys);
}

PulseSpec pulse_from_section(const ConfigSection& section) {
  Diagnostics diag;
  return build_pulse(section, diag);
}

std::string format_pulse_section(const PulseSpec& pulse) {
  std::ostringstream out;
  out << "[pulse]\n";
  if (const auto* c = std::get_if<CircularShape>(&pulse.shape())) {
    out << "shape = circular\n"
        << "g0 = " << exact(c->g0) << "\n"
        << "nu = " << exact(c->nu) << "\n"
        << "phase0 = " << exact(c->phase0) << "\n";
  } else if (const auto* p = std::get_if<PiecewiseConstantShape>(&pulse.shape())) {
    std::vector<double> durations, re, im;
    for (const auto& s : p->segments) {
      durations.push_back(s.duration);
      re.push_back(s.g.real());
      im.push_back(s.g.imag());
    }
    out << "shape = piecewise\n"
        << "durations = " << exact_list(durations) << "\n"
        << "g_re = " << exact_list(re) << "\n"
        << "g_im = " << exact_list(im) << "\n";
  } else {
    const auto& s = std::get<SampledShape>(pulse.shape());
    std::vector<double> re, im;
    for (cplx v : s.values) {
      re.push_back(v.real());
      im.push_back(v.imag());
    }
    out << "shape = sampled\n"
        << "dt = " << exact(s.dt) << "\n"
        << "values_re = " << exact_list(re) << "\n"
        << "values_im = " << exact_list(im) << "\n";
  }
  out << "T = " << exact(pulse.duration()) << "\n"
      << "r0 = " << exact(pulse.r0()) << "\n";
  return out.str();
}

RunConfig resolve_config(const ConfigFile& file, const Overrides& overrides) {
  RunConfig cfg;
  cfg.file = file;
  Diagnostics diag;

  for (const auto& section : file.sections) {
    static constexpr std::string_view known[] = {"pulse", "fock",   "evolve", "phase",
                                                 "validate", "sweep", "output"};
    if (std::find(std::begin(known), std::end(known), section.name) == std::end(known)) {
      diag.add(section.name.empty() ? "(top level)" : section.name,
               "unknown section; expected one of pulse, fock, evolve, phase, validate, sweep, output");
    }
  }

  if (const auto* pulse = file.find("pulse")) {
    try {
      cfg.pulse = pulse_from_section(*pulse);
    } catch (const ConfigError& e) {
      for (const auto& d : e.diagnostics()) diag.add_raw(d);
    }
  } else {
    diag.add("pulse", "section [pulse] is required");
  }

  Fields fock(file.find("fock"), "fock", diag);
  cfg.dim = overrides.dim ? *overrides.dim : fock.integer("dim").value_or(cfg.dim);
  fock.touch("dim");
  if (cfg.dim < 2) diag.add(overrides.dim ? "--dim" : "fock.dim", "must be >= 2");
  fock.reject_unknown();

  Fields evolve(file.find("evolve"), "evolve", diag);
  if (auto method = evolve.text("method")) {
    if (auto m = parse_gate_method(trim(*method))) {
      cfg.method = *m;
    } else {
      evolve.error("method", "expected analytic, numeric_rwa or numeric_rotating; got '" +
                                 trim(*method) + "'");
    }
  }
  std::optional<double> dt = overrides.dt ? overrides.dt : evolve.number("dt");
  evolve.touch("dt");
  cfg.steps = overrides.steps ? *overrides.steps : evolve.integer("steps").value_or(cfg.steps);
  evolve.touch("steps");
  if (cfg.steps < 2) diag.add(overrides.steps ? "--steps" : "evolve.steps", "must be >= 2");
  if (dt && !(*dt > 0.0)) diag.add(overrides.dt ? "--dt" : "evolve.dt", "must be > 0");
  evolve.reject_unknown();

  Fields phase(file.find("phase"), "phase", diag);
  cfg.closure_tol = phase.number("closure_tol");
  if (cfg.closure_tol && !(*cfg.closure_tol > 0.0)) phase.error("closure_tol", "must be > 0");
  cfg.nontrivial_tol = phase.number("nontrivial_tol").value_or(cfg.nontrivial_tol);
  if (!(cfg.nontrivial_tol > 0.0)) phase.error("nontrivial_tol", "must be > 0");
  phase.reject_unknown();

  Fields validate(file.find("validate"), "validate", diag);
  if (auto r0s = validate.list("r0_values")) {
    cfg.r0_values = *r0s;
    if (r0s->empty()) validate.error("r0_values", "must not be empty");
    for (std::size_t k = 0; k < r0s->size(); ++k) {
      if (!((*r0s)[k] > 0.0)) validate.error("r0_values", "values must be positive");
      if (k > 0 && !((*r0s)[k] > (*r0s)[k - 1])) validate.error("r0_values", "values must be ascending");
    }
  }
  if (auto dims = validate.list("dims")) {
    if (dims->empty()) validate.error("dims", "must not be empty");
    for (std::size_t k = 0; k < dims->size(); ++k) {
      const double d = (*dims)[k];
      if (std::floor(d) != d || d < 2 || d > 4096) {
        validate.error("dims", "entries must be integers in [2, 4096]");
        break;
      }
      cfg.dims.push_back(static_cast<int>(d));
      if (k > 0 && !(d > (*dims)[k - 1])) validate.error("dims", "values must be ascending");
    }
  }
  validate.reject_unknown();

  if (const auto* sweep = file.find("sweep")) {
    Fields fields(sweep, "sweep", diag);
    if (auto max_points = fields.integer("max_points")) {
      if (*max_points < 1) fields.error("max_points", "must be >= 1");
      cfg.max_points = static_cast<std::size_t>(std::max(*max_points, 1));
    }
    for (const auto& entry : sweep->entries) {
      if (entry.key == "max_points") continue;
      fields.touch(entry.key);
      if (!is_sweepable_key(entry.key)) {
        fields.error(entry.key, "not a sweepable pulse field (g0, nu, phase0, loops, T, r0, dt)");
        continue;
      }
      if (auto values = fields.list(entry.key)) cfg.sweep.push_back({entry.key, *values});
    }
    fields.reject_unknown();
  }

  Fields output(file.find("output"), "output", diag);
  if (overrides.out) {
    cfg.out_path = overrides.out;
  } else if (auto path = output.text("path")) {
    cfg.out_path = trim(*path);
  }
  output.touch("path");
  const auto format = overrides.format ? overrides.format : output.text("format");
  output.touch("format");
  if (format) {
    const std::string f = trim(*format);
    if (f == "csv") {
      cfg.format = OutputFormat::Csv;
    } else if (f == "json") {
      cfg.format = OutputFormat::Json;
    } else {
      diag.add(overrides.format ? "--format" : "output.format", "expected csv or json; got '" + f + "'");
    }
  }
  output.reject_unknown();

  diag.raise_if_any();
  cfg.dt = dt.value_or(cfg.pulse->duration() / kDefaultStepsPerCycle);
  return cfg;
}

}  // namespace cavgate::cli
