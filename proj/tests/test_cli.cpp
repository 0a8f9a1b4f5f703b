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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "cavgate/phase.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "expr.hpp"
#include "support.hpp"

namespace cavgate::cli {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() /
            (std::string("cavgate_") + info->test_suite_name() + "_" + info->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto file = path_ / name;
    std::ofstream(file) << text;
    return file.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

template <typename Command, typename Options>
RunResult run(Command command, const Options& options) {
  std::ostringstream out, err;
  const int code = command(options, out, err);
  return {code, out.str(), err.str()};
}

CommandOptions with_config(const std::string& path) {
  CommandOptions options;
  options.config_path = path;
  return options;
}

const char* const kCircleConfig =
    "# standard loop\n"
    "[pulse]\n"
    "shape = circular\n"
    "g0 = 0.1\n"
    "nu = 0.2\n";

TEST(Expression, Arithmetic) {
  EXPECT_DOUBLE_EQ(evaluate_expression("pi/2"), kPi / 2);
  EXPECT_DOUBLE_EQ(evaluate_expression("2pi"), kTwoPi);
  EXPECT_DOUBLE_EQ(evaluate_expression(" -3 * (1 + 2) / 4 "), -2.25);
  EXPECT_DOUBLE_EQ(evaluate_expression("1.5e-3"), 1.5e-3);
  EXPECT_DOUBLE_EQ(evaluate_expression("3*pi/4 - pi"), -kPi / 4);
}

TEST(Expression, Rejects) {
  for (const char* bad : {"", "pi pi", "1/0", "2 +", "(1", "pie", "x"}) {
    EXPECT_THROW(evaluate_expression(bad), ConfigError) << bad;
  }
}

TEST(ConfigParser, SectionsCommentsAndDuplicates) {
  const ConfigFile file = parse_config("[a]\nx = 1 ; note\n# skip\n[b]\ny=pi\n");
  ASSERT_EQ(file.sections.size(), 2u);
  EXPECT_EQ(file.find("a")->find("x")->value, "1");
  EXPECT_EQ(file.find("b")->find("y")->value, "pi");
  EXPECT_THROW(parse_config("[a]\nx=1\nx=2\n"), ConfigError);
  EXPECT_THROW(parse_config("[a]\n[a]\n"), ConfigError);
  EXPECT_THROW(parse_config("[a\n"), ConfigError);
  EXPECT_THROW(parse_config("[a]\njust words\n"), ConfigError);
}

TEST(ConfigResolve, DefaultsAndOverrides) {
  const RunConfig cfg = resolve_config(parse_config(kCircleConfig), {});
  EXPECT_EQ(cfg.dim, 32);
  EXPECT_EQ(cfg.method, GateMethod::Analytic);
  EXPECT_NEAR(cfg.dt, 10 * kPi / 4000, 1e-15);
  EXPECT_NEAR(cfg.pulse->duration(), 10 * kPi, 1e-12);

  Overrides o;
  o.dim = 12;
  o.dt = 0.5;
  o.steps = 300;
  o.format = "json";
  const RunConfig over = resolve_config(parse_config(kCircleConfig), o);
  EXPECT_EQ(over.dim, 12);
  EXPECT_EQ(over.dt, 0.5);
  EXPECT_EQ(over.steps, 300);
  EXPECT_EQ(over.format, OutputFormat::Json);
}

TEST(ConfigResolve, FieldPathDiagnostics) {
  const std::string text =
      "[pulse]\nshape = circular\ng0 = -1\nnu = 0.2\ncolour = red\n"
      "[fock]\ndim = 1\n[evolve]\nmethod = euler\n[extra]\n";
  try {
    resolve_config(parse_config(text), {});
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    const std::string all = e.what();
    for (const char* field : {"pulse.g0", "pulse.colour", "fock.dim", "evolve.method", "extra"}) {
      EXPECT_NE(all.find(field), std::string::npos) << field << " missing from\n" << all;
    }
  }
}

TEST(ConfigResolve, PulseShapes) {
  const auto piecewise = pulse_from_section(
      *parse_config("[pulse]\nshape = piecewise\ndurations = 1, 2\ng_re = 0.5, -0.25\n").find("pulse"));
  EXPECT_TRUE(piecewise.is_piecewise_constant());
  EXPECT_DOUBLE_EQ(piecewise.duration(), 3.0);

  const auto sampled = pulse_from_section(
      *parse_config("[pulse]\nshape = sampled\ndt = 0.5\nvalues_re = 0, 1, 0\nvalues_im = 0,0,1\n")
           .find("pulse"));
  EXPECT_DOUBLE_EQ(sampled.duration(), 1.0);
  EXPECT_EQ(sampled.coupling(1.0), cplx(0.0, 1.0));

  const auto zero = pulse_from_section(*parse_config("[pulse]\nshape = zero\nT = 4\n").find("pulse"));
  EXPECT_EQ(zero.coupling(2.0), cplx{});

  const auto loops = pulse_from_section(
      *parse_config("[pulse]\ng0 = 0.1\nnu = -0.2\nloops = 3\nphase0 = pi/4\n").find("pulse"));
  EXPECT_NEAR(loops.duration(), 3 * kTwoPi / 0.2, 1e-12);
}

// Random pulses printed as [pulse] sections parse back to identical values.
TEST(ConfigRoundTrip, PrintedPulsesParseBackExactly) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    PulseSpec original = PulseSpec::zero(1.0);
    switch (trial % 3) {
      case 0:
        original = PulseSpec::circular(rng.uniform(1e-3, 2.0), rng.uniform(-3.0, 3.0),
                                       rng.uniform(-kPi, kPi), rng.integer(1, 4),
                                       rng.uniform(0.0, 10.0));
        break;
      case 1:
        original = testing::random_closed_pulse(rng).with_r0(rng.uniform(0.0, 3.0));
        break;
      default: {
        SampledShape s{rng.uniform(0.01, 0.5), {}};
        const int n = rng.integer(2, 12);
        for (int k = 0; k < n; ++k) s.values.push_back(rng.complex(1.0));
        const double span = s.dt * (n - 1);
        original = PulseSpec(std::move(s), 0.0, span);
      }
    }
    const std::string text = format_pulse_section(original);
    const PulseSpec parsed = pulse_from_section(*parse_config(text).find("pulse"));
    EXPECT_EQ(parsed.duration(), original.duration()) << text;
    EXPECT_EQ(parsed.r0(), original.r0()) << text;
    EXPECT_EQ(parsed.shape().index(), original.shape().index());
    if (const auto* c = std::get_if<CircularShape>(&original.shape())) {
      const auto& p = std::get<CircularShape>(parsed.shape());
      EXPECT_EQ(p.g0, c->g0);
      EXPECT_EQ(p.nu, c->nu);
      EXPECT_EQ(p.phase0, c->phase0);
    } else if (const auto* pw = std::get_if<PiecewiseConstantShape>(&original.shape())) {
      const auto& p = std::get<PiecewiseConstantShape>(parsed.shape());
      ASSERT_EQ(p.segments.size(), pw->segments.size());
      for (std::size_t k = 0; k < p.segments.size(); ++k) {
        EXPECT_EQ(p.segments[k].duration, pw->segments[k].duration);
        EXPECT_EQ(p.segments[k].g, pw->segments[k].g);
      }
    } else {
      const auto& s = std::get<SampledShape>(original.shape());
      const auto& p = std::get<SampledShape>(parsed.shape());
      EXPECT_EQ(p.dt, s.dt);
      EXPECT_EQ(p.values, s.values);
    }
  }
}

TEST(PhasesCommand, CircleRows) {
  TempDir dir;
  const RunResult r = run(cmd_phases, with_config(dir.write("c.cfg", kCircleConfig)));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0][0], "branch");
  EXPECT_EQ(rows[1][0], "++");
  EXPECT_NEAR(std::stod(rows[1][2]), -kPi / 2, 1e-6);
  EXPECT_NEAR(std::stod(rows[1][3]), kPi, 1e-6);
  EXPECT_NEAR(std::stod(rows[1][4]), kPi / 2, 1e-6);
  EXPECT_NEAR(std::stod(rows[1][6]), kPi / 4, 1e-6);
}

TEST(PhasesCommand, ZeroPulseAllZero) {
  TempDir dir;
  const RunResult r = run(cmd_phases, with_config(dir.write("z.cfg", "[pulse]\nshape = zero\nT = 3\n")));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    for (std::size_t c = 2; c < rows[k].size(); ++c) EXPECT_EQ(rows[k][c], "0");
  }
}

TEST(PhasesCommand, OpenLoopIsGuarded) {
  TempDir dir;
  auto options = with_config(dir.write("o.cfg", "[pulse]\ng0 = 0.1\nnu = 0.2\nT = 20\n"));
  const RunResult guarded = run(cmd_phases, options);
  EXPECT_EQ(guarded.code, kExitGuard);
  EXPECT_NE(guarded.err.find("residual"), std::string::npos) << guarded.err;
  options.allow_open = true;
  const RunResult allowed = run(cmd_phases, options);
  EXPECT_EQ(allowed.code, kExitOk);
  EXPECT_NE(allowed.out.find("nan"), std::string::npos);
}

TEST(PhasesCommand, ConfigErrorsExitOne) {
  TempDir dir;
  EXPECT_EQ(run(cmd_phases, with_config(dir.path("missing.cfg"))).code, kExitConfig);
  EXPECT_EQ(run(cmd_phases, with_config(dir.write("b.cfg", "[pulse]\ng0 = abc\n"))).code, kExitConfig);
  EXPECT_EQ(run(cmd_phases, CommandOptions{}).code, kExitConfig);
}

TEST(PhasesCommand, DeterministicOutput) {
  TempDir dir;
  auto options = with_config(dir.write("c.cfg", kCircleConfig));
  options.overrides.out = dir.path("one.json");
  options.overrides.format = "json";
  ASSERT_EQ(run(cmd_phases, options).code, kExitOk);
  options.overrides.out = dir.path("two.json");
  ASSERT_EQ(run(cmd_phases, options).code, kExitOk);
  EXPECT_EQ(slurp(dir.path("one.json")), slurp(dir.path("two.json")));
  EXPECT_NE(slurp(dir.path("one.json")).find("\"gamma_g\""), std::string::npos);
}

TEST(PhasesCommand, OutputDirectoryFromEnvironment) {
  TempDir dir;
  const std::string config = dir.write("c.cfg", kCircleConfig);
  ::setenv(kOutputDirEnv, dir.path("results").c_str(), 1);
  const RunResult r = run(cmd_phases, with_config(config));
  ::unsetenv(kOutputDirEnv);
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(fs::exists(dir.path("results/phases.csv")));
}

TEST(GateCommand, AnalyticDesign) {
  TempDir dir;
  const RunResult r = run(cmd_gate, with_config(dir.write("c.cfg", kCircleConfig)));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  std::map<std::string, std::string> cell;
  for (std::size_t c = 0; c < rows[0].size(); ++c) cell[rows[0][c]] = rows[1][c];
  EXPECT_EQ(cell["method"], "analytic");
  EXPECT_EQ(cell["nontrivial"], "true");
  EXPECT_NEAR(std::stod(cell["m00_re"]), 0.0, 1e-6);
  EXPECT_NEAR(std::stod(cell["m00_im"]), 1.0, 1e-6);
  EXPECT_NEAR(std::stod(cell["m33_im"]), 1.0, 1e-6);
  EXPECT_EQ(cell["m11_re"], "1");
  EXPECT_NEAR(std::stod(cell["entangling_entropy"]), 1.0, 1e-9);
}

TEST(GateCommand, NumericRwaFidelity) {
  TempDir dir;
  const RunResult r = run(cmd_gate, with_config(dir.write(
      "c.cfg", std::string(kCircleConfig) + "[evolve]\nmethod = numeric_rwa\n[fock]\ndim = 24\n")));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  EXPECT_GT(std::stod(rows[1][2]), 0.999);
}

TEST(GateCommand, TrivialPhaseReported) {
  TempDir dir;
  const RunResult r = run(cmd_gate, with_config(dir.write("t.cfg", "[pulse]\ng0 = 0.2\nnu = 0.2\n")));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(parse_csv(r.out)[1][6], "false");
}

TEST(DesignCommand, SolvesAndRoundTrips) {
  DesignOptions options;
  options.target = "pi/2";
  options.g0 = 0.1;
  const RunResult r = run(cmd_design, options);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const ConfigFile file = parse_config(r.out);
  const PulseSpec pulse = pulse_from_section(*file.find("pulse"));
  const auto& c = std::get<CircularShape>(pulse.shape());
  EXPECT_NEAR(c.nu, 0.2, 1e-15);
  EXPECT_NEAR(pulse.duration(), 10 * kPi, 1e-12);
  EXPECT_NEAR(total_phase(pulse, Branch::PlusPlus).gamma_total, kPi / 2, 1e-6);
}

TEST(DesignCommand, ExitCodes) {
  DesignOptions zero;
  zero.target = "0";
  zero.g0 = 0.1;
  EXPECT_EQ(run(cmd_design, zero).code, kExitGuard);

  DesignOptions trivial;
  trivial.target = "2pi";
  trivial.g0 = 0.1;
  const RunResult t = run(cmd_design, trivial);
  EXPECT_EQ(t.code, kExitOk);
  EXPECT_NE(t.err.find("TrivialTarget"), std::string::npos) << t.err;

  DesignOptions both;
  both.target = "1";
  both.g0 = 0.1;
  both.duration = 5.0;
  EXPECT_EQ(run(cmd_design, both).code, kExitConfig);

  DesignOptions garbled;
  garbled.target = "pi/";
  garbled.g0 = 0.1;
  EXPECT_EQ(run(cmd_design, garbled).code, kExitConfig);
}

TEST(ValidateCommand, RwaScanAndGuard) {
  TempDir dir;
  const std::string base = std::string(kCircleConfig) + "[fock]\ndim = 10\n";
  const RunResult ok = run(cmd_validate, with_config(dir.write(
      "v.cfg", base + "[evolve]\ndt = 0.02\n[validate]\nr0_values = 1, 4\n")));
  ASSERT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(parse_csv(ok.out).size(), 3u);

  const RunResult coarse = run(cmd_validate, with_config(dir.write(
      "c.cfg", base + "[evolve]\ndt = 0.05\n[validate]\nr0_values = 1, 4\n")));
  EXPECT_EQ(coarse.code, kExitGuard);

  const RunResult nothing = run(cmd_validate, with_config(dir.write("n.cfg", base)));
  EXPECT_EQ(nothing.code, kExitConfig);
}

TEST(ValidateCommand, TruncationScan) {
  TempDir dir;
  const std::string base = std::string(kCircleConfig) + "[evolve]\ndt = 0.02\n";
  const RunResult single = run(cmd_validate, with_config(dir.write("s.cfg", base + "[validate]\ndims = 16\n")));
  EXPECT_EQ(single.code, kExitOk) << single.err;
  EXPECT_EQ(parse_csv(single.out).size(), 2u);

  const RunResult unconverged =
      run(cmd_validate, with_config(dir.write("u.cfg", base + "[validate]\ndims = 5, 10\n")));
  EXPECT_EQ(unconverged.code, kExitRegression) << unconverged.err;

  const RunResult tiny = run(cmd_validate, with_config(dir.write("t.cfg", base + "[validate]\ndims = 2\n")));
  EXPECT_EQ(tiny.code, kExitGuard);
}

TEST(SweepCommand, GammaScalesWithCoupling) {
  TempDir dir;
  const RunResult r = run(cmd_sweep, with_config(dir.write(
      "s.cfg", std::string(kCircleConfig) + "[sweep]\ng0 = 0.05, 0.1, 0.2\n")));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0][0], "g0");
  EXPECT_EQ(rows[0][3], "gamma");
  const double expected[] = {kPi / 8, kPi / 2, 2 * kPi};
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(std::stod(rows[k + 1][3]), expected[k], 1e-6);
}

TEST(SweepCommand, GridOrderIsDeterministic) {
  TempDir dir;
  const RunResult r = run(cmd_sweep, with_config(dir.write(
      "s.cfg", std::string(kCircleConfig) + "[sweep]\nnu = 0.2, 0.4\nphase0 = 0, pi/2, pi\n")));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 7u);
  const char* nu[] = {"0.2", "0.2", "0.2", "0.4", "0.4", "0.4"};
  for (int k = 0; k < 6; ++k) EXPECT_EQ(rows[k + 1][0], nu[k]);
  EXPECT_EQ(rows[2][1], "1.57079632679");
}

TEST(SweepCommand, SinglePointMatchesPhases) {
  TempDir dir;
  const RunResult sweep = run(cmd_sweep, with_config(dir.write(
      "s.cfg", std::string(kCircleConfig) + "[sweep]\ng0 = 0.1\n")));
  const RunResult phases = run(cmd_phases, with_config(dir.write("p.cfg", kCircleConfig)));
  ASSERT_EQ(sweep.code, kExitOk);
  const auto s = parse_csv(sweep.out);
  const auto p = parse_csv(phases.out);
  for (int c = 0; c < 5; ++c) EXPECT_EQ(s[1][c + 1], p[1][c + 2]);
}

TEST(SweepCommand, GridGuards) {
  TempDir dir;
  EXPECT_EQ(run(cmd_sweep, with_config(dir.write("e.cfg", std::string(kCircleConfig) + "[sweep]\n"))).code,
            kExitConfig);
  EXPECT_EQ(run(cmd_sweep, with_config(dir.write(
                "b.cfg", std::string(kCircleConfig) + "[sweep]\nmax_points = 3\ng0 = 0.1, 0.2\nnu = 0.2, 0.4\n")))
                .code,
            kExitConfig);
  EXPECT_EQ(run(cmd_sweep, with_config(dir.write(
                "k.cfg", std::string(kCircleConfig) + "[sweep]\ndim = 4, 8\n")))
                .code,
            kExitConfig);
}

}  // namespace
}  // namespace cavgate::cli
