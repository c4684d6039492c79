/* Copyright 2026 The pump Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// pump: command-line front end of the pump library.
//
//   pump analyze --config <file> --out <file> [--csv <file>]
//   pump instant --config <file> --t <real>
//   pump bathtub --dispersion linear|quadratic --kmax <r> --nk <int> --mu <r>
//                --trials <int> --seed <int>
//   pump models
//
// Exit codes: 0 success, 1 configuration or flag error, 2 numerical
// failure, 3 I/O failure. Warnings go to standard error and never change the
// exit code.

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "pump/analysis.hpp"
#include "pump/bathtub.hpp"
#include "pump/config_io.hpp"
#include "pump/errors.hpp"
#include "pump/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitIo = 3;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw pump::Error(pump::ErrorKind::IoError, "cannot open " + path + " for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw pump::Error(pump::ErrorKind::IoError, "write to " + path + " failed");
  }
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) {
    std::cerr << "warning: " << w << "\n";
  }
}

int run_analyze(const std::string& config_path, const std::string& out_path,
                const std::string& csv_path) {
  const pump::ModelConfig config = pump::load_model_config(config_path);
  const pump::AnalysisReport report = pump::analyze(config);
  print_warnings(report.warnings);
  write_file(out_path, pump::serialize(pump::to_json(report)));
  if (!csv_path.empty()) {
    write_file(csv_path, pump::to_csv(report));
  }
  return kExitOk;
}

int run_instant(const std::string& config_path, double t) {
  const pump::ModelConfig config = pump::load_model_config(config_path);
  std::vector<std::string> warnings;
  const pump::InstantReport r = pump::analyze_instant(config, t, &warnings);
  print_warnings(warnings);
  std::cout << pump::serialize(pump::to_json(r));
  return kExitOk;
}

struct BathtubFlags {
  std::string dispersion = "linear";
  double kmax = 2.0;
  long long nk = 1024;
  double mu = 1.0;
  long long trials = 1000;
  long long seed = 0;
};

int run_bathtub(const BathtubFlags& f) {
  using namespace pump::bathtub;
  if (f.nk < 64) {
    throw pump::Error(pump::ErrorKind::BadParamRange, "need at least 64 momentum nodes", "nk");
  }
  if (f.trials < 1) {
    throw pump::Error(pump::ErrorKind::BadParamRange, "need at least one trial", "trials");
  }
  if (f.seed < 0) {
    throw pump::Error(pump::ErrorKind::BadParamRange, "seed must be non-negative", "seed");
  }
  const DispersionGrid grid =
      make_dispersion_grid(parse_dispersion(f.dispersion), f.kmax, static_cast<std::size_t>(f.nk));
  if (!(f.mu > 0.0) || f.mu > grid.energy_at(grid.k_max)) {
    throw pump::Error(pump::ErrorKind::BadParamRange, "mu must lie in (0, eps(kmax)]", "mu");
  }
  const FluxPair analytic = analytic_minimum(f.mu);
  const Filling greedy = greedy_minimize(grid, analytic.Qdot);
  const BoundReport bound = verify_bound(grid, static_cast<std::size_t>(f.trials),
                                         static_cast<std::uint64_t>(f.seed), f.mu);
  pump::BathtubSummary summary{greedy.Edot, analytic.Edot, bound.violations, bound.max_violation};
  std::cout << pump::serialize(pump::to_json(summary));
  return bound.violations == 0 ? kExitOk : kExitNumeric;
}

int run_models() {
  std::cout << pump::serialize(pump::models_to_json());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adiabatic quantum pump analysis (natural units: hbar = e = 1, h = R_k = 2 pi)"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string csv_path;
  auto* analyze = app.add_subcommand("analyze", "Analyze one pump cycle and write a JSON report");
  analyze->add_option("--config", config_path, "Model configuration (JSON)")->required();
  analyze->add_option("--out", out_path, "Report output path")->required();
  analyze->add_option("--csv", csv_path, "Optional time-series CSV output path");

  double t = 0.0;
  auto* instant = app.add_subcommand("instant", "Print the observables at one time as JSON");
  instant->add_option("--config", config_path, "Model configuration (JSON)")->required();
  instant->add_option("--t", t, "Time in [0, T)")->required();

  BathtubFlags flags;
  auto* bathtub = app.add_subcommand("bathtub", "Brute-force check of the dissipation bound");
  bathtub->add_option("--dispersion", flags.dispersion, "linear or quadratic")
      ->check(CLI::IsMember({"linear", "quadratic"}));
  bathtub->add_option("--kmax", flags.kmax, "Momentum cutoff");
  bathtub->add_option("--nk", flags.nk, "Number of momentum nodes (>= 64)");
  bathtub->add_option("--mu", flags.mu, "Chemical potential of the reference Fermi sea");
  bathtub->add_option("--trials", flags.trials, "Random fillings to test");
  bathtub->add_option("--seed", flags.seed, "Seed of the first trial");

  auto* models = app.add_subcommand("models", "List the built-in models as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*analyze) {
      return run_analyze(config_path, out_path, csv_path);
    }
    if (*instant) {
      return run_instant(config_path, t);
    }
    if (*bathtub) {
      return run_bathtub(flags);
    }
    if (*models) {
      return run_models();
    }
  } catch (const pump::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == pump::ErrorKind::IoError) {
      return kExitIo;
    }
    return pump::is_config_error(e.kind()) ? kExitConfig : kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitConfig;
}
