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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pump/analysis.hpp"
#include "pump/bathtub.hpp"
#include "pump/models.hpp"
#include "pump/optimal.hpp"
#include "pump/shift.hpp"
#include "pump/transport.hpp"
#include "test_support.hpp"

namespace {

using namespace pump;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// 1. Flux-loop charges (-w, +w) within 1e-10; winding agrees exactly.
Outcome charge_quantization() {
  double worst = 0.0;
  bool windings = true;
  for (int w : {1, 2, 3}) {
    const ModelConfig c = testing::flux_loop_config(1.0, w, 256);
    const PumpModel m = build_model(c);
    const auto q = cycle_charge(m, 1.0, make_grid(c));
    worst = std::max({worst, std::abs(q[0] + w), std::abs(q[1] - w)});
    const auto wind = winding_charge(m, 1.0, make_grid(c));
    windings = windings && wind[0] == -w && wind[1] == w;
  }
  return {worst < 1e-10 && windings,
          "max |Q - (-w,+w)| = " + sci(worst) + ", winding " + (windings ? "agrees" : "DISAGREES")};
}

// 2. D_j - pi Qdot_j^2 < 1e-12 at every sample of the optimal pump.
Outcome bound_saturation() {
  double worst = -1.0;
  for (int w : {1, 2, 3}) {
    const ModelConfig c = testing::flux_loop_config(1.0, w, 256);
    for (const auto& e : energy_shift_cycle(build_model(c), 1.0, make_grid(c))) {
      for (double r : bound_residual(e)) worst = std::max(worst, r);
    }
  }
  return {worst < 1e-12, "max residual " + sci(worst)};
}

// 3. bound_residual >= -1e-12 over random Hermitian shifts, n in {2,3,4}.
Outcome bound_inequality() {
  SeededGenerator gen(20260101);
  double worst = 1.0;
  std::size_t count = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const Eigen::Index n = 2 + trial % 3;
    const double scale = std::pow(10.0, 2.0 * gen.uniform() - 1.0);
    ComplexMatrix e = testing::random_hermitian(gen, n, scale);
    if (trial % 2 == 1) {
      // nearly optimal: off-diagonal part at the rounding edge of the bound
      const ComplexMatrix diag = e.diagonal().asDiagonal();
      e = diag + 1e-9 * (e - diag);
    }
    for (double r : bound_residual(e)) {
      worst = std::min(worst, r);
    }
    ++count;
  }
  return {worst >= -1e-12, std::to_string(count) + " matrices, min residual " + sci(worst)};
}

// 4. Greedy error < 5/n_k, halving per doubling, zero violations in 1000 trials.
Outcome bathtub_oracle() {
  using namespace pump::bathtub;
  const double mu = 1.0;
  const double exact = mu * mu / (4.0 * kPi);
  std::vector<double> errors;
  bool within = true;
  for (std::size_t nk : {512u, 1024u, 2048u}) {
    const auto g = make_dispersion_grid(DispersionKind::Linear, 2.0, nk);
    const double err = std::abs(greedy_minimize(g, mu / (2.0 * kPi)).Edot - exact);
    errors.push_back(err);
    within = within && err < 5.0 / static_cast<double>(nk);
  }
  bool halving = true;
  std::string ratios;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double ratio = errors[i] / errors[i - 1];
    halving = halving && ratio >= 0.4 && ratio <= 0.6;
    ratios += (i > 1 ? ", " : "") + (std::isnan(ratio) ? std::string("0/0") : sci(ratio));
  }
  const auto g = make_dispersion_grid(DispersionKind::Linear, 2.0, 1024);
  const BoundReport r = verify_bound(g, 1000, 0, mu);
  std::string detail = "errors " + sci(errors[0]) + ", " + sci(errors[1]) + ", " + sci(errors[2]) +
                       " (< 5/n_k: " + (within ? "yes" : "no") + "); doubling ratios " + ratios +
                       " (halving: " + (halving ? "yes" : "no") + "); violations " +
                       std::to_string(r.violations) + "/1000";
  return {within && halving && r.violations == 0, detail};
}

// 5. (E^2)_jj = sum_k |E_jk|^2 on all built-ins, all samples.
Outcome square_identity() {
  double worst = 0.0;
  for (const auto& nc : testing::builtin_configs()) {
    for (const auto& e : energy_shift_cycle(build_model(nc.config), 1.0, make_grid(nc.config))) {
      const ComplexMatrix& m = e.value();
      const ComplexMatrix sq = m * m;
      for (Eigen::Index j = 0; j < m.rows(); ++j) {
        double sum = 0.0;
        for (Eigen::Index k = 0; k < m.cols(); ++k) sum += std::norm(m(j, k));
        worst = std::max({worst, std::abs(sq(j, j).real() - sum), std::abs(sq(j, j).imag())});
      }
    }
  }
  return {worst < 1e-12, "max deviation " + sci(worst)};
}

// 6. Dissipation recomputed from outgoing-symbol moments, 50 random shifts.
Outcome symbol_moments() {
  SeededGenerator gen(6);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix e = testing::random_hermitian(gen, 2 + trial % 3, 3.0);
    const auto from_symbol = symbol_dissipation(outgoing_symbol(e, 1.0));
    const auto direct = dissipation(e).total;
    for (std::size_t j = 0; j < direct.size(); ++j) {
      worst = std::max(worst, std::abs(from_symbol[j] - direct[j]));
    }
  }
  return {worst < 1e-12, "max deviation " + sci(worst)};
}

// 7. Sdot/Ndot = 3 to 1e-14 relative wherever Ndot > 0.
Outcome entropy_noise_ratio() {
  SeededGenerator gen(7);
  double worst = 0.0;
  std::size_t defined = 0;
  auto check = [&](const ComplexMatrix& e, double beta) {
    const EntropyNoise en = entropy_noise(e, beta, 0.0, 0.0);
    for (std::size_t j = 0; j < en.noise_rate.size(); ++j) {
      if (en.noise_rate[j] > 0.0) {
        worst = std::max(worst, std::abs(en.entropy_rate[j] / en.noise_rate[j] - 3.0) / 3.0);
        ++defined;
      }
    }
  };
  for (int trial = 0; trial < 200; ++trial) {
    check(testing::random_hermitian(gen, 2 + trial % 3, 5.0), 0.1 + 100.0 * gen.uniform());
  }
  for (const auto& nc : testing::builtin_configs()) {
    for (const auto& e : energy_shift_cycle(build_model(nc.config), 1.0, make_grid(nc.config))) {
      check(e.value(), 10.0);
    }
  }
  return {worst < 1e-14 && defined > 0,
          std::to_string(defined) + " defined ratios, max relative deviation " + sci(worst)};
}

// 8. |Q_1 + 1| > 0 and strictly decreasing for delta 0.2, 0.1, 0.05; < 1e-10 at 0.
Outcome dequantization() {
  const DequantizationSweep s =
      dequantization_sweep(testing::perturbed_config(0.0), {0.2, 0.1, 0.05, 0.0});
  std::vector<double> dev;
  for (const auto& p : s.points) dev.push_back(std::abs(p.charge[0] + 1.0));
  const bool positive = dev[0] > 0.0 && dev[1] > 0.0 && dev[2] > 0.0;
  const bool decreasing = dev[0] > dev[1] && dev[1] > dev[2];
  const bool restored = dev[3] < 1e-10;
  return {positive && decreasing && restored,
          "|Q1+1| = " + sci(dev[0]) + ", " + sci(dev[1]) + ", " + sci(dev[2]) + " -> " +
              sci(dev[3]) + " at delta = 0"};
}

// 9. Diagonal-shift verdict iff the U_d(t) S0 decomposition succeeds.
Outcome optimality_equivalence() {
  std::size_t agree = 0;
  std::size_t total = 0;
  std::string mismatch;
  for (const auto& nc : testing::builtin_configs()) {
    const PumpModel m = build_model(nc.config);
    const CycleGrid grid = make_grid(nc.config);
    const bool verdict = optimality_verdict(m, 1.0, grid).is_optimal;
    const bool decomposes = diagonal_decomposition(m, 1.0, grid).has_value();
    ++total;
    if (verdict == decomposes) {
      ++agree;
    } else {
      mismatch += " " + nc.label;
    }
  }
  return {agree == total,
          std::to_string(agree) + "/" + std::to_string(total) + " models agree" + mismatch};
}

// 10. Charges within 1e-8 and identical verdicts under reparameterization.
Outcome reparameterization() {
  double worst = 0.0;
  bool same_verdict = true;
  for (const auto& nc : testing::builtin_configs()) {
    const PumpModel m = build_model(nc.config);
    const PumpModel r = sinusoidal_reparameterization(m, 0.1);
    const CycleGrid grid = make_grid(nc.config);
    const auto qa = cycle_charge(m, 1.0, grid);
    const auto qb = cycle_charge(r, 1.0, grid);
    for (std::size_t j = 0; j < qa.size(); ++j) worst = std::max(worst, std::abs(qa[j] - qb[j]));
    same_verdict = same_verdict && optimality_verdict(m, 1.0, grid).is_optimal ==
                                       optimality_verdict(r, 1.0, grid).is_optimal;
  }
  return {worst < 1e-8 && same_verdict, "max charge change " + sci(worst) + ", verdicts " +
                                            (same_verdict ? "identical" : "DIFFER")};
}

// 11. Matrix form and row-overlap form of the energy shift agree < 1e-10.
Outcome cross_path() {
  double worst = 0.0;
  for (const auto& nc : testing::builtin_configs()) {
    const PumpModel m = build_model(nc.config);
    const CycleGrid grid = make_grid(nc.config);
    const auto shifts = energy_shift_cycle(m, 1.0, grid);
    const auto rows = energy_shift_rows(m, 1.0, grid);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      worst = std::max(worst, testing::max_abs_diff(rows[i], shifts[i].value()));
    }
  }
  return {worst < 1e-10, "max entrywise difference " + sci(worst)};
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + PUMP_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// 12. Byte-identical reports; exit codes 1/2/3 from the error fixtures.
Outcome cli_contract() {
  const fs::path dir = fs::temp_directory_path() / "pump_acceptance";
  fs::create_directories(dir);
  const std::string fixtures = PUMP_FIXTURE_DIR;
  auto cfg = [&](const char* name) { return "--config \"" + fixtures + "/" + name + "\""; };
  const fs::path a = dir / "a.json";
  const fs::path b = dir / "b.json";
  const fs::path sink = dir / "sink.json";

  const int ra = run_cli("analyze " + cfg("flux_loop.json") + " --out \"" + a.string() + "\"");
  const int rb = run_cli("analyze " + cfg("flux_loop.json") + " --out \"" + b.string() + "\"");
  const bool identical = ra == 0 && rb == 0 && !slurp(a).empty() && slurp(a) == slurp(b);

  struct Case {
    std::string args;
    int expected;
  };
  const std::vector<Case> cases = {
      {"analyze " + cfg("bad_samples.json") + " --out \"" + sink.string() + "\"", 1},
      {"analyze " + cfg("mu_outside_window.json") + " --out \"" + sink.string() + "\"", 1},
      {"analyze " + cfg("missing_param.json") + " --out \"" + sink.string() + "\"", 1},
      {"instant " + cfg("flux_loop.json") + " --t 1.0", 1},
      {"bathtub --nk 0", 1},
      {"analyze " + cfg("under_resolved.json") + " --out \"" + sink.string() + "\"", 2},
      {"analyze " + cfg("tight_unitarity.json") + " --out \"" + sink.string() + "\"", 2},
      {"analyze " + cfg("flux_loop.json") + " --out /nonexistent-pump-dir/r.json", 3},
      {"analyze --config /nonexistent-pump-dir/c.json --out \"" + sink.string() + "\"", 3},
  };
  std::size_t ok = 0;
  std::string codes;
  for (const auto& c : cases) {
    const int code = run_cli(c.args);
    ok += code == c.expected ? 1 : 0;
    codes += std::to_string(code);
  }
  return {identical && ok == cases.size(),
          std::string("reports ") + (identical ? "byte-identical" : "DIFFER") + ", exit codes " +
              codes + " (expected 111112233)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"flux-loop charge quantization", charge_quantization},
      {"bound saturation on the optimal pump", bound_saturation},
      {"bound inequality on random shifts", bound_inequality},
      {"bathtub oracle", bathtub_oracle},
      {"square identity", square_identity},
      {"outgoing-symbol moment consistency", symbol_moments},
      {"entropy/noise ratio", entropy_noise_ratio},
      {"de-quantization", dequantization},
      {"optimality-criteria equivalence", optimality_equivalence},
      {"reparameterization invariance", reparameterization},
      {"cross-path equality", cross_path},
      {"CLI determinism and exit codes", cli_contract},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] AC%02d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", index - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
