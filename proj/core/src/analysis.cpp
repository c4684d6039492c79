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

#include "pump/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pump/config_io.hpp"
#include "pump/errors.hpp"
#include "pump/shift.hpp"

namespace pump {

namespace {

// Largest normalized Fourier amplitude of any S entry in the top quarter of
// the resolvable band.
double resolution_tail(const std::vector<UnitaryMatrix>& samples) {
  const std::size_t count = samples.size();
  const auto n = samples.front().dim();
  std::vector<Complex> entry(count);
  double tail = 0.0;
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      for (std::size_t i = 0; i < count; ++i) {
        entry[i] = samples[i].matrix()(r, c);
      }
      tail = std::max(tail, spectral_tail(entry, 3 * count / 8));
    }
  }
  return tail;
}

struct Context {
  PumpModel model;
  CycleGrid grid;
  double mu;
  double adiabaticity;
  double omega;
  double tau;
};

Context prepare(const ModelConfig& config, std::vector<std::string>* warnings) {
  validate(config);
  PumpModel model = build_model(config);
  CycleGrid grid = make_grid(config);
  const double mu = config.energy.mu;
  const double eps = adiabaticity(model, mu, grid, default_energy_step(config));
  const double omega = 2.0 * kPi / grid.period();
  if (warnings && eps >= kAdiabaticityWarning) {
    std::ostringstream os;
    os << "adiabaticity parameter " << eps << " >= " << kAdiabaticityWarning
       << "; adiabatic formulas are questionable";
    warnings->push_back(os.str());
  }
  return Context{std::move(model), grid, mu, eps, omega, eps / omega};
}

}  // namespace

AnalysisReport analyze(const ModelConfig& config) {
  AnalysisReport report;
  report.config = to_json(config);
  report.tolerances = config.tolerances;
  const Context ctx = prepare(config, &report.warnings);
  report.adiabaticity = ctx.adiabaticity;

  const double tail = resolution_tail(sample_cycle(ctx.model, ctx.mu, ctx.grid));
  if (tail > 1e-10) {
    std::ostringstream os;
    os << "scattering matrix has Fourier amplitude " << tail
       << " in the top of the band; the cycle may be under-resolved";
    report.warnings.push_back(os.str());
  }

  const auto shifts = energy_shift_cycle(ctx.model, ctx.mu, ctx.grid, config.tolerances);
  std::size_t herm_flags = 0;
  double worst_defect = 0.0;
  bool regime_flagged = false;
  for (const auto& e : shifts) {
    if (e.warning) {
      ++herm_flags;
      worst_defect = std::max(worst_defect, e.herm_defect);
    }
    report.instants.push_back(instant_report(e, config.beta, ctx.omega, ctx.tau));
    if (report.instants.back().regime_ok == false) {
      regime_flagged = true;
    }
  }
  if (herm_flags > 0) {
    std::ostringstream os;
    os << "energy shift hermiticity defect above tol_herm at " << herm_flags
       << " samples (max " << worst_defect << ")";
    report.warnings.push_back(os.str());
  }
  if (regime_flagged) {
    report.warnings.push_back(
        "entropy/noise regime hbar*omega < 1/beta < hbar/tau not satisfied; rates are "
        "reported but outside their regime of validity");
  }

  report.optimality = optimality_verdict(shifts, ctx.model, ctx.mu, ctx.grid, config.tolerances);

  CycleReport& cycle = report.cycle;
  cycle.charge = cycle_charge(shifts, ctx.grid);
  const std::size_t n = static_cast<std::size_t>(ctx.model.n_channels());
  cycle.dissipated_energy.assign(n, 0.0);
  std::vector<double> rate(shifts.size());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < shifts.size(); ++i) {
      rate[i] = report.instants[i].dissipation[j];
    }
    cycle.dissipated_energy[j] = periodic_integral(rate, ctx.grid);
  }
  cycle.adiabaticity = ctx.adiabaticity;
  cycle.is_optimal = report.optimality.is_optimal;
  cycle.max_offdiag_ratio = report.optimality.max_offdiag_ratio;
  cycle.period = ctx.grid.period();
  cycle.samples = ctx.grid.samples();
  if (report.optimality.is_optimal) {
    try {
      cycle.winding = winding_charge(ctx.model, ctx.mu, ctx.grid, config.tolerances);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PhaseStepTooLarge) {
        throw;
      }
      report.warnings.push_back(std::string("winding charge unavailable: ") + e.what());
    }
  }
  return report;
}

InstantReport analyze_instant(const ModelConfig& config, double t,
                              std::vector<std::string>* warnings) {
  if (!(t >= 0.0 && t < config.cycle.period)) {
    std::ostringstream os;
    os << "t = " << t << " outside [0, " << config.cycle.period << ")";
    throw Error(ErrorKind::ConfigError, os.str(), "t");
  }
  const Context ctx = prepare(config, warnings);
  const EnergyShift e = energy_shift_at(ctx.model, t, ctx.mu, ctx.grid, config.tolerances);
  if (warnings && e.warning) {
    warnings->push_back(*e.warning);
  }
  InstantReport r = instant_report(e, config.beta, ctx.omega, ctx.tau);
  if (warnings && r.regime_ok == false) {
    warnings->push_back("entropy/noise regime hbar*omega < 1/beta < hbar/tau not satisfied");
  }
  return r;
}

}  // namespace pump
