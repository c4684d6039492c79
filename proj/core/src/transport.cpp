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

#include "pump/transport.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pump/errors.hpp"
#include "pump/optimal.hpp"

namespace pump {

namespace {

std::size_t channels(const ComplexMatrix& e) { return static_cast<std::size_t>(e.rows()); }

double offdiag_row_sum(const ComplexMatrix& e, Eigen::Index j) {
  double sum = 0.0;
  for (Eigen::Index k = 0; k < e.cols(); ++k) {
    if (k != j) {
      sum += std::norm(e(j, k));
    }
  }
  return sum;
}

}  // namespace

std::vector<double> instantaneous_current(const ComplexMatrix& e) {
  std::vector<double> out(channels(e));
  for (std::size_t j = 0; j < out.size(); ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    out[j] = e(jj, jj).real() / kPlanck;
  }
  return out;
}

Dissipation dissipation(const ComplexMatrix& e) {
  const ComplexMatrix square = e * e;
  const auto current = instantaneous_current(e);
  Dissipation out;
  const std::size_t n = channels(e);
  out.total.resize(n);
  out.bound.resize(n);
  out.excess.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    out.total[j] = square(jj, jj).real() / (2.0 * kPlanck);
    out.bound[j] = 0.5 * kVonKlitzing * current[j] * current[j];
    out.excess[j] = offdiag_row_sum(e, jj) / (2.0 * kPlanck);
  }
  return out;
}

std::vector<double> bound_residual(const ComplexMatrix& e) {
  const Dissipation d = dissipation(e);
  std::vector<double> out(d.total.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = d.total[j] - d.bound[j];
  }
  return out;
}

EntropyNoise entropy_noise(const ComplexMatrix& e, double beta, double omega, double tau) {
  if (!(beta > 0.0)) {
    throw Error(ErrorKind::BadParamRange, "inverse temperature must be positive", "beta");
  }
  EntropyNoise out;
  const std::size_t n = channels(e);
  out.entropy_rate.resize(n);
  out.noise_rate.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double excess = offdiag_row_sum(e, static_cast<Eigen::Index>(j));
    out.entropy_rate[j] = beta / (4.0 * kPi) * excess;
    out.noise_rate[j] = beta / (12.0 * kPi) * excess;
  }
  const double temperature = 1.0 / beta;
  const bool slow_drive = omega < temperature;
  const bool cold = tau <= 0.0 || temperature < 1.0 / tau;
  out.regime_ok = slow_drive && cold;
  return out;
}

OutgoingSymbol outgoing_symbol(const ComplexMatrix& e, double mu) {
  const ComplexMatrix square = e * e;
  OutgoingSymbol out;
  out.mu = mu;
  const std::size_t n = channels(e);
  out.delta_weight.resize(n);
  out.delta_prime_weight.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    out.delta_weight[j] = e(jj, jj).real();
    out.delta_prime_weight[j] = -0.5 * square(jj, jj).real();
  }
  return out;
}

std::vector<double> symbol_moment(const OutgoingSymbol& symbol, double g_at_mu,
                                  double g_slope_at_mu) {
  // integral g(E) [a delta(E-mu) + b delta'(E-mu)] dE = a g(mu) - b g'(mu)
  std::vector<double> out(symbol.delta_weight.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = (symbol.delta_weight[j] * g_at_mu - symbol.delta_prime_weight[j] * g_slope_at_mu) /
             kPlanck;
  }
  return out;
}

std::vector<double> symbol_dissipation(const OutgoingSymbol& symbol) {
  return symbol_moment(symbol, 0.0, 1.0);
}

InstantReport instant_report(const EnergyShift& e, std::optional<double> beta, double omega,
                             double tau) {
  InstantReport out;
  out.t = e.t;
  out.current = instantaneous_current(e);
  Dissipation d = dissipation(e);
  out.residual.resize(d.total.size());
  for (std::size_t j = 0; j < d.total.size(); ++j) {
    out.residual[j] = d.total[j] - d.bound[j];
  }
  out.dissipation = std::move(d.total);
  out.offdiag_ratio = offdiag_ratio(e);
  out.excess = std::move(d.excess);
  if (beta) {
    EntropyNoise en = entropy_noise(e.value(), *beta, omega, tau);
    out.entropy_rate = std::move(en.entropy_rate);
    out.noise_rate = std::move(en.noise_rate);
    out.regime_ok = en.regime_ok;
  }
  return out;
}

std::vector<double> cycle_charge(const std::vector<EnergyShift>& shifts, const CycleGrid& grid) {
  if (shifts.size() != grid.samples()) {
    throw Error(ErrorKind::GridMismatch, "shift sequence does not match the grid");
  }
  const std::size_t n = static_cast<std::size_t>(shifts.front().dim());
  std::vector<double> out(n);
  std::vector<double> rate(shifts.size());
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    for (std::size_t i = 0; i < shifts.size(); ++i) {
      rate[i] = shifts[i].value()(jj, jj).real() / kPlanck;
    }
    out[j] = periodic_integral(rate, grid);
  }
  return out;
}

std::vector<double> cycle_charge(const PumpModel& model, double mu, const CycleGrid& grid,
                                 const Tolerances& tol) {
  return cycle_charge(energy_shift_cycle(model, mu, grid, tol), grid);
}

std::vector<long long> winding_charge(const PumpModel& model, double mu, const CycleGrid& grid,
                                      const Tolerances& tol) {
  const auto shifts = energy_shift_cycle(model, mu, grid, tol);
  const RatioSweep sweep = offdiag_ratio_sweep(shifts);
  if (!(sweep.max_ratio < tol.optimal)) {
    std::ostringstream os;
    os << "off-diagonal ratio " << sweep.max_ratio << " at t = " << shifts[sweep.worst_index].t
       << " is not below tol_opt = " << tol.optimal;
    throw Error(ErrorKind::NotOptimal, os.str());
  }

  const Eigen::Index n = model.n_channels();
  const std::size_t count = grid.samples();
  const double dt = grid.spacing();
  std::vector<ComplexMatrix> nodes;
  nodes.reserve(count + 1);
  for (std::size_t i = 0; i <= count; ++i) {
    nodes.push_back(model.eval(grid.time(i), mu).matrix());
  }
  std::vector<ComplexMatrix> mids;
  mids.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    mids.push_back(model.eval(grid.time(i) + 0.5 * dt, mu).matrix());
  }

  // <psi_j(t_0)|psi_j(t)> = sum_m conj(S_0(j,m)) S_t(j,m)
  auto overlap = [](const ComplexMatrix& a, const ComplexMatrix& b, Eigen::Index j) {
    return a.row(j).dot(b.row(j));
  };

  const auto charge = cycle_charge(shifts, grid);
  std::vector<long long> out(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    double theta = 0.0;
    Complex previous = overlap(nodes[0], nodes[0], j);
    for (std::size_t i = 0; i < count; ++i) {
      const Complex mid = overlap(nodes[0], mids[i], j);
      const Complex next = overlap(nodes[0], nodes[i + 1], j);
      const double step = std::arg(std::conj(previous) * mid) + std::arg(std::conj(mid) * next);
      if (!(std::abs(step) < kPi)) {
        std::ostringstream os;
        os << "channel " << j + 1 << " phase moves by " << step << " between t = " << grid.time(i)
           << " and t = " << grid.time(i + 1) << "; refine the grid";
        throw Error(ErrorKind::PhaseStepTooLarge, os.str());
      }
      theta += step;
      previous = next;
    }
    const double turns = -theta / (2.0 * kPi);
    const auto rounded = static_cast<long long>(std::llround(turns));
    const auto jj = static_cast<std::size_t>(j);
    if (!(std::abs(charge[jj] - static_cast<double>(rounded)) < tol.charge)) {
      std::ostringstream os;
      os << "channel " << j + 1 << " winding " << rounded << " disagrees with cycle charge "
         << charge[jj];
      throw Error(ErrorKind::NumericalFailure, os.str());
    }
    out[jj] = rounded;
  }
  return out;
}

DequantizationSweep dequantization_sweep(const ModelConfig& base, const std::vector<double>& deltas) {
  if (std::find(deltas.begin(), deltas.end(), 0.0) == deltas.end()) {
    throw Error(ErrorKind::BadParamRange, "the sweep must include delta = 0", "deltas");
  }
  DequantizationSweep out;
  ModelConfig config = base;
  config.model = "perturbed-flux-loop";
  const CycleGrid grid = make_grid(config);
  for (double delta : deltas) {
    config.params["delta"] = delta;
    const PumpModel model = build_model(config);
    out.points.push_back(
        {delta, cycle_charge(model, config.energy.mu, grid, config.tolerances)});
  }

  const auto zero = std::find_if(out.points.begin(), out.points.end(),
                                 [](const SweepPoint& p) { return p.delta == 0.0; });
  out.integral_at_zero = std::all_of(zero->charge.begin(), zero->charge.end(), [&](double q) {
    return std::abs(q - std::round(q)) < base.tolerances.charge;
  });

  std::vector<const SweepPoint*> nonzero;
  for (const auto& p : out.points) {
    if (p.delta != 0.0) {
      nonzero.push_back(&p);
    }
  }
  std::sort(nonzero.begin(), nonzero.end(), [](const SweepPoint* a, const SweepPoint* b) {
    return std::abs(a->delta) < std::abs(b->delta);
  });
  if (nonzero.size() >= 3) {
    auto deviation = [&](const SweepPoint* p) {
      return std::abs(p->charge.front() - zero->charge.front());
    };
    out.shrinks_toward_zero =
        deviation(nonzero[0]) < deviation(nonzero[1]) && deviation(nonzero[1]) < deviation(nonzero[2]);
  }
  return out;
}

}  // namespace pump
