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

#include "pump/shift.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pump/errors.hpp"

namespace pump {

std::vector<UnitaryMatrix> sample_cycle(const PumpModel& model, double mu, const CycleGrid& grid) {
  std::vector<UnitaryMatrix> out;
  out.reserve(grid.samples());
  for (std::size_t i = 0; i < grid.samples(); ++i) {
    out.push_back(model.eval(grid.time(i), mu));
  }
  return out;
}

namespace {

std::vector<ComplexMatrix> raw_samples(const std::vector<UnitaryMatrix>& s) {
  std::vector<ComplexMatrix> out;
  out.reserve(s.size());
  for (const auto& u : s) {
    out.push_back(u.matrix());
  }
  return out;
}

ComplexMatrix difference_derivative(const PumpModel& model, double t, double mu, double h) {
  return central_difference([&](double x) { return model.eval(x, mu).matrix(); }, t, h);
}

std::vector<ComplexMatrix> derivative_from_samples(const PumpModel& model, double mu,
                                                   const CycleGrid& grid,
                                                   const std::vector<ComplexMatrix>& samples) {
  if (grid.scheme() == DerivativeScheme::Spectral) {
    return spectral_derivative(samples, grid);
  }
  std::vector<ComplexMatrix> out;
  out.reserve(grid.samples());
  for (std::size_t i = 0; i < grid.samples(); ++i) {
    out.push_back(difference_derivative(model, grid.time(i), mu, grid.difference_step()));
  }
  return out;
}

std::vector<EnergyShift> shifts_from_samples(const std::vector<ComplexMatrix>& s,
                                             const std::vector<ComplexMatrix>& ds,
                                             const std::vector<double>& times, double mu,
                                             const Tolerances& tol) {
  const Complex i_unit(0.0, 1.0);
  std::vector<ComplexMatrix> raw;
  raw.reserve(s.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    raw.push_back(i_unit * ds[i] * s[i].adjoint());
    scale = std::max(scale, raw.back().norm());
  }

  std::vector<EnergyShift> out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    HermitianMatrix h = HermitianMatrix::symmetrize(raw[i], scale);
    const double defect = h.defect();
    if (defect > kHardHermitianLimit) {
      std::ostringstream os;
      os << "energy shift hermiticity defect " << defect << " at t = " << times[i]
         << " exceeds 1e-3; refine the time grid";
      throw Error(ErrorKind::NumericalFailure, os.str());
    }
    std::optional<std::string> warning;
    if (defect > tol.hermitian) {
      std::ostringstream os;
      os << "hermiticity defect " << defect << " at t = " << times[i] << " above tol_herm";
      warning = os.str();
    }
    out.push_back(EnergyShift{std::move(h), times[i], mu, defect, std::move(warning)});
  }
  return out;
}

}  // namespace

std::vector<ComplexMatrix> time_derivative_samples(const PumpModel& model, double mu,
                                                   const CycleGrid& grid) {
  const auto s = raw_samples(sample_cycle(model, mu, grid));
  return derivative_from_samples(model, mu, grid, s);
}

std::vector<EnergyShift> energy_shift_cycle(const PumpModel& model, double mu,
                                            const CycleGrid& grid, const Tolerances& tol) {
  const auto s = raw_samples(sample_cycle(model, mu, grid));
  const auto ds = derivative_from_samples(model, mu, grid, s);
  return shifts_from_samples(s, ds, grid.times(), mu, tol);
}

EnergyShift energy_shift_at(const PumpModel& model, double t, double mu, const CycleGrid& grid,
                            const Tolerances& tol) {
  if (grid.scheme() == DerivativeScheme::CentralDifference) {
    const ComplexMatrix s = model.eval(t, mu).matrix();
    const ComplexMatrix ds = difference_derivative(model, t, mu, grid.difference_step());
    return shifts_from_samples({s}, {ds}, {t}, mu, tol).front();
  }
  const PumpModel shifted = model.time_mapped([t](double x) { return x + t; }, "");
  const auto s = raw_samples(sample_cycle(shifted, mu, grid));
  const auto ds = spectral_derivative(s, grid);
  std::vector<double> times = grid.times();
  for (auto& x : times) {
    x += t;
  }
  // Defect scale is taken over the shifted cycle, as in energy_shift_cycle.
  auto shifts = shifts_from_samples(s, ds, times, mu, tol);
  return std::move(shifts.front());
}

std::vector<ComplexMatrix> energy_shift_rows(const PumpModel& model, double mu,
                                             const CycleGrid& grid) {
  const auto samples = raw_samples(sample_cycle(model, mu, grid));
  const std::size_t count = samples.size();
  const Eigen::Index n = model.n_channels();

  // rows[j][i] = psi_j(t_i); drows[j][i] = d psi_j/dt (t_i)
  std::vector<std::vector<ComplexVector>> rows(static_cast<std::size_t>(n));
  std::vector<std::vector<ComplexVector>> drows(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    auto& row = rows[static_cast<std::size_t>(j)];
    auto& drow = drows[static_cast<std::size_t>(j)];
    row.resize(count);
    drow.assign(count, ComplexVector::Zero(n));
    for (std::size_t i = 0; i < count; ++i) {
      row[i] = samples[i].row(j).transpose();
    }
    if (grid.scheme() == DerivativeScheme::Spectral) {
      std::vector<Complex> component(count);
      for (Eigen::Index m = 0; m < n; ++m) {
        for (std::size_t i = 0; i < count; ++i) {
          component[i] = row[i](m);
        }
        const auto d = spectral_derivative(component, grid);
        for (std::size_t i = 0; i < count; ++i) {
          drow[i](m) = d[i];
        }
      }
    } else {
      for (std::size_t i = 0; i < count; ++i) {
        const double h = grid.difference_step();
        drow[i] = central_difference(
            [&](double x) -> ComplexVector { return model.eval(x, mu).matrix().row(j).transpose(); },
            grid.time(i), h);
      }
    }
  }

  const Complex i_unit(0.0, 1.0);
  std::vector<ComplexMatrix> out(count, ComplexMatrix::Zero(n, n));
  for (std::size_t i = 0; i < count; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& dpsi_j = drows[static_cast<std::size_t>(j)][i];
      for (Eigen::Index k = 0; k < n; ++k) {
        const auto& psi_k = rows[static_cast<std::size_t>(k)][i];
        Complex overlap(0.0, 0.0);
        for (Eigen::Index m = 0; m < n; ++m) {
          overlap += std::conj(psi_k(m)) * dpsi_j(m);
        }
        out[i](j, k) = i_unit * overlap;
      }
    }
  }
  return out;
}

double default_energy_step(const ModelConfig& config) {
  return config.energy.window.width() / static_cast<double>(config.energy.samples);
}

TimeDelay time_delay(const PumpModel& model, double t, double mu, double dE) {
  if (!(dE > 0.0) || !std::isfinite(dE)) {
    throw Error(ErrorKind::BadParamRange, "energy step must be positive", "dE");
  }
  const auto& window = model.energy_window();
  if (!window.contains(mu - 2.0 * dE) || !window.contains(mu + 2.0 * dE)) {
    std::ostringstream os;
    os << "stencil [" << mu - 2.0 * dE << ", " << mu + 2.0 * dE << "] leaves the energy window";
    throw Error(ErrorKind::EnergyOutOfWindow, os.str(), "energy.mu");
  }
  const ComplexMatrix s = model.eval(t, mu).matrix();
  const ComplexMatrix ds =
      central_difference([&](double e) { return model.eval(t, e).matrix(); }, mu, dE);
  const ComplexMatrix raw = Complex(0.0, -1.0) * ds * s.adjoint();
  return TimeDelay{HermitianMatrix::symmetrize(raw), t, mu};
}

double adiabaticity(const PumpModel& model, double mu, const CycleGrid& grid, double dE) {
  double tau = 0.0;
  for (std::size_t i = 0; i < grid.samples(); ++i) {
    tau = std::max(tau, spectral_norm(time_delay(model, grid.time(i), mu, dE).matrix.matrix()));
  }
  return 2.0 * kPi / grid.period() * tau;
}

VelocitySplit velocity_split(const ComplexMatrix& e) {
  const auto n = e.rows();
  VelocitySplit out;
  out.fiber.resize(static_cast<std::size_t>(n));
  out.base.resize(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    double base = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      if (k != j) {
        base += std::norm(e(j, k));
      }
    }
    out.fiber[static_cast<std::size_t>(j)] = std::norm(e(j, j));
    out.base[static_cast<std::size_t>(j)] = base;
  }
  return out;
}

}  // namespace pump
