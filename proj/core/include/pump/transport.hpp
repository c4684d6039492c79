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

#pragma once

#include <optional>
#include <vector>

#include "pump/matcore.hpp"
#include "pump/models.hpp"
#include "pump/shift.hpp"
#include "pump/tolerances.hpp"

/// Transport observables derived from the energy shift E (natural units,
/// hbar = e = 1, h = R_k = 2 pi). Per-channel quantities are indexed like
/// the rows of S.
namespace pump {

/// Qdot_j = E_jj / 2 pi: net current entering reservoir j.
std::vector<double> instantaneous_current(const ComplexMatrix& e);
inline std::vector<double> instantaneous_current(const EnergyShift& e) {
  return instantaneous_current(e.value());
}

struct Dissipation {
  /// D_j = Edot_j - mu Qdot_j = (E^2)_jj / 4 pi.
  std::vector<double> total;
  /// (R_k / 2) Qdot_j^2, the part fixed by the current.
  std::vector<double> bound;
  /// sum_{k != j} |E_jk|^2 / 4 pi.
  std::vector<double> excess;
};

Dissipation dissipation(const ComplexMatrix& e);
inline Dissipation dissipation(const EnergyShift& e) { return dissipation(e.value()); }

/// r_j = D_j - (R_k/2) Qdot_j^2, obtained by subtraction so that the
/// inequality r_j >= 0 is actually exercised.
std::vector<double> bound_residual(const ComplexMatrix& e);
inline std::vector<double> bound_residual(const EnergyShift& e) {
  return bound_residual(e.value());
}

struct EntropyNoise {
  std::vector<double> entropy_rate;  // Sdot_j = beta/(4 pi) sum_{k!=j} |E_jk|^2
  std::vector<double> noise_rate;    // Ndot_j = beta/(12 pi) sum_{k!=j} |E_jk|^2
  /// hbar omega < 1/beta < hbar / tau; informational only.
  bool regime_ok = false;
};

/// Entropy and noise production rates. `omega` is the pump frequency and
/// `tau` the scattering time scale (0 means instantaneous scattering).
EntropyNoise entropy_noise(const ComplexMatrix& e, double beta, double omega, double tau);

/// Leading semiclassical symbol of the outgoing distribution on channel j:
/// n_+(E) = theta(E - mu) + a_j delta(E - mu) + b_j delta'(E - mu).
/// The O(eps^2) correction to a_j is not included.
struct OutgoingSymbol {
  std::vector<double> delta_weight;        // a_j = E_jj
  std::vector<double> delta_prime_weight;  // b_j = -(E^2)_jj / 2
  double mu = 0.0;
};

OutgoingSymbol outgoing_symbol(const ComplexMatrix& e, double mu = 0.0);
inline OutgoingSymbol outgoing_symbol(const EnergyShift& e) {
  return outgoing_symbol(e.value(), e.mu);
}

/// (1/2 pi) * integral of g(E) (n_+j - n_-)(E) dE for the symbol, where the
/// test function is given by its value and slope at mu. With g = 1 this is
/// the current, with g = E - mu the dissipation.
std::vector<double> symbol_moment(const OutgoingSymbol& symbol, double g_at_mu,
                                  double g_slope_at_mu);

/// Dissipation recovered from the symbol: moment with g(E) = E - mu.
std::vector<double> symbol_dissipation(const OutgoingSymbol& symbol);

struct InstantReport {
  double t = 0.0;
  std::vector<double> current;
  std::vector<double> dissipation;
  std::vector<double> excess;
  std::vector<double> residual;
  /// ||offdiag(E)||_F / ||E||_F at this instant.
  double offdiag_ratio = 0.0;
  std::optional<std::vector<double>> entropy_rate;
  std::optional<std::vector<double>> noise_rate;
  /// Present iff beta was supplied.
  std::optional<bool> regime_ok;

  bool operator==(const InstantReport&) const = default;
};

InstantReport instant_report(const EnergyShift& e, std::optional<double> beta, double omega,
                             double tau);

/// Q_j = integral over the cycle of Qdot_j.
std::vector<double> cycle_charge(const PumpModel& model, double mu, const CycleGrid& grid,
                                 const Tolerances& tol = {});
std::vector<double> cycle_charge(const std::vector<EnergyShift>& shifts, const CycleGrid& grid);

/// Integer charge from the phase each row accumulates over the cycle.
/// Sign follows Qdot_j = E_jj / 2 pi, i.e. Q_j = -(theta_j(T) - theta_j(0)) / 2 pi.
/// Throws NotOptimal if the pump is not optimal at tol.optimal,
/// PhaseStepTooLarge if a grid step moves a phase by pi or more, and
/// NumericalFailure if the result disagrees with cycle_charge by tol.charge.
std::vector<long long> winding_charge(const PumpModel& model, double mu, const CycleGrid& grid,
                                      const Tolerances& tol = {});

struct SweepPoint {
  double delta = 0.0;
  std::vector<double> charge;
};

struct DequantizationSweep {
  std::vector<SweepPoint> points;
  /// Integer charge at delta = 0 (within tol.charge).
  bool integral_at_zero = false;
  /// |Q_1(delta) - Q_1(0)| strictly decreasing over the three smallest
  /// nonzero |delta| values.
  bool shrinks_toward_zero = false;
};

/// Cycle charges of perturbed-flux-loop for each delta. `base` supplies
/// k_ell, v, w and the grid/energy settings; its "delta" is overridden.
DequantizationSweep dequantization_sweep(const ModelConfig& base, const std::vector<double>& deltas);

}  // namespace pump
