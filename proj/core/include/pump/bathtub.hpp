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

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

/// Brute-force check of the single-channel dissipation bound
/// Edot - mu Qdot >= (R_k / 2) Qdot^2 on a discretized momentum grid, with no
/// reference to scattering matrices. A source is a filling 0 <= n(k) <= 1 of
/// right-moving states; for fixed charge flux the energy flux is minimized
/// by filling the lowest energies first.
namespace pump::bathtub {

enum class DispersionKind { Linear, Quadratic };

DispersionKind parse_dispersion(std::string_view name);
std::string_view to_string(DispersionKind kind) noexcept;

/// Midpoint nodes k_i = (i + 1/2) k_max / n_k of eps(k) = v k (linear) or
/// k^2 / 2m (quadratic), with quadrature weights w_i = eps'(k_i) dk.
struct DispersionGrid {
  DispersionKind kind = DispersionKind::Linear;
  double k_max = 0.0;
  std::size_t n_k = 0;
  /// v for linear, m for quadratic.
  double parameter = 1.0;
  std::vector<double> k;
  std::vector<double> eps;
  std::vector<double> deps;
  std::vector<double> weight;

  double dk() const noexcept { return k_max / static_cast<double>(n_k); }
  /// (1 / 2 pi) sum w_i: the largest attainable Qdot.
  double max_charge_flux() const;
  /// Largest energy gap between neighbouring nodes.
  double max_energy_step() const;
  double energy_at(double k) const;
};

/// Throws BadParamRange for n_k < 64, non-positive k_max or parameter.
DispersionGrid make_dispersion_grid(DispersionKind kind, double k_max, std::size_t n_k,
                                    double parameter = 1.0);

struct Filling {
  std::vector<double> n;
  double Qdot = 0.0;  // (1/2pi) sum n_i w_i
  double Edot = 0.0;  // (1/2pi) sum n_i eps_i w_i
};

/// Evaluates the fluxes of an occupation vector; throws BadParamRange when an
/// entry leaves [0, 1] or the length does not match the grid.
Filling make_filling(const DispersionGrid& grid, std::vector<double> n);

/// n_i = 1 for eps_i < mu, else 0.
Filling step_filling(const DispersionGrid& grid, double mu);

/// Minimizer of Edot at fixed Qdot: nodes filled in ascending eps (ties by
/// index) until the budget is used, the marginal node fractionally.
/// Throws TargetInfeasible outside [0, max_charge_flux()].
Filling greedy_minimize(const DispersionGrid& grid, double target_qdot);

struct FluxPair {
  double Qdot = 0.0;
  double Edot = 0.0;
};

/// Continuum Fermi sea at mu: (mu / 2 pi, mu^2 / 4 pi).
FluxPair analytic_minimum(double mu);

/// Shifts `n` uniformly and clips it to [0, 1] so that the result carries
/// `target_qdot` (bisection on the shift).
Filling project_to_charge(const DispersionGrid& grid, const std::vector<double>& n,
                          double target_qdot);

struct BoundReport {
  std::size_t trials = 0;
  /// Random fillings with Edot - pi Qdot^2 < -1e-12.
  std::size_t violations = 0;
  /// max(0, pi Qdot^2 - Edot) over the trials.
  double max_violation = 0.0;
  /// Smallest Edot - pi Qdot^2 seen over the trials.
  double min_margin = 0.0;
  /// Largest |Edot_greedy - pi Qdot^2| at the trial charges.
  double greedy_max_gap = 0.0;
  /// Edot - pi Qdot^2 for the step filling at mu.
  double step_gap = 0.0;
};

/// Draws `trials` fillings with n_i ~ U[0,1) (trial t seeded with seed + t)
/// and checks each against the bound; also measures how closely the greedy
/// minimizer and the Fermi step at `mu` saturate it.
BoundReport verify_bound(const DispersionGrid& grid, std::size_t trials, std::uint64_t seed,
                         double mu = 1.0);

struct TwoSidedBound {
  double lhs = 0.0;  // Edot - mu_minus Qdot
  double rhs = 0.0;  // (R_k / 2) Qdot^2
};

/// Channel between `source` and a zero-temperature reservoir at mu_minus;
/// net fluxes Edot = Edot_+ - mu_-^2/4pi and Qdot = Qdot_+ - mu_-/2pi.
TwoSidedBound two_sided_bound(double mu_minus, const Filling& source, const DispersionGrid& grid);

}  // namespace pump::bathtub
