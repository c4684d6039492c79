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
#include <string>
#include <vector>

#include "pump/matcore.hpp"
#include "pump/models.hpp"
#include "pump/tolerances.hpp"

/// Energy shift E = i dS/dt S^dagger, Wigner time delay
/// T = -i dS/dE S^dagger, the adiabaticity parameter, and the split of row
/// velocities into phase (fiber) and projective (base) parts.
namespace pump {

struct EnergyShift {
  HermitianMatrix matrix;
  double t = 0.0;
  double mu = 0.0;
  /// Relative anti-Hermitian part of i dS/dt S^dagger before symmetrization,
  /// measured against the largest ||E||_F on the cycle.
  double herm_defect = 0.0;
  /// Set when herm_defect exceeds the tolerance but not the hard limit.
  std::optional<std::string> warning;

  const ComplexMatrix& value() const noexcept { return matrix.matrix(); }
  Eigen::Index dim() const noexcept { return matrix.dim(); }
};

struct TimeDelay {
  HermitianMatrix matrix;
  double t = 0.0;
  double mu = 0.0;
};

struct VelocitySplit {
  /// |E_jj|^2, motion along the phase circle of row j.
  std::vector<double> fiber;
  /// sum_{k != j} |E_jk|^2, motion of row j in projective space.
  std::vector<double> base;
};

/// S(t_i, mu) on every grid node.
std::vector<UnitaryMatrix> sample_cycle(const PumpModel& model, double mu, const CycleGrid& grid);

/// dS/dt on every grid node, by the grid's derivative scheme.
std::vector<ComplexMatrix> time_derivative_samples(const PumpModel& model, double mu,
                                                   const CycleGrid& grid);

/// Energy shift at every grid node, computed as the matrix product
/// i (dS/dt) S^dagger followed by symmetrization. Throws EnergyOutOfWindow,
/// or NumericalFailure when any raw hermiticity defect exceeds 1e-3.
std::vector<EnergyShift> energy_shift_cycle(const PumpModel& model, double mu,
                                            const CycleGrid& grid, const Tolerances& tol = {});

/// Energy shift at an arbitrary time t, using a copy of `grid` shifted so
/// that its first node sits at t.
EnergyShift energy_shift_at(const PumpModel& model, double t, double mu, const CycleGrid& grid,
                            const Tolerances& tol = {});

/// Energy shift from row overlaps, E_jk = i <psi_k | d psi_j/dt> with psi_j
/// the j-th row of S and <a|b> = sum conj(a_m) b_m. Returned unsymmetrized.
std::vector<ComplexMatrix> energy_shift_rows(const PumpModel& model, double mu,
                                             const CycleGrid& grid);

/// Default energy step for time_delay: width of the window / energy samples.
double default_energy_step(const ModelConfig& config);

/// Wigner time delay at (t, mu) with a 4th-order central difference of step dE.
TimeDelay time_delay(const PumpModel& model, double t, double mu, double dE);

/// epsilon = (2 pi / T) * max_t ||T(t, mu)||_2 over the grid nodes.
double adiabaticity(const PumpModel& model, double mu, const CycleGrid& grid, double dE);

VelocitySplit velocity_split(const ComplexMatrix& energy_shift);
inline VelocitySplit velocity_split(const EnergyShift& e) { return velocity_split(e.value()); }

}  // namespace pump
