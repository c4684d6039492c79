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
#include <optional>
#include <span>
#include <vector>

#include "pump/matcore.hpp"
#include "pump/models.hpp"
#include "pump/shift.hpp"
#include "pump/tolerances.hpp"

namespace pump {

/// ||offdiag(E)||_F / ||E||_F, defined as 0 when ||E||_F < 1e-14.
double offdiag_ratio(const ComplexMatrix& e);
inline double offdiag_ratio(const EnergyShift& e) { return offdiag_ratio(e.value()); }

struct RatioSweep {
  double max_ratio = 0.0;
  std::size_t worst_index = 0;
};

/// Largest off-diagonal ratio over a cycle. The denominator at each node is
/// floored at 1e-6 times the largest ||E||_F of the cycle, so instants where
/// the pump momentarily stands still do not amplify rounding noise.
RatioSweep offdiag_ratio_sweep(std::span<const EnergyShift> shifts);

/// S(t) = U_d(t) S0 with U_d diagonal and S0 = S(t_0).
struct DiagonalDecomposition {
  /// phases[j][i]: unwrapped arg of U_d(t_i)_jj, phases[j][0] = 0.
  std::vector<std::vector<double>> phases;
  ComplexMatrix s0;
  /// max_i ||U_d(t_i) S0 - S(t_i)||_F
  double reconstruction_error = 0.0;

  bool operator==(const DiagonalDecomposition& other) const {
    return phases == other.phases && s0.rows() == other.s0.rows() &&
           s0.cols() == other.s0.cols() && s0 == other.s0 &&
           reconstruction_error == other.reconstruction_error;
  }
};

/// Absent unless every S(t_i) S0^dagger has all off-diagonal entries below
/// 1e-8 in absolute value.
std::optional<DiagonalDecomposition> diagonal_decomposition(const PumpModel& model, double mu,
                                                            const CycleGrid& grid);

struct OptimalityVerdict {
  bool is_optimal = false;
  double max_offdiag_ratio = 0.0;
  double worst_time = 0.0;
  std::vector<bool> per_channel_saturation;
  std::optional<DiagonalDecomposition> decomposition;

  bool operator==(const OptimalityVerdict&) const = default;
};

/// Sweeps the cycle: off-diagonal ratio against tol.optimal, per-channel
/// saturation of the dissipation bound, and (for optimal pumps) the
/// diagonal decomposition.
OptimalityVerdict optimality_verdict(const PumpModel& model, double mu, const CycleGrid& grid,
                                     const Tolerances& tol = {});
OptimalityVerdict optimality_verdict(std::span<const EnergyShift> shifts, const PumpModel& model,
                                     double mu, const CycleGrid& grid, const Tolerances& tol = {});

}  // namespace pump
