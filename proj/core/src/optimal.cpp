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

#include "pump/optimal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pump/transport.hpp"

namespace pump {

namespace {

constexpr double kMotionless = 1e-14;
constexpr double kRatioFloor = 1e-6;
constexpr double kDecompositionTol = 1e-8;

double offdiag_norm(const ComplexMatrix& e) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < e.rows(); ++j) {
    for (Eigen::Index k = 0; k < e.cols(); ++k) {
      if (j != k) {
        sum += std::norm(e(j, k));
      }
    }
  }
  return std::sqrt(sum);
}

double wrap_to_pi(double x) { return std::remainder(x, 2.0 * kPi); }

}  // namespace

double offdiag_ratio(const ComplexMatrix& e) {
  const double total = e.norm();
  if (total < kMotionless) {
    return 0.0;
  }
  return offdiag_norm(e) / total;
}

RatioSweep offdiag_ratio_sweep(std::span<const EnergyShift> shifts) {
  double scale = 0.0;
  for (const auto& s : shifts) {
    scale = std::max(scale, s.value().norm());
  }
  RatioSweep out;
  if (scale < kMotionless) {
    return out;
  }
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    const ComplexMatrix& e = shifts[i].value();
    const double ratio = offdiag_norm(e) / std::max(e.norm(), kRatioFloor * scale);
    if (ratio > out.max_ratio) {
      out.max_ratio = ratio;
      out.worst_index = i;
    }
  }
  return out;
}

std::optional<DiagonalDecomposition> diagonal_decomposition(const PumpModel& model, double mu,
                                                            const CycleGrid& grid) {
  const auto samples = sample_cycle(model, mu, grid);
  const Eigen::Index n = model.n_channels();
  DiagonalDecomposition out;
  out.s0 = samples.front().matrix();
  out.phases.assign(static_cast<std::size_t>(n), std::vector<double>(samples.size(), 0.0));
  const ComplexMatrix s0_adjoint = out.s0.adjoint();

  std::vector<double> last(static_cast<std::size_t>(n), 0.0);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const ComplexMatrix& s = samples[i].matrix();
    const ComplexMatrix m = s * s0_adjoint;
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        if (j != k && !(std::abs(m(j, k)) < kDecompositionTol)) {
          return std::nullopt;
        }
      }
    }
    ComplexVector diag(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      const double raw = std::arg(m(j, j));
      const double phase = i == 0 ? raw : last[jj] + wrap_to_pi(raw - last[jj]);
      out.phases[jj][i] = phase;
      last[jj] = phase;
      diag(j) = std::polar(1.0, phase);
    }
    const double error = (diag.asDiagonal() * out.s0 - s).norm();
    out.reconstruction_error = std::max(out.reconstruction_error, error);
  }
  if (!(out.reconstruction_error < kDecompositionTol)) {
    return std::nullopt;
  }
  return out;
}

OptimalityVerdict optimality_verdict(std::span<const EnergyShift> shifts, const PumpModel& model,
                                     double mu, const CycleGrid& grid, const Tolerances& tol) {
  OptimalityVerdict out;
  const RatioSweep sweep = offdiag_ratio_sweep(shifts);
  out.max_offdiag_ratio = sweep.max_ratio;
  out.worst_time = shifts.empty() ? 0.0 : shifts[sweep.worst_index].t;
  out.is_optimal = sweep.max_ratio < tol.optimal;

  // Saturation threshold: the residual an off-diagonal part of relative size
  // tol_opt would produce at the cycle's peak speed, but never below the
  // rounding level of the subtraction D - (R_k/2) Qdot^2.
  double scale = 0.0;
  for (const auto& s : shifts) {
    scale = std::max(scale, s.value().norm());
  }
  const double relative =
      std::max(tol.optimal * tol.optimal, 1024.0 * std::numeric_limits<double>::epsilon());
  const double threshold = relative * scale * scale / (2.0 * kPlanck);
  const std::size_t n = static_cast<std::size_t>(model.n_channels());
  out.per_channel_saturation.assign(n, true);
  for (const auto& s : shifts) {
    const auto residual = bound_residual(s);
    for (std::size_t j = 0; j < n; ++j) {
      if (!(residual[j] <= threshold)) {
        out.per_channel_saturation[j] = false;
      }
    }
  }

  if (out.is_optimal) {
    out.decomposition = diagonal_decomposition(model, mu, grid);
  }
  return out;
}

OptimalityVerdict optimality_verdict(const PumpModel& model, double mu, const CycleGrid& grid,
                                     const Tolerances& tol) {
  const auto shifts = energy_shift_cycle(model, mu, grid, tol);
  return optimality_verdict(shifts, model, mu, grid, tol);
}

}  // namespace pump
