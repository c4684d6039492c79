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

namespace pump {

/// Numerical thresholds shared by every module. Config files may override
/// them through the "tolerances" block (keys tol_unitary, tol_herm,
/// tol_opt, tol_charge).
struct Tolerances {
  /// Frobenius norm of S^dagger S - I accepted for a unitary matrix.
  double unitary = 1e-10;
  /// Relative anti-Hermitian part of a raw energy shift before a warning.
  double hermitian = 1e-6;
  /// Off-diagonal ratio below which a pump counts as optimal.
  double optimal = 1e-8;
  /// Allowed distance between cycle charge and winding number.
  double charge = 1e-8;

  bool operator==(const Tolerances&) const = default;
};

/// Raw energy-shift hermiticity defect above which the grid is declared
/// under-resolved.
inline constexpr double kHardHermitianLimit = 1e-3;

/// Smallest singular value accepted by unitarize().
inline constexpr double kSingularThreshold = 1e-12;

}  // namespace pump
