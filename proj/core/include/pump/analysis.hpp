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

#include <nlohmann/json.hpp>

#include "pump/models.hpp"
#include "pump/optimal.hpp"
#include "pump/tolerances.hpp"
#include "pump/transport.hpp"

namespace pump {

inline constexpr const char* kReportSchemaVersion = "1.0";

/// Adiabaticity values at or above this trigger a warning.
inline constexpr double kAdiabaticityWarning = 0.1;

struct CycleReport {
  std::vector<double> charge;
  /// Present for optimal pumps whose phases resolve on the grid.
  std::optional<std::vector<long long>> winding;
  /// Integral of D_j over the cycle.
  std::vector<double> dissipated_energy;
  double adiabaticity = 0.0;
  bool is_optimal = false;
  double max_offdiag_ratio = 0.0;
  double period = 0.0;
  std::size_t samples = 0;

  bool operator==(const CycleReport&) const = default;
};

struct AnalysisReport {
  nlohmann::ordered_json config;
  std::vector<InstantReport> instants;
  CycleReport cycle;
  OptimalityVerdict optimality;
  double adiabaticity = 0.0;
  std::vector<std::string> warnings;
  std::string schema_version = kReportSchemaVersion;
  Tolerances tolerances;

  bool operator==(const AnalysisReport&) const = default;
};

/// Full cycle analysis of a configured pump.
AnalysisReport analyze(const ModelConfig& config);

/// Observables at a single time 0 <= t < T. Warnings are appended to
/// `warnings` when given.
InstantReport analyze_instant(const ModelConfig& config, double t,
                              std::vector<std::string>* warnings = nullptr);

}  // namespace pump
