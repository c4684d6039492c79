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

#include <string>

#include <nlohmann/json.hpp>

#include "pump/analysis.hpp"
#include "pump/bathtub.hpp"

/// JSON and CSV encodings of analysis results. Key order is fixed and every
/// floating-point number is written with 17 significant digits, so equal
/// reports always serialize to identical bytes.
namespace pump {

nlohmann::ordered_json to_json(const InstantReport& r);
nlohmann::ordered_json to_json(const OptimalityVerdict& v);
nlohmann::ordered_json to_json(const CycleReport& c);
nlohmann::ordered_json to_json(const AnalysisReport& r);

InstantReport instant_from_json(const nlohmann::ordered_json& j);
OptimalityVerdict verdict_from_json(const nlohmann::ordered_json& j);
CycleReport cycle_from_json(const nlohmann::ordered_json& j);
AnalysisReport report_from_json(const nlohmann::ordered_json& j);

/// Deterministic text form of a JSON value (2-space indentation, scalar
/// arrays on one line, floats as %.17g).
std::string serialize(const nlohmann::ordered_json& j);

/// Columns t, Qdot_1..n, D_1..n, Sdot_1..n, Ndot_1..n, rho. Entropy and
/// noise cells are empty when no inverse temperature was configured.
std::string to_csv(const AnalysisReport& r);

nlohmann::ordered_json models_to_json();

struct BathtubSummary {
  double greedy_edot = 0.0;
  double analytic_edot = 0.0;
  std::size_t violations = 0;
  double max_violation = 0.0;
};

nlohmann::ordered_json to_json(const BathtubSummary& s);

}  // namespace pump
