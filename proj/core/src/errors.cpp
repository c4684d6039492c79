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

#include "pump/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace pump {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnknownModel: return "UnknownModel";
    case ErrorKind::UnknownParam: return "UnknownParam";
    case ErrorKind::MissingParam: return "MissingParam";
    case ErrorKind::BadParamRange: return "BadParamRange";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::EnergyOutOfWindow: return "EnergyOutOfWindow";
    case ErrorKind::TargetInfeasible: return "TargetInfeasible";
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::NotOptimal: return "NotOptimal";
    case ErrorKind::PhaseStepTooLarge: return "PhaseStepTooLarge";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& message, const std::string& key) {
  std::string out(to_string(kind));
  if (!key.empty()) {
    out += "(" + key + ")";
  }
  out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, std::string message, std::string key)
    : std::runtime_error(compose(kind, message, key)), kind_(kind), key_(std::move(key)) {}

bool is_config_error(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnknownModel:
    case ErrorKind::UnknownParam:
    case ErrorKind::MissingParam:
    case ErrorKind::BadParamRange:
    case ErrorKind::ConfigError:
    case ErrorKind::EnergyOutOfWindow:
    case ErrorKind::TargetInfeasible:
      return true;
    default:
      return false;
  }
}

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  std::string shortest = os.str();
  for (int digits = 1; digits < 17; ++digits) {
    std::ostringstream trial;
    trial.precision(digits);
    trial << x;
    if (std::strtod(trial.str().c_str(), nullptr) == x) {
      shortest = trial.str();
      break;
    }
  }
  return shortest;
}

}  // namespace pump
