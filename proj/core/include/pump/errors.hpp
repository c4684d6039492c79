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

#include <stdexcept>
#include <string>
#include <string_view>

namespace pump {

enum class ErrorKind {
  // configuration and validation
  UnknownModel,
  UnknownParam,
  MissingParam,
  BadParamRange,
  ConfigError,
  EnergyOutOfWindow,
  TargetInfeasible,
  // numerics
  SingularInput,
  GridMismatch,
  NotUnitary,
  NumericalFailure,
  NotOptimal,
  PhaseStepTooLarge,
  // filesystem
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `key()` names the offending
/// parameter or config field when there is one (e.g. "cycle.samples").
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string key = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& key() const noexcept { return key_; }

 private:
  ErrorKind kind_;
  std::string key_;
};

/// True for errors caused by user input rather than by the numerics.
bool is_config_error(ErrorKind kind) noexcept;

/// Shortest round-trip decimal form of `x`, for error messages.
std::string format_number(double x);

}  // namespace pump
