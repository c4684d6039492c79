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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pump/matcore.hpp"
#include "pump/tolerances.hpp"

namespace pump {

using ParamMap = std::map<std::string, double>;

struct EnergyWindow {
  double lo = 0.5;
  double hi = 1.5;

  bool contains(double energy) const noexcept { return energy >= lo && energy <= hi; }
  double width() const noexcept { return hi - lo; }
  bool operator==(const EnergyWindow&) const = default;
};

struct CycleSettings {
  double period = 1.0;
  std::size_t samples = 256;
  bool operator==(const CycleSettings&) const = default;
};

struct EnergySettings {
  double mu = 1.0;
  EnergyWindow window;
  /// Energy resolution of the window; the time-delay step is width/samples.
  std::size_t samples = 10000;
  bool operator==(const EnergySettings&) const = default;
};

/// Everything needed to build and analyze one pump.
struct ModelConfig {
  std::string model;
  ParamMap params;
  CycleSettings cycle;
  EnergySettings energy;
  Tolerances tolerances;
  /// Inverse temperature; entropy and noise rates are reported only when set.
  std::optional<double> beta;

  bool operator==(const ModelConfig&) const = default;
};

/// Checks the invariants that do not depend on the model family: positive
/// period, power-of-two samples, well-formed window containing mu, positive
/// tolerances and beta. Throws Error with the dotted field name as key.
void validate(const ModelConfig& config);

/// A periodic family (t, E) -> S(t, E) of unitary scattering matrices.
/// Immutable; eval() is pure and safe to call concurrently.
class PumpModel {
 public:
  using Evaluator = std::function<ComplexMatrix(double t, double energy)>;

  PumpModel(std::string name, Eigen::Index n_channels, double period, EnergyWindow window,
            ParamMap params, Evaluator evaluator, double tol_unitary = Tolerances{}.unitary);

  /// S(t, E). Throws EnergyOutOfWindow or NotUnitary.
  UnitaryMatrix eval(double t, double energy) const;

  const std::string& name() const noexcept { return name_; }
  Eigen::Index n_channels() const noexcept { return n_channels_; }
  double period() const noexcept { return period_; }
  const EnergyWindow& energy_window() const noexcept { return window_; }
  const ParamMap& params() const noexcept { return params_; }
  double tol_unitary() const noexcept { return tol_unitary_; }

  /// The model S(f(t), E). `f` must satisfy f(t + T) = f(t) + T.
  PumpModel time_mapped(std::function<double(double)> f, std::string suffix) const;

 private:
  std::string name_;
  Eigen::Index n_channels_;
  double period_;
  EnergyWindow window_;
  ParamMap params_;
  Evaluator evaluator_;
  double tol_unitary_;
};

/// Free-function spelling of PumpModel::eval.
UnitaryMatrix eval_s(const PumpModel& model, double t, double energy);

/// Builds a registered model. Throws UnknownModel, UnknownParam,
/// MissingParam or BadParamRange naming the offending key.
PumpModel build_model(const ModelConfig& config);

/// Time grid described by config.cycle.
CycleGrid make_grid(const ModelConfig& config);

/// Motionless pump S(t, E) = s0.
PumpModel constant_model(const UnitaryMatrix& s0, double period = 1.0, EnergyWindow window = {});

/// t -> t + a (T / 2 pi) sin(2 pi t / T); monotone for |a| < 1.
double sinusoidal_time_map(double t, double period, double amplitude);
double sinusoidal_time_map_rate(double t, double period, double amplitude);

/// S(t + a (T/2pi) sin(2 pi t/T), E).
PumpModel sinusoidal_reparameterization(const PumpModel& model, double amplitude = 0.1);

struct ParamSpec {
  std::string name;
  std::optional<double> default_value;  // absent: required
  std::string description;
};

struct ModelInfo {
  std::string name;
  std::string description;
  std::vector<ParamSpec> params;
};

/// The built-in models, in a fixed order.
const std::vector<ModelInfo>& model_registry();

}  // namespace pump
