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

#include "pump/models.hpp"

#include <cmath>
#include <array>
#include <set>
#include <sstream>
#include <utility>

#include "pump/errors.hpp"
#include "pump/random.hpp"

namespace pump {

namespace {

constexpr int kMaxChannels = 16;
constexpr int kMaxHarmonic = 4;
constexpr int kMaxDegree = 8;

}  // namespace

void validate(const ModelConfig& config) {
  if (config.model.empty()) {
    throw Error(ErrorKind::ConfigError, "model name is empty", "model");
  }
  if (!(config.cycle.period > 0.0) || !std::isfinite(config.cycle.period)) {
    throw Error(ErrorKind::BadParamRange, "must be positive and finite", "cycle.period");
  }
  if (config.cycle.samples < 8 || !is_power_of_two(config.cycle.samples)) {
    throw Error(ErrorKind::BadParamRange,
                "must be a power of two >= 8, got " + std::to_string(config.cycle.samples),
                "cycle.samples");
  }
  const auto& w = config.energy.window;
  if (!(w.lo > 0.0) || !(w.hi > w.lo) || !std::isfinite(w.hi)) {
    throw Error(ErrorKind::BadParamRange, "window must satisfy 0 < lo < hi", "energy.window");
  }
  if (!std::isfinite(config.energy.mu) || !w.contains(config.energy.mu)) {
    throw Error(ErrorKind::EnergyOutOfWindow,
                "mu = " + format_number(config.energy.mu) + " outside [" + format_number(w.lo) + ", " +
                    format_number(w.hi) + "]",
                "energy.mu");
  }
  if (config.energy.samples < 1) {
    throw Error(ErrorKind::BadParamRange, "must be >= 1", "energy.samples");
  }
  const std::pair<const char*, double> tols[] = {
      {"tolerances.tol_unitary", config.tolerances.unitary},
      {"tolerances.tol_herm", config.tolerances.hermitian},
      {"tolerances.tol_opt", config.tolerances.optimal},
      {"tolerances.tol_charge", config.tolerances.charge},
  };
  for (const auto& [key, value] : tols) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw Error(ErrorKind::BadParamRange, "tolerance must be positive", key);
    }
  }
  if (config.beta && (!(*config.beta > 0.0) || !std::isfinite(*config.beta))) {
    throw Error(ErrorKind::BadParamRange, "inverse temperature must be positive", "beta");
  }
}

PumpModel::PumpModel(std::string name, Eigen::Index n_channels, double period,
                     EnergyWindow window, ParamMap params, Evaluator evaluator,
                     double tol_unitary)
    : name_(std::move(name)),
      n_channels_(n_channels),
      period_(period),
      window_(window),
      params_(std::move(params)),
      evaluator_(std::move(evaluator)),
      tol_unitary_(tol_unitary) {
  if (n_channels_ < 1) {
    throw Error(ErrorKind::BadParamRange, "model needs at least one channel", "n");
  }
  if (!(period_ > 0.0)) {
    throw Error(ErrorKind::BadParamRange, "period must be positive", "cycle.period");
  }
}

UnitaryMatrix PumpModel::eval(double t, double energy) const {
  if (!window_.contains(energy)) {
    throw Error(ErrorKind::EnergyOutOfWindow,
                "E = " + format_number(energy) + " outside [" + format_number(window_.lo) + ", " +
                    format_number(window_.hi) + "] for model " + name_);
  }
  ComplexMatrix s = evaluator_(t, energy);
  if (s.rows() != n_channels_ || s.cols() != n_channels_) {
    throw Error(ErrorKind::NumericalFailure, "model " + name_ + " returned a matrix of wrong size");
  }
  return UnitaryMatrix::certify(std::move(s), tol_unitary_);
}

PumpModel PumpModel::time_mapped(std::function<double(double)> f, std::string suffix) const {
  Evaluator base = evaluator_;
  Evaluator mapped = [base = std::move(base), f = std::move(f)](double t, double energy) {
    return base(f(t), energy);
  };
  return PumpModel(name_ + suffix, n_channels_, period_, window_, params_, std::move(mapped),
                   tol_unitary_);
}

UnitaryMatrix eval_s(const PumpModel& model, double t, double energy) {
  return model.eval(t, energy);
}

CycleGrid make_grid(const ModelConfig& config) {
  return CycleGrid(config.cycle.period, config.cycle.samples);
}

PumpModel constant_model(const UnitaryMatrix& s0, double period, EnergyWindow window) {
  ComplexMatrix m = s0.matrix();
  return PumpModel("constant", s0.dim(), period, window, {},
                   [m](double, double) { return m; });
}

double sinusoidal_time_map(double t, double period, double amplitude) {
  return t + amplitude * period / (2.0 * kPi) * std::sin(2.0 * kPi * t / period);
}

double sinusoidal_time_map_rate(double t, double period, double amplitude) {
  return 1.0 + amplitude * std::cos(2.0 * kPi * t / period);
}

PumpModel sinusoidal_reparameterization(const PumpModel& model, double amplitude) {
  if (!(std::abs(amplitude) < 1.0)) {
    throw Error(ErrorKind::BadParamRange, "reparameterization amplitude must satisfy |a| < 1",
                "amplitude");
  }
  const double period = model.period();
  return model.time_mapped(
      [period, amplitude](double t) { return sinusoidal_time_map(t, period, amplitude); },
      "+reparameterized");
}

// ---------------------------------------------------------------------------
// Registry

namespace {

const ModelInfo kFluxLoop{
    "flux-loop",
    "Two-channel loop threaded by a flux advancing w quanta per cycle; "
    "S = diag(exp(i(k l + Phi)), exp(i(k l - Phi))), linear dispersion E = v k.",
    {
        {"k_ell", std::nullopt, "k(mu) * l, the phase accumulated around the loop at mu"},
        {"v", 1.0, "group velocity of the linear dispersion"},
        {"w", 1.0, "flux quanta added per cycle (integer)"},
    }};

const ModelInfo kPerturbedFluxLoop{
    "perturbed-flux-loop",
    "Flux loop mixed by a time-dependent rotation: S = R(delta sin(2 pi t/T)) S_flux-loop; "
    "delta = 0 recovers flux-loop.",
    {
        {"k_ell", std::nullopt, "k(mu) * l, as in flux-loop"},
        {"delta", std::nullopt, "rotation amplitude in radians"},
        {"v", 1.0, "group velocity of the linear dispersion"},
        {"w", 1.0, "flux quanta added per cycle (integer)"},
    }};

const ModelInfo kDiagonalTimesConstant{
    "diagonal-times-constant",
    "S = diag(exp(i phi_j(t))) S0 with trigonometric phases and a fixed mixing unitary "
    "S0 = exp(i mix K), K the nearest-neighbour adjacency matrix.",
    {
        {"n", 2.0, "number of channels (1..16)"},
        {"mix", 0.5, "strength of the constant mixing unitary S0"},
        {"winding_<j>", 0.0, "integer winding of phi_j; winding_1 defaults to 1"},
        {"cos_<j>_<m>", 0.0, "coefficient of cos(2 pi m t/T) in phi_j, m = 1..4"},
        {"sin_<j>_<m>", 0.0, "coefficient of sin(2 pi m t/T) in phi_j, m = 1..4"},
    }};

const ModelInfo kRandomSmoothPath{
    "random-smooth-path",
    "S = exp(i H(t)) S0 with H a seeded random Hermitian trigonometric polynomial; "
    "energy independent.",
    {
        {"seed", 0.0, "generator seed (integer)"},
        {"n", 2.0, "number of channels (1..16)"},
        {"degree", 3.0, "trigonometric degree of H (0..8)"},
        {"amplitude", 1.0, "overall scale of H"},
    }};

class ParamReader {
 public:
  ParamReader(const ModelInfo& info, const ParamMap& params) : info_(info), params_(params) {}

  double real(const std::string& key) {
    used_.insert(key);
    if (auto it = params_.find(key); it != params_.end()) {
      if (!std::isfinite(it->second)) {
        throw Error(ErrorKind::BadParamRange, "must be finite", key);
      }
      return it->second;
    }
    for (const auto& spec : info_.params) {
      if (spec.name == key && spec.default_value) {
        return *spec.default_value;
      }
    }
    throw Error(ErrorKind::MissingParam, "required by model " + info_.name, key);
  }

  double real_or(const std::string& key, double fallback) {
    used_.insert(key);
    if (auto it = params_.find(key); it != params_.end()) {
      if (!std::isfinite(it->second)) {
        throw Error(ErrorKind::BadParamRange, "must be finite", key);
      }
      return it->second;
    }
    return fallback;
  }

  long long integer(const std::string& key, long long lo, long long hi) {
    const double x = real(key);
    return checked_integer(key, x, lo, hi);
  }

  long long integer_or(const std::string& key, long long fallback, long long lo, long long hi) {
    const double x = real_or(key, static_cast<double>(fallback));
    return checked_integer(key, x, lo, hi);
  }

  void reject_unused() const {
    for (const auto& [key, value] : params_) {
      if (!used_.contains(key)) {
        throw Error(ErrorKind::UnknownParam, "not a parameter of model " + info_.name, key);
      }
    }
  }

 private:
  static long long checked_integer(const std::string& key, double x, long long lo, long long hi) {
    if (x != std::round(x) || x < static_cast<double>(lo) || x > static_cast<double>(hi)) {
      throw Error(ErrorKind::BadParamRange,
                  "must be an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
                  key);
    }
    return static_cast<long long>(x);
  }

  const ModelInfo& info_;
  const ParamMap& params_;
  std::set<std::string> used_;
};

// Phase k(E) l for linear dispersion, anchored so that k(mu) l = k_ell.
struct FluxLoopParams {
  double k_ell;
  double v;
  double winding;
  double mu;
  double period;

  ComplexMatrix eval(double t, double energy) const {
    const double kl = k_ell * energy / mu;
    const double flux = 2.0 * kPi * winding * t / period;
    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    s(0, 0) = std::polar(1.0, kl + flux);
    s(1, 1) = std::polar(1.0, kl - flux);
    return s;
  }
};

FluxLoopParams read_flux_loop(ParamReader& reader, const ModelConfig& config) {
  FluxLoopParams p{};
  p.k_ell = reader.real("k_ell");
  p.v = reader.real("v");
  if (!(p.v > 0.0)) {
    throw Error(ErrorKind::BadParamRange, "velocity must be positive", "v");
  }
  p.winding = static_cast<double>(reader.integer("w", -1000000, 1000000));
  p.mu = config.energy.mu;
  p.period = config.cycle.period;
  return p;
}

ParamMap effective_params(const ModelInfo& info, const ParamMap& given) {
  ParamMap out = given;
  for (const auto& spec : info.params) {
    if (spec.default_value && spec.name.find('<') == std::string::npos) {
      out.emplace(spec.name, *spec.default_value);
    }
  }
  return out;
}

PumpModel build_flux_loop(const ModelConfig& config) {
  ParamReader reader(kFluxLoop, config.params);
  const FluxLoopParams p = read_flux_loop(reader, config);
  reader.reject_unused();
  ParamMap params = effective_params(kFluxLoop, config.params);
  params["ell"] = p.k_ell * p.v / p.mu;
  return PumpModel(kFluxLoop.name, 2, config.cycle.period, config.energy.window, params,
                   [p](double t, double energy) { return p.eval(t, energy); },
                   config.tolerances.unitary);
}

PumpModel build_perturbed_flux_loop(const ModelConfig& config) {
  ParamReader reader(kPerturbedFluxLoop, config.params);
  const FluxLoopParams p = read_flux_loop(reader, config);
  const double delta = reader.real("delta");
  reader.reject_unused();
  ParamMap params = effective_params(kPerturbedFluxLoop, config.params);
  params["ell"] = p.k_ell * p.v / p.mu;
  const double period = config.cycle.period;
  return PumpModel(
      kPerturbedFluxLoop.name, 2, period, config.energy.window, params,
      [p, delta, period](double t, double energy) {
        const double angle = delta * std::sin(2.0 * kPi * t / period);
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        ComplexMatrix rotation(2, 2);
        rotation << c, -s, s, c;
        ComplexMatrix out = rotation * p.eval(t, energy);
        return out;
      },
      config.tolerances.unitary);
}

ComplexMatrix adjacency(Eigen::Index n) {
  ComplexMatrix k = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    k(j, j + 1) = 1.0;
    k(j + 1, j) = 1.0;
  }
  return k;
}

PumpModel build_diagonal_times_constant(const ModelConfig& config) {
  ParamReader reader(kDiagonalTimesConstant, config.params);
  const auto n = static_cast<Eigen::Index>(reader.integer("n", 1, kMaxChannels));
  const double mix = reader.real("mix");

  struct Phase {
    double winding = 0.0;
    std::array<double, kMaxHarmonic> cos_coef{};
    std::array<double, kMaxHarmonic> sin_coef{};
  };
  std::vector<Phase> phases(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    const std::string idx = std::to_string(j + 1);
    auto& ph = phases[static_cast<std::size_t>(j)];
    ph.winding = static_cast<double>(
        reader.integer_or("winding_" + idx, j == 0 ? 1 : 0, -1000000, 1000000));
    for (int m = 1; m <= kMaxHarmonic; ++m) {
      const std::string suffix = idx + "_" + std::to_string(m);
      ph.cos_coef[static_cast<std::size_t>(m - 1)] = reader.real_or("cos_" + suffix, 0.0);
      ph.sin_coef[static_cast<std::size_t>(m - 1)] = reader.real_or("sin_" + suffix, 0.0);
    }
  }
  reader.reject_unused();

  const ComplexMatrix s0 = expi_hermitian(mix * adjacency(n));
  const double period = config.cycle.period;
  ParamMap params = config.params;
  params.emplace("n", static_cast<double>(n));
  params.emplace("mix", mix);
  return PumpModel(
      kDiagonalTimesConstant.name, n, period, config.energy.window, params,
      [phases, s0, period](double t, double) {
        const auto dim = s0.rows();
        ComplexVector diag(dim);
        const double x = 2.0 * kPi * t / period;
        for (Eigen::Index j = 0; j < dim; ++j) {
          const auto& ph = phases[static_cast<std::size_t>(j)];
          double phi = ph.winding * x;
          for (int m = 1; m <= kMaxHarmonic; ++m) {
            phi += ph.cos_coef[static_cast<std::size_t>(m - 1)] * std::cos(m * x) +
                   ph.sin_coef[static_cast<std::size_t>(m - 1)] * std::sin(m * x);
          }
          diag(j) = std::polar(1.0, phi);
        }
        ComplexMatrix out = diag.asDiagonal() * s0;
        return out;
      },
      config.tolerances.unitary);
}

ComplexMatrix random_hermitian(SeededGenerator& gen, Eigen::Index n, double scale) {
  ComplexMatrix h(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    h(j, j) = scale * gen.symmetric();
    for (Eigen::Index k = j + 1; k < n; ++k) {
      const double re = gen.symmetric();
      const double im = gen.symmetric();
      h(j, k) = scale * Complex(re, im);
      h(k, j) = std::conj(h(j, k));
    }
  }
  return h;
}

PumpModel build_random_smooth_path(const ModelConfig& config) {
  ParamReader reader(kRandomSmoothPath, config.params);
  const auto seed = reader.integer("seed", 0, (1LL << 53));
  const auto n = static_cast<Eigen::Index>(reader.integer("n", 1, kMaxChannels));
  const auto degree = static_cast<int>(reader.integer("degree", 0, kMaxDegree));
  const double amplitude = reader.real("amplitude");
  if (amplitude < 0.0) {
    throw Error(ErrorKind::BadParamRange, "must be non-negative", "amplitude");
  }
  reader.reject_unused();

  // Draw order: S0 generator, then (A_m, B_m) for m = 0..degree (B_0 skipped).
  SeededGenerator gen(static_cast<std::uint64_t>(seed));
  const ComplexMatrix s0 = expi_hermitian(random_hermitian(gen, n, kPi));
  std::vector<ComplexMatrix> cos_terms;
  std::vector<ComplexMatrix> sin_terms;
  for (int m = 0; m <= degree; ++m) {
    const double scale = amplitude / static_cast<double>(m + 1);
    cos_terms.push_back(random_hermitian(gen, n, scale));
    sin_terms.push_back(m == 0 ? ComplexMatrix::Zero(n, n) : random_hermitian(gen, n, scale));
  }

  const double period = config.cycle.period;
  return PumpModel(
      kRandomSmoothPath.name, n, period, config.energy.window,
      effective_params(kRandomSmoothPath, config.params),
      [s0, cos_terms, sin_terms, period](double t, double) {
        const double x = 2.0 * kPi * t / period;
        ComplexMatrix h = ComplexMatrix::Zero(s0.rows(), s0.cols());
        for (std::size_t m = 0; m < cos_terms.size(); ++m) {
          const double mx = static_cast<double>(m) * x;
          h += std::cos(mx) * cos_terms[m] + std::sin(mx) * sin_terms[m];
        }
        ComplexMatrix out = expi_hermitian(h) * s0;
        return out;
      },
      config.tolerances.unitary);
}

}  // namespace

const std::vector<ModelInfo>& model_registry() {
  static const std::vector<ModelInfo> registry{kFluxLoop, kPerturbedFluxLoop,
                                               kDiagonalTimesConstant, kRandomSmoothPath};
  return registry;
}

PumpModel build_model(const ModelConfig& config) {
  validate(config);
  if (config.model == kFluxLoop.name) {
    return build_flux_loop(config);
  }
  if (config.model == kPerturbedFluxLoop.name) {
    return build_perturbed_flux_loop(config);
  }
  if (config.model == kDiagonalTimesConstant.name) {
    return build_diagonal_times_constant(config);
  }
  if (config.model == kRandomSmoothPath.name) {
    return build_random_smooth_path(config);
  }
  throw Error(ErrorKind::UnknownModel, "no built-in model named '" + config.model + "'", "model");
}

}  // namespace pump
