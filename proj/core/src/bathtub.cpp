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

#include "pump/bathtub.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pump/errors.hpp"
#include "pump/matcore.hpp"
#include "pump/random.hpp"

namespace pump::bathtub {

DispersionKind parse_dispersion(std::string_view name) {
  if (name == "linear") {
    return DispersionKind::Linear;
  }
  if (name == "quadratic") {
    return DispersionKind::Quadratic;
  }
  throw Error(ErrorKind::BadParamRange, "dispersion must be linear or quadratic", "dispersion");
}

std::string_view to_string(DispersionKind kind) noexcept {
  return kind == DispersionKind::Linear ? "linear" : "quadratic";
}

double DispersionGrid::max_charge_flux() const {
  double sum = 0.0;
  for (double w : weight) {
    sum += w;
  }
  return sum / kPlanck;
}

double DispersionGrid::max_energy_step() const {
  double step = eps.empty() ? 0.0 : eps.front() - energy_at(0.0);
  for (std::size_t i = 1; i < eps.size(); ++i) {
    step = std::max(step, std::abs(eps[i] - eps[i - 1]));
  }
  return step;
}

double DispersionGrid::energy_at(double x) const {
  return kind == DispersionKind::Linear ? parameter * x : x * x / (2.0 * parameter);
}

DispersionGrid make_dispersion_grid(DispersionKind kind, double k_max, std::size_t n_k,
                                    double parameter) {
  if (n_k < 64) {
    throw Error(ErrorKind::BadParamRange, "need at least 64 momentum nodes", "nk");
  }
  if (!(k_max > 0.0) || !std::isfinite(k_max)) {
    throw Error(ErrorKind::BadParamRange, "must be positive", "kmax");
  }
  if (!(parameter > 0.0) || !std::isfinite(parameter)) {
    throw Error(ErrorKind::BadParamRange, "dispersion parameter must be positive", "parameter");
  }
  DispersionGrid g;
  g.kind = kind;
  g.k_max = k_max;
  g.n_k = n_k;
  g.parameter = parameter;
  const double dk = g.dk();
  g.k.resize(n_k);
  g.eps.resize(n_k);
  g.deps.resize(n_k);
  g.weight.resize(n_k);
  for (std::size_t i = 0; i < n_k; ++i) {
    const double k = (static_cast<double>(i) + 0.5) * dk;
    g.k[i] = k;
    g.eps[i] = g.energy_at(k);
    g.deps[i] = kind == DispersionKind::Linear ? parameter : k / parameter;
    g.weight[i] = g.deps[i] * dk;
  }
  return g;
}

Filling make_filling(const DispersionGrid& grid, std::vector<double> n) {
  if (n.size() != grid.n_k) {
    throw Error(ErrorKind::BadParamRange, "filling length does not match the grid", "n");
  }
  double q = 0.0;
  double e = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!(n[i] >= 0.0 && n[i] <= 1.0)) {
      throw Error(ErrorKind::BadParamRange,
                  "occupation " + format_number(n[i]) + " at node " + std::to_string(i) +
                      " outside [0, 1]",
                  "n");
    }
    q += n[i] * grid.weight[i];
    e += n[i] * grid.eps[i] * grid.weight[i];
  }
  return Filling{std::move(n), q / kPlanck, e / kPlanck};
}

Filling step_filling(const DispersionGrid& grid, double mu) {
  std::vector<double> n(grid.n_k, 0.0);
  for (std::size_t i = 0; i < grid.n_k; ++i) {
    n[i] = grid.eps[i] < mu ? 1.0 : 0.0;
  }
  return make_filling(grid, std::move(n));
}

Filling greedy_minimize(const DispersionGrid& grid, double target_qdot) {
  const double capacity = grid.max_charge_flux();
  if (!(target_qdot >= 0.0) || target_qdot > capacity * (1.0 + 1e-14)) {
    throw Error(ErrorKind::TargetInfeasible,
                "target Qdot must lie in [0, " + format_number(capacity) + "]", "target_Qdot");
  }
  std::vector<std::size_t> order(grid.n_k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return grid.eps[a] < grid.eps[b]; });

  std::vector<double> n(grid.n_k, 0.0);
  double remaining = kPlanck * target_qdot;
  for (std::size_t i : order) {
    if (remaining <= 0.0) {
      break;
    }
    const double w = grid.weight[i];
    if (w <= remaining) {
      n[i] = 1.0;
      remaining -= w;
    } else {
      n[i] = remaining / w;
      remaining = 0.0;
    }
  }
  return make_filling(grid, std::move(n));
}

FluxPair analytic_minimum(double mu) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) {
    throw Error(ErrorKind::BadParamRange, "chemical potential must be non-negative", "mu");
  }
  return FluxPair{mu / kPlanck, mu * mu / (2.0 * kPlanck)};
}

Filling project_to_charge(const DispersionGrid& grid, const std::vector<double>& n,
                          double target_qdot) {
  auto shifted = [&](double lambda) {
    std::vector<double> out(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
      out[i] = std::clamp(n[i] + lambda, 0.0, 1.0);
    }
    return out;
  };
  auto charge = [&](const std::vector<double>& m) {
    double q = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      q += m[i] * grid.weight[i];
    }
    return q / kPlanck;
  };
  double lo = -1.0;
  double hi = 1.0;
  for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) {
      break;
    }
    if (charge(shifted(mid)) < target_qdot) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const auto low = shifted(lo);
  const auto high = shifted(hi);
  const bool pick_low =
      std::abs(charge(low) - target_qdot) <= std::abs(charge(high) - target_qdot);
  return make_filling(grid, pick_low ? low : high);
}

BoundReport verify_bound(const DispersionGrid& grid, std::size_t trials, std::uint64_t seed,
                         double mu) {
  if (trials < 1) {
    throw Error(ErrorKind::BadParamRange, "need at least one trial", "trials");
  }
  const double half_rk = 0.5 * kVonKlitzing;
  BoundReport report;
  report.trials = trials;
  report.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < trials; ++t) {
    SeededGenerator gen(seed + t);
    std::vector<double> n(grid.n_k);
    for (auto& x : n) {
      x = gen.uniform();
    }
    const Filling f = make_filling(grid, std::move(n));
    const double margin = f.Edot - half_rk * f.Qdot * f.Qdot;
    report.min_margin = std::min(report.min_margin, margin);
    report.max_violation = std::max(report.max_violation, -margin);
    if (margin < -1e-12) {
      ++report.violations;
    }
    const Filling best = greedy_minimize(grid, f.Qdot);
    report.greedy_max_gap =
        std::max(report.greedy_max_gap, std::abs(best.Edot - half_rk * best.Qdot * best.Qdot));
  }
  const Filling step = step_filling(grid, mu);
  report.step_gap = step.Edot - half_rk * step.Qdot * step.Qdot;
  return report;
}

TwoSidedBound two_sided_bound(double mu_minus, const Filling& source, const DispersionGrid& grid) {
  if (!(mu_minus >= 0.0)) {
    throw Error(ErrorKind::BadParamRange, "reservoir chemical potential must be >= 0", "mu_minus");
  }
  if (source.n.size() != grid.n_k) {
    throw Error(ErrorKind::BadParamRange, "filling does not match the grid", "source");
  }
  const FluxPair sink = analytic_minimum(mu_minus);
  const double edot = source.Edot - sink.Edot;
  const double qdot = source.Qdot - sink.Qdot;
  return TwoSidedBound{edot - mu_minus * qdot, 0.5 * kVonKlitzing * qdot * qdot};
}

}  // namespace pump::bathtub
