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

#include "pump/report.hpp"

#include <cmath>
#include <cstdio>
#include <algorithm>
#include <sstream>

#include "pump/config_io.hpp"
#include "pump/errors.hpp"

namespace pump {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json optional_array(const std::optional<std::vector<double>>& v) {
  return v ? ordered_json(*v) : ordered_json();
}

std::optional<std::vector<double>> optional_array_from(const ordered_json& j) {
  if (j.is_null()) {
    return std::nullopt;
  }
  return j.get<std::vector<double>>();
}

std::string format_double(double x) {
  if (!std::isfinite(x)) {
    throw Error(ErrorKind::NumericalFailure, "non-finite value in report");
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string out(buf);
  if (out.find_first_of(".e") == std::string::npos) {
    out += ".0";
  }
  return out;
}

bool is_scalar(const ordered_json& j) { return !j.is_object() && !j.is_array(); }

void write(std::ostringstream& os, const ordered_json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case json::value_t::null:
      os << "null";
      return;
    case json::value_t::boolean:
      os << (j.get<bool>() ? "true" : "false");
      return;
    case json::value_t::number_integer:
      os << j.get<std::int64_t>();
      return;
    case json::value_t::number_unsigned:
      os << j.get<std::uint64_t>();
      return;
    case json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    case json::value_t::string:
      os << j.dump();
      return;
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      const bool flat = std::all_of(j.begin(), j.end(), [](const auto& x) { return is_scalar(x); });
      os << "[";
      bool first = true;
      for (const auto& x : j) {
        os << (first ? "" : ",");
        if (flat) {
          os << (first ? "" : " ");
        } else {
          os << "\n" << inner;
        }
        write(os, x, indent + 1);
        first = false;
      }
      if (!flat) {
        os << "\n" << pad;
      }
      os << "]";
      return;
    }
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        os << (first ? "\n" : ",\n") << inner << json(key).dump() << ": ";
        write(os, value, indent + 1);
        first = false;
      }
      os << "\n" << pad << "}";
      return;
    }
    default:
      throw Error(ErrorKind::NumericalFailure, "unsupported JSON value in report");
  }
}

}  // namespace

std::string serialize(const ordered_json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << "\n";
  return os.str();
}

ordered_json to_json(const InstantReport& r) {
  ordered_json out;
  out["t"] = r.t;
  out["Qdot"] = r.current;
  out["D"] = r.dissipation;
  out["excess"] = r.excess;
  out["residual"] = r.residual;
  out["rho"] = r.offdiag_ratio;
  out["Sdot"] = optional_array(r.entropy_rate);
  out["Ndot"] = optional_array(r.noise_rate);
  out["regime_ok"] = r.regime_ok ? ordered_json(*r.regime_ok) : ordered_json();
  return out;
}

InstantReport instant_from_json(const nlohmann::ordered_json& j) {
  InstantReport r;
  r.t = j.at("t").get<double>();
  r.current = j.at("Qdot").get<std::vector<double>>();
  r.dissipation = j.at("D").get<std::vector<double>>();
  r.excess = j.at("excess").get<std::vector<double>>();
  r.residual = j.at("residual").get<std::vector<double>>();
  r.offdiag_ratio = j.at("rho").get<double>();
  r.entropy_rate = optional_array_from(j.at("Sdot"));
  r.noise_rate = optional_array_from(j.at("Ndot"));
  if (!j.at("regime_ok").is_null()) {
    r.regime_ok = j.at("regime_ok").get<bool>();
  }
  return r;
}

ordered_json to_json(const OptimalityVerdict& v) {
  ordered_json out;
  out["is_optimal"] = v.is_optimal;
  out["max_offdiag_ratio"] = v.max_offdiag_ratio;
  out["worst_time"] = v.worst_time;
  out["per_channel_saturation"] = v.per_channel_saturation;
  if (v.decomposition) {
    const auto& d = *v.decomposition;
    ordered_json s0 = ordered_json::array();
    for (Eigen::Index r = 0; r < d.s0.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index c = 0; c < d.s0.cols(); ++c) {
        row.push_back(ordered_json::array({d.s0(r, c).real(), d.s0(r, c).imag()}));
      }
      s0.push_back(row);
    }
    ordered_json dec;
    dec["phases"] = d.phases;
    dec["S0"] = s0;
    dec["reconstruction_error"] = d.reconstruction_error;
    out["decomposition"] = dec;
  } else {
    out["decomposition"] = nullptr;
  }
  return out;
}

OptimalityVerdict verdict_from_json(const nlohmann::ordered_json& j) {
  OptimalityVerdict v;
  v.is_optimal = j.at("is_optimal").get<bool>();
  v.max_offdiag_ratio = j.at("max_offdiag_ratio").get<double>();
  v.worst_time = j.at("worst_time").get<double>();
  v.per_channel_saturation = j.at("per_channel_saturation").get<std::vector<bool>>();
  const ordered_json& dec = j.at("decomposition");
  if (!dec.is_null()) {
    DiagonalDecomposition d;
    d.phases = dec.at("phases").get<std::vector<std::vector<double>>>();
    const ordered_json& s0 = dec.at("S0");
    const auto n = static_cast<Eigen::Index>(s0.size());
    d.s0 = ComplexMatrix::Zero(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) {
        const ordered_json& z = s0.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c));
        d.s0(r, c) = Complex(z.at(0).get<double>(), z.at(1).get<double>());
      }
    }
    d.reconstruction_error = dec.at("reconstruction_error").get<double>();
    v.decomposition = std::move(d);
  }
  return v;
}

ordered_json to_json(const CycleReport& c) {
  ordered_json out;
  out["Q"] = c.charge;
  out["winding"] = c.winding ? ordered_json(*c.winding) : ordered_json();
  out["dissipated_energy"] = c.dissipated_energy;
  out["adiabaticity"] = c.adiabaticity;
  out["is_optimal"] = c.is_optimal;
  out["max_offdiag_ratio"] = c.max_offdiag_ratio;
  out["grid"] = {{"period", c.period}, {"samples", c.samples}};
  return out;
}

CycleReport cycle_from_json(const nlohmann::ordered_json& j) {
  CycleReport c;
  c.charge = j.at("Q").get<std::vector<double>>();
  if (!j.at("winding").is_null()) {
    c.winding = j.at("winding").get<std::vector<long long>>();
  }
  c.dissipated_energy = j.at("dissipated_energy").get<std::vector<double>>();
  c.adiabaticity = j.at("adiabaticity").get<double>();
  c.is_optimal = j.at("is_optimal").get<bool>();
  c.max_offdiag_ratio = j.at("max_offdiag_ratio").get<double>();
  c.period = j.at("grid").at("period").get<double>();
  c.samples = j.at("grid").at("samples").get<std::size_t>();
  return c;
}

ordered_json to_json(const AnalysisReport& r) {
  ordered_json out;
  out["config"] = r.config;
  ordered_json instants = ordered_json::array();
  for (const auto& i : r.instants) {
    instants.push_back(to_json(i));
  }
  out["instants"] = instants;
  out["cycle"] = to_json(r.cycle);
  out["optimality"] = to_json(r.optimality);
  out["adiabaticity"] = r.adiabaticity;
  out["warnings"] = r.warnings;
  out["versions"] = {{"spec_version", r.schema_version}, {"tolerances", to_json(r.tolerances)}};
  return out;
}

AnalysisReport report_from_json(const nlohmann::ordered_json& j) {
  AnalysisReport r;
  r.config = j.at("config");
  for (const auto& i : j.at("instants")) {
    r.instants.push_back(instant_from_json(i));
  }
  r.cycle = cycle_from_json(j.at("cycle"));
  r.optimality = verdict_from_json(j.at("optimality"));
  r.adiabaticity = j.at("adiabaticity").get<double>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  const ordered_json& versions = j.at("versions");
  r.schema_version = versions.at("spec_version").get<std::string>();
  const ordered_json& tol = versions.at("tolerances");
  r.tolerances.unitary = tol.at("tol_unitary").get<double>();
  r.tolerances.hermitian = tol.at("tol_herm").get<double>();
  r.tolerances.optimal = tol.at("tol_opt").get<double>();
  r.tolerances.charge = tol.at("tol_charge").get<double>();
  return r;
}

std::string to_csv(const AnalysisReport& r) {
  std::ostringstream os;
  const std::size_t n = r.cycle.charge.size();
  os << "t";
  for (const char* name : {"Qdot", "D", "Sdot", "Ndot"}) {
    for (std::size_t j = 1; j <= n; ++j) {
      os << "," << name << "_" << j;
    }
  }
  os << ",rho\n";
  for (const auto& row : r.instants) {
    os << format_double(row.t);
    for (double x : row.current) {
      os << "," << format_double(x);
    }
    for (double x : row.dissipation) {
      os << "," << format_double(x);
    }
    for (const auto* rates : {&row.entropy_rate, &row.noise_rate}) {
      for (std::size_t j = 0; j < n; ++j) {
        os << ",";
        if (*rates) {
          os << format_double((**rates)[j]);
        }
      }
    }
    os << "," << format_double(row.offdiag_ratio) << "\n";
  }
  return os.str();
}

ordered_json models_to_json() {
  ordered_json out = ordered_json::array();
  for (const auto& info : model_registry()) {
    ordered_json params = ordered_json::array();
    for (const auto& p : info.params) {
      ordered_json entry;
      entry["name"] = p.name;
      entry["required"] = !p.default_value.has_value();
      entry["default"] = p.default_value ? ordered_json(*p.default_value) : ordered_json();
      entry["description"] = p.description;
      params.push_back(entry);
    }
    ordered_json m;
    m["name"] = info.name;
    m["description"] = info.description;
    m["params"] = params;
    out.push_back(m);
  }
  return out;
}

ordered_json to_json(const BathtubSummary& s) {
  ordered_json out;
  out["greedy_Edot"] = s.greedy_edot;
  out["analytic_Edot"] = s.analytic_edot;
  out["violations"] = s.violations;
  out["max_violation"] = s.max_violation;
  return out;
}

}  // namespace pump
