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

#include "pump/config_io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "pump/errors.hpp"

namespace pump {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& key, const std::string& message) {
  throw Error(ErrorKind::ConfigError, message, key);
}

void reject_unknown_keys(const json& obj, const std::string& prefix,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) {
      known = known || key == a;
    }
    if (!known) {
      fail(prefix + key, "unknown key");
    }
  }
}

const json& require_object(const json& parent, const std::string& name, const std::string& path) {
  if (!parent.contains(name)) {
    fail(path, "missing required field");
  }
  const json& obj = parent.at(name);
  if (!obj.is_object()) {
    fail(path, "must be an object");
  }
  return obj;
}

double as_real(const json& v, const std::string& path) {
  if (!v.is_number()) {
    fail(path, "must be a number");
  }
  return v.get<double>();
}

double require_real(const json& obj, const std::string& name, const std::string& path) {
  if (!obj.contains(name)) {
    fail(path, "missing required field");
  }
  return as_real(obj.at(name), path);
}

std::size_t as_count(const json& v, const std::string& path) {
  if (v.is_number_unsigned()) {
    return v.get<std::size_t>();
  }
  if (v.is_number()) {
    const double x = v.get<double>();
    if (x >= 0.0 && x == std::floor(x) && x < 9.0e15) {
      return static_cast<std::size_t>(x);
    }
  }
  fail(path, "must be a non-negative integer");
}

}  // namespace

ModelConfig parse_model_config(const json& doc) {
  if (!doc.is_object()) {
    fail("", "config must be a JSON object");
  }
  reject_unknown_keys(doc, "", {"model", "params", "cycle", "energy", "tolerances", "beta"});

  ModelConfig config;
  if (!doc.contains("model") || !doc.at("model").is_string()) {
    fail("model", "missing or not a string");
  }
  config.model = doc.at("model").get<std::string>();

  if (doc.contains("params")) {
    const json& params = doc.at("params");
    if (!params.is_object()) {
      fail("params", "must be an object");
    }
    for (const auto& [key, value] : params.items()) {
      config.params[key] = as_real(value, "params." + key);
    }
  }

  const json& cycle = require_object(doc, "cycle", "cycle");
  reject_unknown_keys(cycle, "cycle.", {"period", "samples"});
  config.cycle.period = require_real(cycle, "period", "cycle.period");
  if (!cycle.contains("samples")) {
    fail("cycle.samples", "missing required field");
  }
  config.cycle.samples = as_count(cycle.at("samples"), "cycle.samples");

  const json& energy = require_object(doc, "energy", "energy");
  reject_unknown_keys(energy, "energy.", {"mu", "window", "samples"});
  config.energy.mu = require_real(energy, "mu", "energy.mu");
  if (!energy.contains("window")) {
    fail("energy.window", "missing required field");
  }
  const json& window = energy.at("window");
  if (!window.is_array() || window.size() != 2) {
    fail("energy.window", "must be an array [lo, hi]");
  }
  config.energy.window.lo = as_real(window.at(0), "energy.window");
  config.energy.window.hi = as_real(window.at(1), "energy.window");
  if (energy.contains("samples")) {
    config.energy.samples = as_count(energy.at("samples"), "energy.samples");
  }

  if (doc.contains("tolerances")) {
    const json& tol = doc.at("tolerances");
    if (!tol.is_object()) {
      fail("tolerances", "must be an object");
    }
    reject_unknown_keys(tol, "tolerances.", {"tol_unitary", "tol_herm", "tol_opt", "tol_charge"});
    if (tol.contains("tol_unitary")) {
      config.tolerances.unitary = as_real(tol.at("tol_unitary"), "tolerances.tol_unitary");
    }
    if (tol.contains("tol_herm")) {
      config.tolerances.hermitian = as_real(tol.at("tol_herm"), "tolerances.tol_herm");
    }
    if (tol.contains("tol_opt")) {
      config.tolerances.optimal = as_real(tol.at("tol_opt"), "tolerances.tol_opt");
    }
    if (tol.contains("tol_charge")) {
      config.tolerances.charge = as_real(tol.at("tol_charge"), "tolerances.tol_charge");
    }
  }

  if (doc.contains("beta") && !doc.at("beta").is_null()) {
    config.beta = as_real(doc.at("beta"), "beta");
  }

  validate(config);
  return config;
}

ModelConfig load_model_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorKind::IoError, "cannot read " + path.string());
  }
  json doc;
  try {
    doc = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ConfigError, std::string("malformed JSON: ") + e.what(), "");
  }
  return parse_model_config(doc);
}

nlohmann::ordered_json to_json(const Tolerances& tol) {
  nlohmann::ordered_json out;
  out["tol_unitary"] = tol.unitary;
  out["tol_herm"] = tol.hermitian;
  out["tol_opt"] = tol.optimal;
  out["tol_charge"] = tol.charge;
  return out;
}

nlohmann::ordered_json to_json(const ModelConfig& config) {
  nlohmann::ordered_json out;
  out["model"] = config.model;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config.params) {
    params[key] = value;
  }
  out["params"] = params;
  out["cycle"] = {{"period", config.cycle.period}, {"samples", config.cycle.samples}};
  out["energy"] = {{"mu", config.energy.mu},
                   {"window", {config.energy.window.lo, config.energy.window.hi}},
                   {"samples", config.energy.samples}};
  out["tolerances"] = to_json(config.tolerances);
  out["beta"] = config.beta ? nlohmann::ordered_json(*config.beta) : nlohmann::ordered_json();
  return out;
}

}  // namespace pump
