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

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "pump/models.hpp"

namespace pump {

/// Parses a model configuration document. Parsing is strict: unknown keys at
/// any level, wrong types and missing required fields raise ConfigError with
/// the dotted field path as key. The result is also passed through
/// validate().
ModelConfig parse_model_config(const nlohmann::json& doc);

/// Reads and parses a UTF-8 JSON file. Unreadable files raise IoError,
/// malformed JSON raises ConfigError.
ModelConfig load_model_config(const std::filesystem::path& path);

/// Canonical form of a config with every default filled in; parses back to
/// an equal ModelConfig.
nlohmann::ordered_json to_json(const ModelConfig& config);

/// JSON key names of the tolerance block.
nlohmann::ordered_json to_json(const Tolerances& tol);

}  // namespace pump
