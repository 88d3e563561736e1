// Copyright 2026 The qwqca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON schemas shared by the command-line tools. Complex numbers are
// [re, im] pairs everywhere; matrices are arrays of rows.

#include <cstdint>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "qwqca/verify.hpp"

namespace qwqca {

/** A config problem; field() is the JSON path of the offending entry. */
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct Config {
  WalkSpec walk;
  std::uint64_t seed = 0;
  /** Optional "automaton" entry in the translate output schema; replaces the compiled automaton. */
  std::shared_ptr<const Automaton> automaton;
};

Config parse_config(const nlohmann::json& doc);
Config load_config(const std::filesystem::path& path);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j, const std::string& field);
nlohmann::json vector_to_json(std::span<const Complex> v);
nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j, const std::string& field);

nlohmann::json automaton_to_json(const Automaton& a);
/** Throws ConfigError on schema problems; does not run validate_automaton. */
Automaton automaton_from_json(const nlohmann::json& j, const std::string& field = "automaton");

nlohmann::json encoder_to_json(const Encoder& e);

/** Automaton plus encoder map, as written by `qwqca translate`. */
nlohmann::json translation_to_json(const Translation& t);

nlohmann::json report_to_json(const EquivalenceReport& r);

}  // namespace qwqca
