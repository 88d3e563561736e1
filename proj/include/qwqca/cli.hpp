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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace qwqca::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 1,
  kNumericalGuard = 2,
  kEquivalenceFailure = 3,
};

/** Largest tolerated |norm - 1| during simulate. */
inline constexpr double kNormDriftGuard = 1e-8;

struct SimulateOptions {
  std::filesystem::path config;
  /** "cqw", "sqwh" or "qca"; defaults to the config's walk model. */
  std::optional<std::string> model;
  std::size_t steps = 0;
  /** CSV path; the final state goes to the same stem with extension ".final.json". */
  std::filesystem::path out;
};

struct TranslateOptions {
  std::filesystem::path config;
  std::filesystem::path out;
};

struct VerifyOptions {
  std::filesystem::path config;
  std::size_t t_max = 25;
  std::size_t n_states = 20;
  /** Overrides the config seed. */
  std::optional<std::uint64_t> seed;
  double tol = 1e-10;
  std::optional<std::filesystem::path> out;
};

std::filesystem::path final_state_path(const std::filesystem::path& csv_path);

int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);
int cmd_translate(const TranslateOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

/** Parses argv with subcommands simulate | translate | verify and dispatches. */
int run(int argc, char** argv);

}  // namespace qwqca::cli
