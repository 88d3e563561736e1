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
#include <memory>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qwqca/translate.hpp"

namespace qwqca {

struct CoinedWalk {
  std::shared_ptr<const Graph> graph;
  CoinSpec coin;
  PermutationSpec permutation;
  CoinedState initial;
};

struct StaggeredWalk {
  std::shared_ptr<const Graph> graph;
  SqwhSpec spec;
  StaggeredState initial;
};

using WalkSpec = std::variant<CoinedWalk, StaggeredWalk>;

const Graph& walk_graph(const WalkSpec& walk);
std::string walk_model_name(const WalkSpec& walk);

Translation translate(const WalkSpec& walk);

/** Complex-Gaussian entries, normalized. */
CVector random_state(std::size_t dim, std::mt19937_64& rng);

struct EquivalenceOptions {
  std::size_t t_max = 25;
  std::size_t n_states = 20;
  std::uint64_t seed = 0;
  double tol = kEquivalenceTol;
  /** Replaces the compiled automaton (same encoder); used for fault injection. */
  std::shared_ptr<const Automaton> automaton_override;
};

struct EquivalenceReport {
  std::string model;
  std::size_t t_max = 0;
  std::size_t n_states = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  /** residuals[t] = max over initial states of max |walk - decode(automaton)| at step t, t = 0..t_max. */
  std::vector<double> residuals;
  double max_residual = 0.0;
  bool pass = false;
};

/**
 * Evolves the walk's own initial state plus n_states seeded random states
 * side by side on the walk engine and on the compiled automaton, decoding
 * after every step.
 */
EquivalenceReport equivalence_run(const WalkSpec& walk, const EquivalenceOptions& options);

/** Thrown when a distribution has mass on the antipode of the start vertex. */
class WraparoundError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * Standard deviation of the position marginal on a cycle, with vertex i
 * unwrapped to the signed offset from start in (-n/2, n/2].
 */
double position_sigma(std::span<const double> distribution, VertexId start);

std::vector<double> sigma_series(const std::vector<std::vector<double>>& distributions, VertexId start);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/** Ordinary least squares y = slope * x + intercept. */
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

}  // namespace qwqca
