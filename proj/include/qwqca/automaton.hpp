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
#include <memory>
#include <vector>

#include "qwqca/algebra.hpp"
#include "qwqca/graph.hpp"

namespace qwqca {

/** Global subcell id: cell * subcells_per_cell + subcell. Also the qubit's bit position. */
using SubcellId = std::size_t;
using Tile = std::vector<SubcellId>;

/**
 * One tiling of a partitioned unitary automaton: disjoint equal-size tiles
 * covering every subcell, all driven by the same unitary.
 *
 * Inside the unitary the r-th smallest subcell id of a tile is bit r of the
 * local basis index (lowest-order bit first).
 */
struct Tiling {
  std::vector<Tile> tiles;
  CMatrix unitary;
};

/** Partitioned unitary quantum cellular automaton over qubit subcells. */
struct Automaton {
  std::size_t n_cells = 0;
  std::size_t subcells_per_cell = 1;
  std::vector<Tiling> tilings;

  std::size_t subcell_count() const { return n_cells * subcells_per_cell; }
  SubcellId subcell(std::size_t cell, std::size_t slot) const { return cell * subcells_per_cell + slot; }
};

/**
 * Validation split by backend. structural covers everything the full
 * backend needs (partition, equal tile size, unitary shape and unitarity).
 * single_excitation lists the extra requirements of the single-excitation
 * backend: weight preservation and a vacuum amplitude of exactly 1.
 */
struct AutomatonReport {
  ValidationReport structural;
  ValidationReport single_excitation;

  bool ok() const { return structural.ok() && single_excitation.ok(); }
};

AutomatonReport validate_automaton(const Automaton& a);

/**
 * The |tile| x |tile| block of a tile unitary acting on weight-1 basis
 * states: block(r, s) = w(2^r, 2^s).
 */
CMatrix single_excitation_block(const CMatrix& w);

/** Amplitudes over subcells; entry s is the basis state with only qubit s set. */
struct SingleExcitationState {
  std::shared_ptr<const Automaton> automaton;
  CVector amplitudes;
  std::size_t time = 0;

  static SingleExcitationState localized(std::shared_ptr<const Automaton> automaton, SubcellId s);
};

/** Largest qubit count the full backend accepts. */
inline constexpr std::size_t kMaxFullQubits = 20;

/** Amplitudes over all 2^q computational basis states, subcell 0 as the lowest bit. */
struct FullState {
  std::shared_ptr<const Automaton> automaton;
  CVector amplitudes;
  std::size_t time = 0;
};

/** Applies every tiling in order on the single-excitation sector. Throws on an invalid automaton. */
SingleExcitationState qca_step_single(const SingleExcitationState& s);
SingleExcitationState qca_evolve_single(const SingleExcitationState& s0, std::size_t steps);

/** Full-Hilbert-space oracle; requires at most kMaxFullQubits subcells. */
FullState qca_step_full(const FullState& s);
FullState qca_evolve_full(const FullState& s0, std::size_t steps);

FullState embed_single(const SingleExcitationState& s);

/** Total probability outside the weight-1 sector. */
double leakage_outside_single(const FullState& s);

/** Marginal probability of each cell holding the excitation. */
std::vector<double> cell_distribution(const SingleExcitationState& s);

}  // namespace qwqca
