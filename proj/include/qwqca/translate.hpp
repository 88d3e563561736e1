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

#include "qwqca/automaton.hpp"
#include "qwqca/coined_walk.hpp"
#include "qwqca/staggered_walk.hpp"

namespace qwqca {

enum class WalkKind { coined, staggered };

/**
 * Bijection between walk basis indices (arc indices or vertex ids) and
 * automaton subcells, together with the handles both sides need.
 */
struct Encoder {
  WalkKind kind = WalkKind::coined;
  std::vector<SubcellId> walk_to_subcell;
  std::vector<std::size_t> subcell_to_walk;
  std::shared_ptr<const Graph> graph;
  std::shared_ptr<const Automaton> automaton;

  std::size_t size() const { return walk_to_subcell.size(); }
};

struct Translation {
  std::shared_ptr<const Automaton> automaton;
  Encoder encoder;
};

/**
 * Embeds a d x d block into a 2^d x 2^d tile unitary acting on the
 * weight-1 sector: w(2^r, 2^s) = block(r, s), ones on every other diagonal
 * entry, zero elsewhere.
 */
CMatrix embed_weight_one(const CMatrix& block);

/** 4 x 4 SWAP. */
CMatrix swap_gate();

/**
 * Coined walk on a d-regular graph -> automaton with |V| cells of d
 * subcells and three tilings (coin per cell, SWAP per edge, permutation per
 * cell). Arc (i -> j) is encoded on subcell i * d + rank of j at i.
 * The coin and the permutation must be uniform: a tiling carries a single
 * unitary.
 */
Translation cqw_to_puqca(std::shared_ptr<const Graph> g, const CoinSpec& c, const PermutationSpec& p);

/**
 * Staggered walk -> automaton with one qubit per vertex and one tiling per
 * tessellation; tiles are the polygons and W_k embeds the polygon
 * propagator. Vertex i is encoded on subcell i.
 */
Translation sqwh_to_puqca(std::shared_ptr<const Graph> g, const SqwhSpec& spec);

SingleExcitationState encode(const Encoder& e, const CoinedState& s);
SingleExcitationState encode(const Encoder& e, const StaggeredState& s);
CoinedState decode_coined(const Encoder& e, const SingleExcitationState& s);
StaggeredState decode_staggered(const Encoder& e, const SingleExcitationState& s);

/** Builds an encoder from a subcell map; throws unless it is a bijection onto the subcells. */
Encoder make_encoder(WalkKind kind, std::vector<SubcellId> walk_to_subcell, std::shared_ptr<const Graph> graph,
                     std::shared_ptr<const Automaton> automaton);

}  // namespace qwqca
