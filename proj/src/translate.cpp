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

#include "qwqca/translate.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace qwqca {

namespace {

std::vector<Tile> cell_tiles(std::size_t n_cells, std::size_t per_cell) {
  std::vector<Tile> tiles(n_cells);
  for (std::size_t i = 0; i < n_cells; ++i) {
    tiles[i].resize(per_cell);
    std::iota(tiles[i].begin(), tiles[i].end(), i * per_cell);
  }
  return tiles;
}

void check_encoder(const Encoder& e, WalkKind kind) {
  if (e.kind != kind) throw std::invalid_argument("encoder was built for a different walk kind");
  if (!e.automaton) throw std::invalid_argument("encoder has no automaton");
}

}  // namespace

CMatrix embed_weight_one(const CMatrix& block) {
  const std::size_t d = block.dim();
  if (d == 0 || d >= 16) throw std::invalid_argument("embed_weight_one: unsupported block dimension");
  CMatrix w = CMatrix::identity(std::size_t{1} << d);
  for (std::size_t r = 0; r < d; ++r) {
    w(std::size_t{1} << r, std::size_t{1} << r) = 0.0;
  }
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) w(std::size_t{1} << r, std::size_t{1} << c) = block(r, c);
  return w;
}

CMatrix swap_gate() { return CMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}; }

Encoder make_encoder(WalkKind kind, std::vector<SubcellId> walk_to_subcell, std::shared_ptr<const Graph> graph,
                     std::shared_ptr<const Automaton> automaton) {
  if (!automaton) throw std::invalid_argument("make_encoder: missing automaton");
  const std::size_t q = automaton->subcell_count();
  if (walk_to_subcell.size() != q) {
    throw std::invalid_argument("encoder maps " + std::to_string(walk_to_subcell.size()) + " walk states onto " +
                                std::to_string(q) + " subcells");
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> inverse(q, kUnset);
  for (std::size_t w = 0; w < q; ++w) {
    const SubcellId s = walk_to_subcell[w];
    if (s >= q || inverse[s] != kUnset) throw std::invalid_argument("encoder map is not a bijection");
    inverse[s] = w;
  }
  return Encoder{kind, std::move(walk_to_subcell), std::move(inverse), std::move(graph), std::move(automaton)};
}

Translation cqw_to_puqca(std::shared_ptr<const Graph> g, const CoinSpec& c, const PermutationSpec& p) {
  if (!g) throw std::invalid_argument("cqw_to_puqca: missing graph");
  c.validate(*g);
  p.validate(*g);
  if (!c.is_uniform()) throw std::invalid_argument("cqw_to_puqca: coin must be identical at every vertex");
  if (!p.is_uniform()) throw std::invalid_argument("cqw_to_puqca: permutation must be identical at every vertex");

  const std::size_t d = g->degree();
  auto automaton = std::make_shared<Automaton>();
  automaton->n_cells = g->vertex_count();
  automaton->subcells_per_cell = d;

  automaton->tilings.push_back(Tiling{cell_tiles(g->vertex_count(), d), embed_weight_one(c.block(0))});

  Tiling shift{{}, swap_gate()};
  for (const auto& [i, j] : g->edges()) {
    shift.tiles.push_back(sorted_polygon(Tile{g->arc_index(i, j), g->arc_index(j, i)}));
  }
  automaton->tilings.push_back(std::move(shift));

  automaton->tilings.push_back(Tiling{cell_tiles(g->vertex_count(), d), embed_weight_one(p.matrix(0))});

  std::vector<SubcellId> map(g->arc_count());
  for (std::size_t a = 0; a < map.size(); ++a) {
    const Arc arc = g->arc(a);
    map[a] = automaton->subcell(arc.tail, g->neighbor_rank(arc.tail, arc.head));
  }
  std::shared_ptr<const Automaton> frozen = std::move(automaton);
  return Translation{frozen, make_encoder(WalkKind::coined, std::move(map), std::move(g), frozen)};
}

Translation sqwh_to_puqca(std::shared_ptr<const Graph> g, const SqwhSpec& spec) {
  if (!g) throw std::invalid_argument("sqwh_to_puqca: missing graph");
  spec.validate(*g);
  auto automaton = std::make_shared<Automaton>();
  automaton->n_cells = g->vertex_count();
  automaton->subcells_per_cell = 1;
  for (std::size_t k = 0; k < spec.cover.tessellations.size(); ++k) {
    Tiling tiling;
    for (const auto& polygon : spec.cover.tessellations[k].polygons) tiling.tiles.push_back(sorted_polygon(polygon));
    tiling.unitary = embed_weight_one(polygon_propagator(spec.coefficients[k], spec.angles[k]));
    automaton->tilings.push_back(std::move(tiling));
  }
  std::vector<SubcellId> map(g->vertex_count());
  std::iota(map.begin(), map.end(), SubcellId{0});
  std::shared_ptr<const Automaton> frozen = std::move(automaton);
  return Translation{frozen, make_encoder(WalkKind::staggered, std::move(map), std::move(g), frozen)};
}

SingleExcitationState encode(const Encoder& e, const CoinedState& s) {
  check_encoder(e, WalkKind::coined);
  if (s.amplitudes.size() != e.size()) throw std::invalid_argument("encode: walk state dimension mismatch");
  SingleExcitationState out{e.automaton, CVector(e.size()), s.time};
  for (std::size_t w = 0; w < e.size(); ++w) out.amplitudes[e.walk_to_subcell[w]] = s.amplitudes[w];
  return out;
}

SingleExcitationState encode(const Encoder& e, const StaggeredState& s) {
  check_encoder(e, WalkKind::staggered);
  if (s.amplitudes.size() != e.size()) throw std::invalid_argument("encode: walk state dimension mismatch");
  SingleExcitationState out{e.automaton, CVector(e.size()), s.time};
  for (std::size_t w = 0; w < e.size(); ++w) out.amplitudes[e.walk_to_subcell[w]] = s.amplitudes[w];
  return out;
}

CoinedState decode_coined(const Encoder& e, const SingleExcitationState& s) {
  check_encoder(e, WalkKind::coined);
  if (s.amplitudes.size() != e.size()) throw std::invalid_argument("decode: automaton state dimension mismatch");
  CoinedState out{e.graph, CVector(e.size()), s.time};
  for (SubcellId c = 0; c < e.size(); ++c) out.amplitudes[e.subcell_to_walk[c]] = s.amplitudes[c];
  return out;
}

StaggeredState decode_staggered(const Encoder& e, const SingleExcitationState& s) {
  check_encoder(e, WalkKind::staggered);
  if (s.amplitudes.size() != e.size()) throw std::invalid_argument("decode: automaton state dimension mismatch");
  StaggeredState out{e.graph, CVector(e.size()), s.time};
  for (SubcellId c = 0; c < e.size(); ++c) out.amplitudes[e.subcell_to_walk[c]] = s.amplitudes[c];
  return out;
}

}  // namespace qwqca
