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

// Randomized graph/cover instances shared by the unit and acceptance tests.

#include <algorithm>
#include <bit>
#include <memory>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "qwqca/automaton.hpp"
#include "qwqca/graph.hpp"
#include "qwqca/staggered_walk.hpp"

namespace qwqca::fixture {

struct CoverInstance {
  std::shared_ptr<const Graph> graph;
  TessellationCover cover;
  std::vector<CVector> coefficients;
};

/**
 * An even cycle or a supported torus with its standard cover, pushed
 * through a random vertex relabeling, plus random complex coefficients.
 */
inline CoverInstance random_cover_instance(std::mt19937_64& rng, std::size_t max_vertices = 24) {
  std::vector<std::pair<std::size_t, std::size_t>> shapes;  // rows == 0 marks a cycle of length cols
  for (std::size_t n = 4; n <= max_vertices; n += 2) shapes.emplace_back(0, n);
  for (std::size_t r : {3u, 4u, 6u})
    for (std::size_t c : {3u, 4u, 6u})
      if (r * c <= max_vertices) shapes.emplace_back(r, c);
  const auto [rows, cols] = shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng)];

  const Graph base = rows == 0 ? build_cycle(cols) : build_torus(rows, cols);
  TessellationCover cover = rows == 0 ? cycle_cover(cols) : torus_cover(rows, cols);

  std::vector<VertexId> relabel(base.vertex_count());
  std::iota(relabel.begin(), relabel.end(), VertexId{0});
  std::shuffle(relabel.begin(), relabel.end(), rng);

  std::vector<Edge> edges;
  for (const auto& [a, b] : base.edges()) edges.emplace_back(std::min(relabel[a], relabel[b]), std::max(relabel[a], relabel[b]));
  for (auto& t : cover.tessellations) {
    for (auto& polygon : t.polygons)
      for (auto& v : polygon) v = relabel[v];
    std::shuffle(t.polygons.begin(), t.polygons.end(), rng);
  }

  CoverInstance out{std::make_shared<const Graph>(Graph::from_edges(base.vertex_count(), edges)), std::move(cover), {}};
  for (const auto& t : out.cover.tessellations) out.coefficients.push_back(oracle::gaussian_state(t.polygons.front().size(), rng));
  return out;
}

/** Haar-like random unitary: Gram-Schmidt on complex Gaussian columns. */
inline CMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::vector<CVector> cols;
  while (cols.size() < n) {
    CVector v = oracle::gaussian_state(n, rng);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : cols) {
        Complex dot{};
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(b[i]) * v[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= dot * b[i];
      }
    }
    const double nv = norm(v);
    for (auto& x : v) x /= nv;
    cols.push_back(std::move(v));
  }
  CMatrix u(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) u(r, c) = cols[c][r];
  return u;
}

/**
 * Random 2^m x 2^m unitary that is block diagonal over Hamming weight, with
 * vacuum amplitude 1.
 */
inline CMatrix random_weight_preserving(std::size_t m, std::mt19937_64& rng) {
  const std::size_t dim = std::size_t{1} << m;
  CMatrix w(dim);
  w(0, 0) = 1.0;
  for (std::size_t weight = 1; weight <= m; ++weight) {
    std::vector<std::size_t> states;
    for (std::size_t b = 0; b < dim; ++b)
      if (static_cast<std::size_t>(std::popcount(b)) == weight) states.push_back(b);
    const CMatrix block = random_unitary(states.size(), rng);
    for (std::size_t r = 0; r < states.size(); ++r)
      for (std::size_t c = 0; c < states.size(); ++c) w(states[r], states[c]) = block(r, c);
  }
  return w;
}

/** Ring of n cells with two subcells: tiles {i_0, i_1} then {i_1, (i+1)_0}. */
inline Automaton ring_automaton(std::size_t n, CMatrix w0, CMatrix w1) {
  Automaton a{n, 2, {}};
  Tiling read{{}, std::move(w0)};
  Tiling move{{}, std::move(w1)};
  for (std::size_t i = 0; i < n; ++i) {
    read.tiles.push_back({a.subcell(i, 0), a.subcell(i, 1)});
    move.tiles.push_back({a.subcell(i, 1), a.subcell((i + 1) % n, 0)});
  }
  a.tilings = {std::move(read), std::move(move)};
  return a;
}

}  // namespace qwqca::fixture
