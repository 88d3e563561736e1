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
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qwqca {

using VertexId = std::size_t;

/** Undirected edge, always stored with first < second. */
using Edge = std::pair<VertexId, VertexId>;

/** Directed edge tail -> head. */
struct Arc {
  VertexId tail;
  VertexId head;
  bool operator==(const Arc&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  /** All violations joined with "; ". */
  std::string summary() const;
};

/**
 * Finite simple d-regular undirected graph.
 *
 * Neighbor lists are kept sorted ascending. That order is the canonical
 * neighbor rank used for arc indexing, coin bases and subcell labels.
 * Arcs are indexed vertex-major, neighbor-rank-minor:
 *   arc_index(i, j) = i * degree + rank of j among the neighbors of i.
 */
class Graph {
 public:
  /** Throws std::invalid_argument listing every violation of validate_adjacency. */
  static Graph from_adjacency(std::vector<std::vector<VertexId>> adjacency);
  static Graph from_edges(std::size_t n_vertices, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t degree() const { return degree_; }
  std::size_t edge_count() const { return vertex_count() * degree_ / 2; }
  std::size_t arc_count() const { return vertex_count() * degree_; }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  bool adjacent(VertexId a, VertexId b) const;

  /** Rank of w in the sorted neighbor list of v; throws if not adjacent. */
  std::size_t neighbor_rank(VertexId v, VertexId w) const;

  std::size_t arc_index(VertexId tail, VertexId head) const {
    return tail * degree_ + neighbor_rank(tail, head);
  }
  Arc arc(std::size_t index) const;

  /** Index of the reversed arc; the flip-flop pairing. */
  std::size_t reverse_arc(std::size_t index) const { return reverse_.at(index); }

  /** Edges with first < second, lexicographic. */
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  Graph(std::vector<std::vector<VertexId>> adjacency, std::size_t degree);

  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t degree_ = 0;
  std::vector<std::size_t> reverse_;
};

/**
 * Structural checks for a candidate adjacency list: ids in range, no
 * self-loops, no repeated neighbors, symmetry, and d-regularity.
 */
ValidationReport validate_adjacency(const std::vector<std::vector<VertexId>>& adjacency);

/** Cycle C_n, n >= 3; neighbors of i are (i +- 1) mod n. */
Graph build_cycle(std::size_t n);

/** rows x cols torus with von Neumann neighborhood; vertex (r, c) has id r * cols + c. */
Graph build_torus(std::size_t rows, std::size_t cols);

inline VertexId torus_vertex(std::size_t cols, std::size_t row, std::size_t col) {
  return row * cols + col;
}

/** A partition of the vertex set into cliques ("polygons"). */
struct Tessellation {
  std::vector<std::vector<VertexId>> polygons;
};

/** Ordered list of tessellations whose polygons jointly contain every edge. */
struct TessellationCover {
  std::vector<Tessellation> tessellations;
};

/** Reports vertices missing or duplicated, out-of-range ids, and non-clique polygons. */
ValidationReport validate_tessellation(const Graph& g, const Tessellation& t);

struct CoverReport {
  ValidationReport tessellations;
  std::vector<Edge> uncovered_edges;

  bool ok() const { return tessellations.ok() && uncovered_edges.empty(); }
};

CoverReport validate_cover(const Graph& g, const TessellationCover& c);

/**
 * Two-tessellation cover of an even cycle: {{2i, 2i+1}} then {{2i+1, 2i+2 mod n}}.
 * Throws for odd n or n < 4.
 */
TessellationCover cycle_cover(std::size_t n);

/**
 * Cover of a torus built axis by axis: an axis of length 3 contributes one
 * tessellation of triangles, an even axis contributes an even and an odd
 * pairing. Other lengths throw.
 */
TessellationCover torus_cover(std::size_t rows, std::size_t cols);

/** Copy of the polygon in ascending vertex order (the within-polygon rank). */
std::vector<VertexId> sorted_polygon(std::span<const VertexId> polygon);

}  // namespace qwqca
