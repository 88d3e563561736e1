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

#include "qwqca/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qwqca {

namespace {

std::string edge_str(VertexId a, VertexId b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

ValidationReport validate_adjacency(const std::vector<std::vector<VertexId>>& adjacency) {
  ValidationReport report;
  const std::size_t n = adjacency.size();
  if (n == 0) {
    report.violations.push_back("graph has no vertices");
    return report;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::set<VertexId> seen;
    for (VertexId w : adjacency[v]) {
      if (w >= n) {
        report.violations.push_back("vertex " + std::to_string(v) + " lists out-of-range neighbor " +
                                    std::to_string(w));
        continue;
      }
      if (w == v) report.violations.push_back("self-loop at vertex " + std::to_string(v));
      if (!seen.insert(w).second) {
        report.violations.push_back("multi-edge " + edge_str(v, w));
        continue;
      }
      const auto& back = adjacency[w];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        report.violations.push_back("edge " + edge_str(v, w) + " is not symmetric");
      }
    }
  }
  const std::size_t d = adjacency[0].size();
  if (d == 0) report.violations.push_back("degree must be positive");
  for (std::size_t v = 1; v < n; ++v) {
    if (adjacency[v].size() != d) {
      report.violations.push_back("graph is not regular: vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(adjacency[v].size()) + ", vertex 0 has degree " +
                                  std::to_string(d));
    }
  }
  return report;
}

Graph::Graph(std::vector<std::vector<VertexId>> adjacency, std::size_t degree)
    : adjacency_(std::move(adjacency)), degree_(degree) {
  reverse_.resize(arc_count());
  for (VertexId v = 0; v < vertex_count(); ++v) {
    for (std::size_t r = 0; r < degree_; ++r) {
      const VertexId w = adjacency_[v][r];
      reverse_[v * degree_ + r] = arc_index(w, v);
    }
  }
}

Graph Graph::from_adjacency(std::vector<std::vector<VertexId>> adjacency) {
  const ValidationReport report = validate_adjacency(adjacency);
  if (!report.ok()) throw std::invalid_argument("invalid graph: " + report.summary());
  for (auto& list : adjacency) std::sort(list.begin(), list.end());
  const std::size_t d = adjacency[0].size();
  return Graph(std::move(adjacency), d);
}

Graph Graph::from_edges(std::size_t n_vertices, std::span<const Edge> edges) {
  std::vector<std::vector<VertexId>> adjacency(n_vertices);
  for (const auto& [a, b] : edges) {
    if (a >= n_vertices || b >= n_vertices) {
      throw std::invalid_argument("invalid graph: edge " + edge_str(a, b) + " references a vertex >= " +
                                  std::to_string(n_vertices));
    }
    adjacency[a].push_back(b);
    if (a != b) adjacency[b].push_back(a);
  }
  return from_adjacency(std::move(adjacency));
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::size_t Graph::neighbor_rank(VertexId v, VertexId w) const {
  const auto& list = adjacency_.at(v);
  const auto it = std::lower_bound(list.begin(), list.end(), w);
  if (it == list.end() || *it != w) {
    throw std::invalid_argument("vertices " + std::to_string(v) + " and " + std::to_string(w) +
                                " are not adjacent");
  }
  return static_cast<std::size_t>(it - list.begin());
}

Arc Graph::arc(std::size_t index) const {
  if (index >= arc_count()) throw std::out_of_range("arc index " + std::to_string(index) + " out of range");
  const VertexId tail = index / degree_;
  return Arc{tail, adjacency_[tail][index % degree_]};
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId v = 0; v < vertex_count(); ++v)
    for (VertexId w : adjacency_[v])
      if (v < w) out.emplace_back(v, w);
  return out;
}

Graph build_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("build_cycle: n must be at least 3, got " + std::to_string(n));
  std::vector<std::vector<VertexId>> adjacency(n);
  for (VertexId i = 0; i < n; ++i) adjacency[i] = {(i + n - 1) % n, (i + 1) % n};
  return Graph::from_adjacency(std::move(adjacency));
}

Graph build_torus(std::size_t rows, std::size_t cols) {
  if (rows < 3 || cols < 3) {
    throw std::invalid_argument("build_torus: both dimensions must be at least 3, got " +
                                std::to_string(rows) + "x" + std::to_string(cols));
  }
  std::vector<std::vector<VertexId>> adjacency(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      adjacency[torus_vertex(cols, r, c)] = {
          torus_vertex(cols, (r + rows - 1) % rows, c), torus_vertex(cols, (r + 1) % rows, c),
          torus_vertex(cols, r, (c + cols - 1) % cols), torus_vertex(cols, r, (c + 1) % cols)};
    }
  }
  return Graph::from_adjacency(std::move(adjacency));
}

std::vector<VertexId> sorted_polygon(std::span<const VertexId> polygon) {
  std::vector<VertexId> out(polygon.begin(), polygon.end());
  std::sort(out.begin(), out.end());
  return out;
}

ValidationReport validate_tessellation(const Graph& g, const Tessellation& t) {
  ValidationReport report;
  const std::size_t n = g.vertex_count();
  std::vector<int> hits(n, 0);
  for (std::size_t p = 0; p < t.polygons.size(); ++p) {
    const auto& polygon = t.polygons[p];
    if (polygon.empty()) report.violations.push_back("polygon " + std::to_string(p) + " is empty");
    for (VertexId v : polygon) {
      if (v >= n) {
        report.violations.push_back("polygon " + std::to_string(p) + " has out-of-range vertex " +
                                    std::to_string(v));
      } else {
        ++hits[v];
      }
    }
    for (std::size_t a = 0; a < polygon.size(); ++a) {
      for (std::size_t b = a + 1; b < polygon.size(); ++b) {
        const VertexId u = polygon[a];
        const VertexId w = polygon[b];
        if (u < n && w < n && u != w && !g.adjacent(u, w)) {
          report.violations.push_back("polygon " + std::to_string(p) + " is not a clique: missing edge " +
                                      edge_str(std::min(u, w), std::max(u, w)));
        }
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (hits[v] == 0) report.violations.push_back("vertex " + std::to_string(v) + " is missing");
    if (hits[v] > 1) report.violations.push_back("vertex " + std::to_string(v) + " is duplicated");
  }
  return report;
}

CoverReport validate_cover(const Graph& g, const TessellationCover& c) {
  CoverReport report;
  if (c.tessellations.empty()) report.tessellations.violations.push_back("cover has no tessellations");
  std::set<Edge> covered;
  for (std::size_t k = 0; k < c.tessellations.size(); ++k) {
    const auto sub = validate_tessellation(g, c.tessellations[k]);
    for (const auto& v : sub.violations) {
      report.tessellations.violations.push_back("tessellation " + std::to_string(k) + ": " + v);
    }
    for (const auto& polygon : c.tessellations[k].polygons) {
      for (std::size_t a = 0; a < polygon.size(); ++a)
        for (std::size_t b = a + 1; b < polygon.size(); ++b)
          covered.emplace(std::min(polygon[a], polygon[b]), std::max(polygon[a], polygon[b]));
    }
  }
  for (const auto& e : g.edges())
    if (!covered.contains(e)) report.uncovered_edges.push_back(e);
  return report;
}

TessellationCover cycle_cover(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("cycle_cover: n must be even and at least 4, got " + std::to_string(n));
  }
  TessellationCover cover;
  cover.tessellations.resize(2);
  for (std::size_t i = 0; i < n / 2; ++i) {
    cover.tessellations[0].polygons.push_back({2 * i, 2 * i + 1});
    cover.tessellations[1].polygons.push_back({2 * i + 1, (2 * i + 2) % n});
  }
  return cover;
}

TessellationCover torus_cover(std::size_t rows, std::size_t cols) {
  if (rows < 3 || cols < 3) throw std::invalid_argument("torus_cover: dimensions must be at least 3");
  TessellationCover cover;
  // axis 0 runs along rows (vertical edges), axis 1 along columns.
  for (int axis = 0; axis < 2; ++axis) {
    const std::size_t len = axis == 0 ? rows : cols;
    const std::size_t other = axis == 0 ? cols : rows;
    auto vertex = [&](std::size_t along, std::size_t across) {
      return axis == 0 ? torus_vertex(cols, along, across) : torus_vertex(cols, across, along);
    };
    if (len == 3) {
      Tessellation t;
      for (std::size_t x = 0; x < other; ++x) t.polygons.push_back({vertex(0, x), vertex(1, x), vertex(2, x)});
      cover.tessellations.push_back(std::move(t));
    } else if (len % 2 == 0) {
      for (std::size_t offset = 0; offset < 2; ++offset) {
        Tessellation t;
        for (std::size_t x = 0; x < other; ++x)
          for (std::size_t i = 0; i < len / 2; ++i)
            t.polygons.push_back({vertex(2 * i + offset, x), vertex((2 * i + offset + 1) % len, x)});
        cover.tessellations.push_back(std::move(t));
      }
    } else {
      throw std::invalid_argument("torus_cover: each dimension must be 3 or even, got " +
                                  std::to_string(rows) + "x" + std::to_string(cols));
    }
  }
  return cover;
}

}  // namespace qwqca
