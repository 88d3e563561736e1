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

#include "qwqca/coined_walk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qwqca {

namespace {

void check_state(const CoinedState& s) {
  if (!s.graph) throw std::invalid_argument("coined state has no graph");
  if (s.amplitudes.size() != s.graph->arc_count()) {
    throw std::invalid_argument("coined state dimension " + std::to_string(s.amplitudes.size()) +
                                " does not match arc count " + std::to_string(s.graph->arc_count()));
  }
}

bool is_permutation_map(const PermutationSpec::Map& map, std::size_t d) {
  if (map.size() != d) return false;
  std::vector<bool> seen(d, false);
  for (std::size_t r : map) {
    if (r >= d || seen[r]) return false;
    seen[r] = true;
  }
  return true;
}

}  // namespace

CoinedState CoinedState::localized(std::shared_ptr<const Graph> graph, VertexId tail, VertexId head) {
  CoinedState s{std::move(graph), {}, 0};
  s.amplitudes.assign(s.graph->arc_count(), Complex{});
  s.amplitudes[s.graph->arc_index(tail, head)] = 1.0;
  return s;
}

CoinedState CoinedState::from_amplitudes(std::shared_ptr<const Graph> graph, CVector amplitudes) {
  CoinedState s{std::move(graph), std::move(amplitudes), 0};
  check_state(s);
  return s;
}

CoinSpec CoinSpec::uniform(CMatrix block) {
  CoinSpec c;
  c.blocks_.push_back(std::move(block));
  return c;
}

CoinSpec CoinSpec::per_vertex(std::vector<CMatrix> blocks) {
  if (blocks.empty()) throw std::invalid_argument("coin: per-vertex coin needs at least one block");
  CoinSpec c;
  c.blocks_ = std::move(blocks);
  return c;
}

void CoinSpec::validate(const Graph& g) const {
  if (!is_uniform() && blocks_.size() != g.vertex_count()) {
    throw std::invalid_argument("coin: expected " + std::to_string(g.vertex_count()) +
                                " per-vertex blocks, got " + std::to_string(blocks_.size()));
  }
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k].dim() != g.degree()) {
      throw std::invalid_argument("coin: block " + std::to_string(k) + " has dimension " +
                                  std::to_string(blocks_[k].dim()) + ", graph degree is " +
                                  std::to_string(g.degree()));
    }
    if (!is_unitary(blocks_[k], kIdentityTol)) {
      throw std::invalid_argument("coin: block " + std::to_string(k) + " is not unitary");
    }
  }
}

PermutationSpec PermutationSpec::identity(std::size_t degree) {
  Map map(degree);
  std::iota(map.begin(), map.end(), std::size_t{0});
  return uniform(std::move(map));
}

PermutationSpec PermutationSpec::uniform(Map map) {
  PermutationSpec p;
  p.maps_.push_back(std::move(map));
  return p;
}

PermutationSpec PermutationSpec::per_vertex(std::vector<Map> maps) {
  if (maps.empty()) throw std::invalid_argument("permutation: per-vertex spec needs at least one map");
  PermutationSpec p;
  p.maps_ = std::move(maps);
  return p;
}

PermutationSpec PermutationSpec::inverse() const {
  PermutationSpec out;
  for (const auto& m : maps_) {
    Map inv(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) inv.at(m[r]) = r;
    out.maps_.push_back(std::move(inv));
  }
  return out;
}

CMatrix PermutationSpec::matrix(VertexId v) const {
  const Map& m = map(v);
  CMatrix out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) out(m[r], r) = 1.0;
  return out;
}

void PermutationSpec::validate(const Graph& g) const {
  if (!is_uniform() && maps_.size() != g.vertex_count()) {
    throw std::invalid_argument("permutation: expected " + std::to_string(g.vertex_count()) +
                                " per-vertex maps, got " + std::to_string(maps_.size()));
  }
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    if (!is_permutation_map(maps_[k], g.degree())) {
      throw std::invalid_argument("permutation: entry " + std::to_string(k) +
                                  " is not a permutation of the " + std::to_string(g.degree()) +
                                  " neighbor ranks");
    }
  }
}

CMatrix two_direction_coin(Complex q, Complex p) { return CMatrix{{q, p}, {p, q}}; }

CMatrix balanced_coin() {
  const double h = 1.0 / std::sqrt(2.0);
  return two_direction_coin(h, kI * h);
}

CMatrix grover_coin(std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("grover_coin: degree must be positive");
  CMatrix m(degree);
  const double off = 2.0 / static_cast<double>(degree);
  for (std::size_t r = 0; r < degree; ++r)
    for (std::size_t c = 0; c < degree; ++c) m(r, c) = off - (r == c ? 1.0 : 0.0);
  return m;
}

PermutationSpec direction_swap() { return PermutationSpec::uniform({1, 0}); }

CoinedState coin_apply(const CoinedState& s, const CoinSpec& c) {
  check_state(s);
  const Graph& g = *s.graph;
  c.validate(g);
  const std::size_t d = g.degree();
  CoinedState out{s.graph, CVector(s.amplitudes.size()), s.time};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const CMatrix& block = c.block(v);
    const Complex* in = s.amplitudes.data() + v * d;
    Complex* dst = out.amplitudes.data() + v * d;
    for (std::size_t r = 0; r < d; ++r) {
      Complex acc{};
      for (std::size_t k = 0; k < d; ++k) acc += block(r, k) * in[k];
      dst[r] = acc;
    }
  }
  return out;
}

CoinedState flip_flop(const CoinedState& s) {
  check_state(s);
  CoinedState out{s.graph, CVector(s.amplitudes.size()), s.time};
  for (std::size_t a = 0; a < s.amplitudes.size(); ++a) out.amplitudes[s.graph->reverse_arc(a)] = s.amplitudes[a];
  return out;
}

CoinedState local_permute(const CoinedState& s, const PermutationSpec& p) {
  check_state(s);
  const Graph& g = *s.graph;
  p.validate(g);
  const std::size_t d = g.degree();
  CoinedState out{s.graph, CVector(s.amplitudes.size()), s.time};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& m = p.map(v);
    for (std::size_t r = 0; r < d; ++r) out.amplitudes[v * d + m[r]] = s.amplitudes[v * d + r];
  }
  return out;
}

CoinedState cqw_step(const CoinedState& s, const CoinSpec& c, const PermutationSpec& p) {
  CoinedState out = local_permute(flip_flop(coin_apply(s, c)), p);
  out.time = s.time + 1;
  return out;
}

CoinedState cqw_evolve(const CoinedState& s0, const CoinSpec& c, const PermutationSpec& p, std::size_t steps) {
  check_state(s0);
  CoinedState s = s0;
  for (std::size_t t = 0; t < steps; ++t) s = cqw_step(s, c, p);
  return s;
}

std::vector<double> vertex_distribution(const CoinedState& s) {
  check_state(s);
  const std::size_t d = s.graph->degree();
  std::vector<double> out(s.graph->vertex_count(), 0.0);
  for (std::size_t a = 0; a < s.amplitudes.size(); ++a) out[a / d] += std::norm(s.amplitudes[a]);
  return out;
}

bool is_cycle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (g.degree() != 2 || n < 3) return false;
  for (VertexId i = 0; i < n; ++i)
    if (!g.adjacent(i, (i + 1) % n)) return false;
  return true;
}

bool recurrence_matches_1d(const CoinedState& before, const CoinedState& after, Complex q, Complex p,
                           double tol) {
  check_state(before);
  check_state(after);
  const Graph& g = *before.graph;
  if (!is_cycle(g)) throw std::invalid_argument("recurrence check requires a cycle graph");
  const std::size_t n = g.vertex_count();
  auto prev = [n](VertexId i) { return (i + n - 1) % n; };
  auto next = [n](VertexId i) { return (i + 1) % n; };
  for (VertexId i = 0; i < n; ++i) {
    const Complex left = before.amplitudes[g.arc_index(i, prev(i))];
    const Complex right = before.amplitudes[g.arc_index(i, next(i))];
    const Complex to_left = after.amplitudes[g.arc_index(prev(i), prev(prev(i)))];
    const Complex to_right = after.amplitudes[g.arc_index(next(i), next(next(i)))];
    if (std::abs(to_left - (q * left + p * right)) > tol) return false;
    if (std::abs(to_right - (p * left + q * right)) > tol) return false;
  }
  return true;
}

bool recurrence_check_1d(const CoinedState& s, const CoinSpec& c, double tol) {
  check_state(s);
  if (!is_cycle(*s.graph)) throw std::invalid_argument("recurrence check requires a cycle graph");
  if (!c.is_uniform()) throw std::invalid_argument("recurrence check requires a uniform coin");
  const CMatrix& block = c.block(0);
  if (block.dim() != 2 || std::abs(block(0, 0) - block(1, 1)) > tol || std::abs(block(0, 1) - block(1, 0)) > tol) {
    throw std::invalid_argument("recurrence check requires the symmetric ((q, p), (p, q)) coin");
  }
  const CoinedState after = cqw_step(s, c, direction_swap());
  return recurrence_matches_1d(s, after, block(0, 0), block(0, 1), tol);
}

}  // namespace qwqca
