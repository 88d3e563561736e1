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

/**
 * Coined walk state. amplitudes[g.arc_index(i, j)] is the amplitude of the
 * walker sitting on vertex i pointing toward j.
 */
struct CoinedState {
  std::shared_ptr<const Graph> graph;
  CVector amplitudes;
  std::size_t time = 0;

  /** Unit amplitude on the arc tail -> head. */
  static CoinedState localized(std::shared_ptr<const Graph> graph, VertexId tail, VertexId head);
  static CoinedState from_amplitudes(std::shared_ptr<const Graph> graph, CVector amplitudes);
};

/**
 * Block-diagonal coin: one d x d unitary per vertex acting on the
 * neighbor-rank basis of that vertex.
 */
class CoinSpec {
 public:
  static CoinSpec uniform(CMatrix block);
  static CoinSpec per_vertex(std::vector<CMatrix> blocks);

  bool is_uniform() const { return blocks_.size() == 1; }
  const CMatrix& block(VertexId v) const { return is_uniform() ? blocks_.front() : blocks_.at(v); }
  const std::vector<CMatrix>& blocks() const { return blocks_; }

  /** Throws std::invalid_argument on dimension, count or unitarity problems. */
  void validate(const Graph& g) const;

 private:
  std::vector<CMatrix> blocks_;
};

/**
 * Per-vertex relabeling of neighbor ranks: amplitude at rank r of vertex v
 * moves to rank map(v)[r].
 */
class PermutationSpec {
 public:
  using Map = std::vector<std::size_t>;

  static PermutationSpec identity(std::size_t degree);
  static PermutationSpec uniform(Map map);
  static PermutationSpec per_vertex(std::vector<Map> maps);

  bool is_uniform() const { return maps_.size() == 1; }
  const Map& map(VertexId v) const { return is_uniform() ? maps_.front() : maps_.at(v); }
  const std::vector<Map>& maps() const { return maps_; }

  PermutationSpec inverse() const;

  /** The permutation as a d x d 0/1 matrix M with M(map[r], r) = 1. */
  CMatrix matrix(VertexId v) const;

  void validate(const Graph& g) const;

 private:
  std::vector<Map> maps_;
};

/** ((q, p), (p, q)); unitary iff |p|^2 + |q|^2 = 1 and conj(p) q + conj(q) p = 0. */
CMatrix two_direction_coin(Complex q, Complex p);

/** The balanced coin q = 1/sqrt(2), p = i/sqrt(2). */
CMatrix balanced_coin();

/** 2|s><s| - I with |s> uniform over d directions. */
CMatrix grover_coin(std::size_t degree);

/** The two-direction swap X used by the moving shift on cycles. */
PermutationSpec direction_swap();

CoinedState coin_apply(const CoinedState& s, const CoinSpec& c);

/** Exchanges the amplitudes of every arc pair (i -> j), (j -> i). */
CoinedState flip_flop(const CoinedState& s);

CoinedState local_permute(const CoinedState& s, const PermutationSpec& p);

/** local_permute(flip_flop(coin_apply(s, c)), p), time + 1. */
CoinedState cqw_step(const CoinedState& s, const CoinSpec& c, const PermutationSpec& p);

CoinedState cqw_evolve(const CoinedState& s0, const CoinSpec& c, const PermutationSpec& p, std::size_t steps);

/** P(i) = sum over neighbors j of |psi_(i,j)(i)|^2. */
std::vector<double> vertex_distribution(const CoinedState& s);

/** True iff g is C_n with vertex i adjacent to (i +- 1) mod n. */
bool is_cycle(const Graph& g);

/**
 * Checks a one-step pair (before, after) against the moving-shift recurrences
 *   psi_(i-1 -> i-2)(t+1) = q psi_(i -> i-1)(t) + p psi_(i -> i+1)(t)
 *   psi_(i+1 -> i+2)(t+1) = p psi_(i -> i-1)(t) + q psi_(i -> i+1)(t)
 * entrywise to tol. Positions are read through arc lookups, never through
 * neighbor ranks.
 */
bool recurrence_matches_1d(const CoinedState& before, const CoinedState& after, Complex q, Complex p,
                           double tol);

/**
 * Steps s once with coin c and the direction swap and checks the result
 * against recurrence_matches_1d. The coin must be uniform and of the
 * symmetric (q, p) form; the graph must be a cycle.
 */
bool recurrence_check_1d(const CoinedState& s, const CoinSpec& c, double tol);

}  // namespace qwqca
