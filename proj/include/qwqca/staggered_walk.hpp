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
#include <span>
#include <vector>

#include "qwqca/algebra.hpp"
#include "qwqca/graph.hpp"

namespace qwqca {

/** Vertex-indexed staggered walk state. */
struct StaggeredState {
  std::shared_ptr<const Graph> graph;
  CVector amplitudes;
  std::size_t time = 0;

  static StaggeredState localized(std::shared_ptr<const Graph> graph, VertexId v);
  static StaggeredState from_amplitudes(std::shared_ptr<const Graph> graph, CVector amplitudes);
};

/**
 * Staggered walk with Hamiltonians.
 *
 * coefficients[k][r] is a_k(r): the weight of the r-th vertex (ascending id)
 * of every polygon in tessellation k. All polygons of a tessellation must
 * therefore share one size. One step applies exp(i angles[k] H_k) for
 * k = 0, 1, ..., N-1 in that order.
 */
struct SqwhSpec {
  TessellationCover cover;
  std::vector<CVector> coefficients;
  std::vector<double> angles;

  /** Throws std::invalid_argument naming the first broken invariant. */
  void validate(const Graph& g) const;
};

/** Balanced weights 1/sqrt(m) for every tessellation, sized from its first polygon. */
std::vector<CVector> balanced_coefficients(const TessellationCover& cover);

/** Unit vector sum_r a(r) |polygon[r]> of dimension n_vertices, polygon ranked by ascending id. */
CVector polygon_vector(std::span<const VertexId> polygon, std::span<const Complex> coeffs,
                       std::size_t n_vertices);

/** 2 sum_alpha |alpha><alpha| - I over the whole vertex space. */
CMatrix tess_hamiltonian(const Graph& g, const Tessellation& t, std::span<const Complex> coeffs);

/**
 * Closed-form block exp(i theta (2|alpha><alpha| - I)) on one polygon:
 *   e^{-i theta} I + 2i sin(theta) a(r) conj(a(s)),
 * indexed by within-polygon rank.
 */
CMatrix polygon_propagator(std::span<const Complex> coeffs, double theta);

/** Direct sum of polygon_propagator blocks, assembled as a |V| x |V| matrix. */
CMatrix tess_propagator(const Graph& g, const Tessellation& t, std::span<const Complex> coeffs, double theta);

/** One step, applied polygon block by polygon block. */
StaggeredState sqwh_step(const StaggeredState& s, const SqwhSpec& spec);

StaggeredState sqwh_evolve(const StaggeredState& s0, const SqwhSpec& spec, std::size_t steps);

/** |psi(i)|^2. */
std::vector<double> vertex_distribution(const StaggeredState& s);

}  // namespace qwqca
