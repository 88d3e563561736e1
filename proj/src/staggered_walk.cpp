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

#include "qwqca/staggered_walk.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwqca {

namespace {

void check_state(const StaggeredState& s) {
  if (!s.graph) throw std::invalid_argument("staggered state has no graph");
  if (s.amplitudes.size() != s.graph->vertex_count()) {
    throw std::invalid_argument("staggered state dimension " + std::to_string(s.amplitudes.size()) +
                                " does not match vertex count " + std::to_string(s.graph->vertex_count()));
  }
}

void check_coefficients(std::span<const Complex> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("polygon coefficients are empty");
  if (!all_finite(coeffs)) throw std::invalid_argument("polygon coefficients are not finite");
  const double n = norm(coeffs);
  if (std::abs(n * n - 1.0) > kIdentityTol) {
    throw std::invalid_argument("polygon coefficients are not normalized (sum |a|^2 = " + std::to_string(n * n) +
                                ")");
  }
}

void check_tessellation(const Graph& g, const Tessellation& t, std::span<const Complex> coeffs) {
  const auto report = validate_tessellation(g, t);
  if (!report.ok()) throw std::invalid_argument("invalid tessellation: " + report.summary());
  check_coefficients(coeffs);
  for (const auto& polygon : t.polygons) {
    if (polygon.size() != coeffs.size()) {
      throw std::invalid_argument("polygon of size " + std::to_string(polygon.size()) + " does not match " +
                                  std::to_string(coeffs.size()) + " coefficients");
    }
  }
}

}  // namespace

StaggeredState StaggeredState::localized(std::shared_ptr<const Graph> graph, VertexId v) {
  StaggeredState s{std::move(graph), {}, 0};
  s.amplitudes.assign(s.graph->vertex_count(), Complex{});
  s.amplitudes.at(v) = 1.0;
  return s;
}

StaggeredState StaggeredState::from_amplitudes(std::shared_ptr<const Graph> graph, CVector amplitudes) {
  StaggeredState s{std::move(graph), std::move(amplitudes), 0};
  check_state(s);
  return s;
}

void SqwhSpec::validate(const Graph& g) const {
  const auto report = validate_cover(g, cover);
  if (!report.tessellations.ok()) throw std::invalid_argument("invalid cover: " + report.tessellations.summary());
  if (!report.uncovered_edges.empty()) {
    const auto& e = report.uncovered_edges.front();
    throw std::invalid_argument("invalid cover: " + std::to_string(report.uncovered_edges.size()) +
                                " uncovered edges, first (" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + ")");
  }
  const std::size_t n = cover.tessellations.size();
  if (coefficients.size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " coefficient lists, got " +
                                std::to_string(coefficients.size()));
  }
  if (angles.size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " angles, got " + std::to_string(angles.size()));
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!(angles[k] >= 0.0 && angles[k] <= 2.0 * std::numbers::pi)) {
      throw std::invalid_argument("angle " + std::to_string(k) + " is outside [0, 2pi]");
    }
    try {
      check_tessellation(g, cover.tessellations[k], coefficients[k]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("tessellation " + std::to_string(k) + ": " + e.what());
    }
  }
}

std::vector<CVector> balanced_coefficients(const TessellationCover& cover) {
  std::vector<CVector> out;
  for (const auto& t : cover.tessellations) {
    if (t.polygons.empty()) throw std::invalid_argument("balanced_coefficients: empty tessellation");
    const std::size_t m = t.polygons.front().size();
    out.emplace_back(m, Complex{1.0 / std::sqrt(static_cast<double>(m)), 0.0});
  }
  return out;
}

CVector polygon_vector(std::span<const VertexId> polygon, std::span<const Complex> coeffs, std::size_t n_vertices) {
  if (polygon.size() != coeffs.size()) {
    throw std::invalid_argument("polygon_vector: " + std::to_string(coeffs.size()) + " coefficients for a polygon of " +
                                std::to_string(polygon.size()) + " vertices");
  }
  check_coefficients(coeffs);
  const auto ranked = sorted_polygon(polygon);
  CVector out(n_vertices);
  for (std::size_t r = 0; r < ranked.size(); ++r) out.at(ranked[r]) = coeffs[r];
  return out;
}

CMatrix tess_hamiltonian(const Graph& g, const Tessellation& t, std::span<const Complex> coeffs) {
  check_tessellation(g, t, coeffs);
  CMatrix h = CMatrix::identity(g.vertex_count()) * Complex{-1.0};
  for (const auto& polygon : t.polygons) {
    const auto ranked = sorted_polygon(polygon);
    for (std::size_t r = 0; r < ranked.size(); ++r)
      for (std::size_t c = 0; c < ranked.size(); ++c)
        h(ranked[r], ranked[c]) += 2.0 * coeffs[r] * std::conj(coeffs[c]);
  }
  return h;
}

CMatrix polygon_propagator(std::span<const Complex> coeffs, double theta) {
  check_coefficients(coeffs);
  const std::size_t m = coeffs.size();
  const Complex diag = std::exp(-kI * theta);
  const Complex cross = 2.0 * kI * std::sin(theta);
  CMatrix u(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) u(r, c) = cross * coeffs[r] * std::conj(coeffs[c]);
    u(r, r) += diag;
  }
  return u;
}

CMatrix tess_propagator(const Graph& g, const Tessellation& t, std::span<const Complex> coeffs, double theta) {
  check_tessellation(g, t, coeffs);
  const CMatrix block = polygon_propagator(coeffs, theta);
  CMatrix u(g.vertex_count());
  for (const auto& polygon : t.polygons) {
    const auto ranked = sorted_polygon(polygon);
    for (std::size_t r = 0; r < ranked.size(); ++r)
      for (std::size_t c = 0; c < ranked.size(); ++c) u(ranked[r], ranked[c]) = block(r, c);
  }
  return u;
}

StaggeredState sqwh_step(const StaggeredState& s, const SqwhSpec& spec) {
  check_state(s);
  spec.validate(*s.graph);
  StaggeredState out = s;
  CVector local;
  for (std::size_t k = 0; k < spec.cover.tessellations.size(); ++k) {
    const CMatrix block = polygon_propagator(spec.coefficients[k], spec.angles[k]);
    for (const auto& polygon : spec.cover.tessellations[k].polygons) {
      const auto ranked = sorted_polygon(polygon);
      local.resize(ranked.size());
      for (std::size_t r = 0; r < ranked.size(); ++r) local[r] = out.amplitudes[ranked[r]];
      const CVector moved = mat_apply(block, local);
      for (std::size_t r = 0; r < ranked.size(); ++r) out.amplitudes[ranked[r]] = moved[r];
    }
  }
  out.time = s.time + 1;
  return out;
}

StaggeredState sqwh_evolve(const StaggeredState& s0, const SqwhSpec& spec, std::size_t steps) {
  check_state(s0);
  StaggeredState s = s0;
  for (std::size_t t = 0; t < steps; ++t) s = sqwh_step(s, spec);
  return s;
}

std::vector<double> vertex_distribution(const StaggeredState& s) {
  check_state(s);
  std::vector<double> out(s.amplitudes.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::norm(s.amplitudes[i]);
  return out;
}

}  // namespace qwqca
