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

#include "qwqca/automaton.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qwqca {

namespace {

constexpr double kWeightLeakTol = 1e-14;

std::string tiling_label(std::size_t k) { return "tiling " + std::to_string(k); }

void require_valid(const Automaton& a, bool single) {
  const auto report = validate_automaton(a);
  if (!report.structural.ok()) throw std::invalid_argument("invalid automaton: " + report.structural.summary());
  if (single && !report.single_excitation.ok()) {
    throw std::invalid_argument("automaton cannot use the single-excitation backend: " +
                                report.single_excitation.summary());
  }
}

}  // namespace

AutomatonReport validate_automaton(const Automaton& a) {
  AutomatonReport report;
  auto& structural = report.structural.violations;
  auto& single = report.single_excitation.violations;
  const std::size_t q = a.subcell_count();
  if (a.n_cells == 0) structural.push_back("automaton has no cells");
  if (a.subcells_per_cell == 0) structural.push_back("subcells_per_cell must be positive");
  if (a.tilings.empty()) structural.push_back("automaton has no tilings");

  for (std::size_t k = 0; k < a.tilings.size(); ++k) {
    const Tiling& tiling = a.tilings[k];
    const std::string label = tiling_label(k);
    if (tiling.tiles.empty()) {
      structural.push_back(label + " has no tiles");
      continue;
    }
    const std::size_t size = tiling.tiles.front().size();
    std::vector<int> hits(q, 0);
    for (std::size_t j = 0; j < tiling.tiles.size(); ++j) {
      const Tile& tile = tiling.tiles[j];
      if (tile.size() != size) {
        structural.push_back(label + ": tile " + std::to_string(j) + " has size " + std::to_string(tile.size()) +
                             ", expected " + std::to_string(size));
      }
      for (SubcellId s : tile) {
        if (s >= q) {
          structural.push_back(label + ": tile " + std::to_string(j) + " has out-of-range subcell " +
                               std::to_string(s));
        } else if (++hits[s] == 2) {
          structural.push_back(label + ": subcell " + std::to_string(s) + " appears in overlapping tiles");
        }
      }
    }
    for (SubcellId s = 0; s < q; ++s)
      if (hits[s] == 0) structural.push_back(label + ": subcell " + std::to_string(s) + " is not covered");

    if (size == 0 || size >= 16) {
      structural.push_back(label + ": unsupported tile size " + std::to_string(size));
      continue;
    }
    const std::size_t dim = std::size_t{1} << size;
    const CMatrix& w = tiling.unitary;
    if (w.dim() != dim) {
      structural.push_back(label + ": unitary has dimension " + std::to_string(w.dim()) + ", tiles need " +
                           std::to_string(dim));
      continue;
    }
    if (!is_unitary(w, kIdentityTol)) structural.push_back(label + ": unitary fails the unitarity check");

    bool leaks = false;
    for (std::size_t r = 0; r < dim && !leaks; ++r)
      for (std::size_t c = 0; c < dim && !leaks; ++c)
        if (std::popcount(r) != std::popcount(c) && std::abs(w(r, c)) > kWeightLeakTol) leaks = true;
    if (leaks) single.push_back(label + ": unitary couples different excitation numbers");
    if (std::abs(w(0, 0) - Complex{1.0}) > kWeightLeakTol) single.push_back(label + ": vacuum amplitude is not 1");
  }
  return report;
}

CMatrix single_excitation_block(const CMatrix& w) {
  const std::size_t size = static_cast<std::size_t>(std::countr_zero(w.dim()));
  if (w.dim() == 0 || (std::size_t{1} << size) != w.dim()) {
    throw std::invalid_argument("single_excitation_block: dimension is not a power of two");
  }
  CMatrix block(size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) block(r, c) = w(std::size_t{1} << r, std::size_t{1} << c);
  return block;
}

SingleExcitationState SingleExcitationState::localized(std::shared_ptr<const Automaton> automaton, SubcellId s) {
  SingleExcitationState out{std::move(automaton), {}, 0};
  out.amplitudes.assign(out.automaton->subcell_count(), Complex{});
  out.amplitudes.at(s) = 1.0;
  return out;
}

SingleExcitationState qca_step_single(const SingleExcitationState& s) {
  if (!s.automaton) throw std::invalid_argument("single-excitation state has no automaton");
  const Automaton& a = *s.automaton;
  require_valid(a, true);
  if (s.amplitudes.size() != a.subcell_count()) {
    throw std::invalid_argument("single-excitation state dimension does not match the subcell count");
  }
  SingleExcitationState out = s;
  CVector local;
  for (const Tiling& tiling : a.tilings) {
    const CMatrix block = single_excitation_block(tiling.unitary);
    for (const Tile& tile : tiling.tiles) {
      const Tile ranked = sorted_polygon(tile);
      local.resize(ranked.size());
      for (std::size_t r = 0; r < ranked.size(); ++r) local[r] = out.amplitudes[ranked[r]];
      const CVector moved = mat_apply(block, local);
      for (std::size_t r = 0; r < ranked.size(); ++r) out.amplitudes[ranked[r]] = moved[r];
    }
  }
  out.time = s.time + 1;
  return out;
}

SingleExcitationState qca_evolve_single(const SingleExcitationState& s0, std::size_t steps) {
  SingleExcitationState s = s0;
  for (std::size_t t = 0; t < steps; ++t) s = qca_step_single(s);
  return s;
}

FullState qca_step_full(const FullState& s) {
  if (!s.automaton) throw std::invalid_argument("full state has no automaton");
  const Automaton& a = *s.automaton;
  const std::size_t q = a.subcell_count();
  if (q > kMaxFullQubits) {
    throw std::invalid_argument("full backend supports at most " + std::to_string(kMaxFullQubits) + " qubits, got " +
                                std::to_string(q));
  }
  require_valid(a, false);
  if (s.amplitudes.size() != (std::size_t{1} << q)) {
    throw std::invalid_argument("full state dimension does not match 2^subcells");
  }
  FullState out = s;
  CVector local;
  std::vector<std::size_t> offsets;
  for (const Tiling& tiling : a.tilings) {
    const CMatrix& w = tiling.unitary;
    for (const Tile& tile : tiling.tiles) {
      const Tile ranked = sorted_polygon(tile);
      const std::size_t local_dim = std::size_t{1} << ranked.size();
      std::size_t tile_mask = 0;
      offsets.assign(local_dim, 0);
      for (std::size_t r = 0; r < ranked.size(); ++r) tile_mask |= std::size_t{1} << ranked[r];
      for (std::size_t l = 0; l < local_dim; ++l)
        for (std::size_t r = 0; r < ranked.size(); ++r)
          if (l >> r & 1U) offsets[l] |= std::size_t{1} << ranked[r];
      local.resize(local_dim);
      for (std::size_t base = 0; base < out.amplitudes.size(); ++base) {
        if (base & tile_mask) continue;
        for (std::size_t l = 0; l < local_dim; ++l) local[l] = out.amplitudes[base | offsets[l]];
        for (std::size_t r = 0; r < local_dim; ++r) {
          Complex acc{};
          for (std::size_t c = 0; c < local_dim; ++c) acc += w(r, c) * local[c];
          out.amplitudes[base | offsets[r]] = acc;
        }
      }
    }
  }
  out.time = s.time + 1;
  return out;
}

FullState qca_evolve_full(const FullState& s0, std::size_t steps) {
  FullState s = s0;
  for (std::size_t t = 0; t < steps; ++t) s = qca_step_full(s);
  return s;
}

FullState embed_single(const SingleExcitationState& s) {
  if (!s.automaton) throw std::invalid_argument("single-excitation state has no automaton");
  const std::size_t q = s.automaton->subcell_count();
  if (q > kMaxFullQubits) {
    throw std::invalid_argument("embed_single: " + std::to_string(q) + " qubits exceed the full-backend limit");
  }
  if (s.amplitudes.size() != q) throw std::invalid_argument("embed_single: state dimension mismatch");
  FullState out{s.automaton, CVector(std::size_t{1} << q), s.time};
  for (SubcellId i = 0; i < q; ++i) out.amplitudes[std::size_t{1} << i] = s.amplitudes[i];
  return out;
}

double leakage_outside_single(const FullState& s) {
  double total = 0.0;
  for (std::size_t b = 0; b < s.amplitudes.size(); ++b)
    if (std::popcount(b) != 1) total += std::norm(s.amplitudes[b]);
  return total;
}

std::vector<double> cell_distribution(const SingleExcitationState& s) {
  const std::size_t n = s.automaton->subcells_per_cell;
  std::vector<double> out(s.automaton->n_cells, 0.0);
  for (std::size_t i = 0; i < s.amplitudes.size(); ++i) out.at(i / n) += std::norm(s.amplitudes[i]);
  return out;
}

}  // namespace qwqca
