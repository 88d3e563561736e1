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
#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qwqca/translate.hpp"

using namespace qwqca;

namespace {

bool mentions(const ValidationReport& r, const std::string& needle) {
  return r.summary().find(needle) != std::string::npos;
}

std::shared_ptr<const Automaton> shared(Automaton a) { return std::make_shared<const Automaton>(std::move(a)); }

SingleExcitationState random_single(std::shared_ptr<const Automaton> a, std::mt19937_64& rng) {
  return {a, oracle::gaussian_state(a->subcell_count(), rng), 0};
}

/** A few random automata with weight-preserving tile unitaries and mixed tile sizes. */
std::vector<std::shared_ptr<const Automaton>> random_automata(std::mt19937_64& rng) {
  std::vector<std::shared_ptr<const Automaton>> out;
  out.push_back(shared(fixture::ring_automaton(5, fixture::random_weight_preserving(2, rng),
                                               fixture::random_weight_preserving(2, rng))));
  // 4 cells x 3 subcells: cell tiles, then tiles straddling neighbouring cells.
  Automaton a{4, 3, {}};
  Tiling cells{{}, fixture::random_weight_preserving(3, rng)};
  Tiling straddle{{}, fixture::random_weight_preserving(3, rng)};
  for (std::size_t i = 0; i < 4; ++i) {
    cells.tiles.push_back({a.subcell(i, 0), a.subcell(i, 1), a.subcell(i, 2)});
    straddle.tiles.push_back({a.subcell(i, 2), a.subcell((i + 1) % 4, 0), a.subcell((i + 1) % 4, 1)});
  }
  Tiling singles{{}, fixture::random_weight_preserving(1, rng)};
  for (SubcellId s = 0; s < 12; ++s) singles.tiles.push_back({s});
  a.tilings = {cells, straddle, singles};
  out.push_back(shared(a));
  return out;
}

}  // namespace

TEST(ValidateAutomaton, RingOfTwoSubcellCellsIsValid) {
  const Automaton a = fixture::ring_automaton(6, embed_weight_one(CMatrix{{0.6, 0.8}, {-0.8, 0.6}}), swap_gate());
  const auto report = validate_automaton(a);
  EXPECT_TRUE(report.ok()) << report.structural.summary() << report.single_excitation.summary();
}

TEST(ValidateAutomaton, ReportsOverlapAndGaps) {
  Automaton a = fixture::ring_automaton(4, swap_gate(), swap_gate());
  a.tilings[0].tiles[1] = {0, 3};
  const auto report = validate_automaton(a);
  EXPECT_TRUE(mentions(report.structural, "tiling 0: subcell 0 appears in overlapping tiles"));
  EXPECT_TRUE(mentions(report.structural, "tiling 0: subcell 2 is not covered"));
}

TEST(ValidateAutomaton, ReportsExcitationCoupling) {
  CMatrix w = CMatrix::identity(4);
  // Rotate |01> into |11>: unitary but couples weight 1 and weight 2.
  w(1, 1) = 0.0;
  w(3, 3) = 0.0;
  w(1, 3) = 1.0;
  w(3, 1) = 1.0;
  const auto report = validate_automaton(fixture::ring_automaton(4, w, swap_gate()));
  EXPECT_TRUE(report.structural.ok());
  EXPECT_TRUE(mentions(report.single_excitation, "tiling 0: unitary couples different excitation numbers"));
}

TEST(ValidateAutomaton, ReportsShapeUnitarityAndVacuum) {
  Automaton bad_dim = fixture::ring_automaton(3, CMatrix::identity(2), swap_gate());
  EXPECT_TRUE(mentions(validate_automaton(bad_dim).structural, "unitary has dimension 2"));

  CMatrix nonunitary = CMatrix::identity(4);
  nonunitary(1, 1) = 2.0;
  EXPECT_TRUE(mentions(validate_automaton(fixture::ring_automaton(3, nonunitary, swap_gate())).structural,
                       "fails the unitarity check"));

  const CMatrix phased = CMatrix::identity(4) * kI;
  const auto report = validate_automaton(fixture::ring_automaton(3, phased, swap_gate()));
  EXPECT_TRUE(report.structural.ok());
  EXPECT_TRUE(mentions(report.single_excitation, "vacuum amplitude is not 1"));

  Automaton ragged = fixture::ring_automaton(3, swap_gate(), swap_gate());
  ragged.tilings[1].tiles = {{1, 2, 3}, {4, 5, 0}};
  EXPECT_TRUE(mentions(validate_automaton(ragged).structural, "tiling 1: unitary has dimension 4, tiles need 8"));
  EXPECT_FALSE(validate_automaton(Automaton{}).ok());
}

TEST(QcaStepSingle, IdentityAndSwap) {
  std::mt19937_64 rng(1);
  const auto ident = shared(fixture::ring_automaton(5, CMatrix::identity(4), CMatrix::identity(4)));
  const auto s = random_single(ident, rng);
  EXPECT_EQ(qca_step_single(s).amplitudes, s.amplitudes);
  EXPECT_EQ(qca_step_single(s).time, 1u);

  const auto sw = shared(Automaton{2, 1, {Tiling{{{0, 1}}, swap_gate()}}});
  const auto out = qca_step_single(SingleExcitationState::localized(sw, 0));
  EXPECT_EQ(out.amplitudes, (CVector{0.0, 1.0}));
}

TEST(QcaStepSingle, RejectsInvalidAutomata) {
  CMatrix w = CMatrix::identity(4);
  w(1, 1) = 0.0;
  w(3, 3) = 0.0;
  w(1, 3) = 1.0;
  w(3, 1) = 1.0;
  const auto a = shared(fixture::ring_automaton(3, w, swap_gate()));
  EXPECT_THROW(qca_step_single(SingleExcitationState::localized(a, 0)), std::invalid_argument);
  FullState f = embed_single(SingleExcitationState::localized(a, 0));
  EXPECT_NO_THROW(qca_step_full(f));
}

TEST(QcaStepFull, IdentityAndSwap) {
  std::mt19937_64 rng(2);
  const auto ident = shared(fixture::ring_automaton(4, CMatrix::identity(4), CMatrix::identity(4)));
  const FullState f{ident, oracle::gaussian_state(std::size_t{1} << 8, rng), 0};
  EXPECT_EQ(qca_step_full(f).amplitudes, f.amplitudes);

  const auto sw = shared(Automaton{2, 1, {Tiling{{{0, 1}}, swap_gate()}}});
  // |01> has subcell 0 set: basis index 1; after SWAP only subcell 1 is set: index 2.
  const FullState out = qca_step_full(FullState{sw, CVector{0.0, 1.0, 0.0, 0.0}, 0});
  EXPECT_EQ(out.amplitudes, (CVector{0.0, 0.0, 1.0, 0.0}));
}

TEST(QcaStepFull, MatchesSingleBackendAfterFiveSteps) {
  std::mt19937_64 rng(3);
  for (const auto& a : random_automata(rng)) {
    const auto s = random_single(a, rng);
    const auto full = qca_evolve_full(embed_single(s), 5);
    EXPECT_LE(max_abs_diff(full.amplitudes, embed_single(qca_evolve_single(s, 5)).amplitudes), 1e-12);
  }
}

TEST(QcaStepFull, SizeGuard) {
  Automaton big{21, 1, {}};
  Tiling t{{}, CMatrix::identity(2)};
  for (SubcellId s = 0; s < 21; ++s) t.tiles.push_back({s});
  big.tilings = {t};
  const auto a = shared(big);
  const auto s = SingleExcitationState::localized(a, 0);
  EXPECT_NO_THROW(qca_step_single(s));
  EXPECT_THROW(embed_single(s), std::invalid_argument);
  EXPECT_THROW(qca_step_full(FullState{a, CVector(8), 0}), std::invalid_argument);
}

TEST(EmbedSingle, Examples) {
  Automaton three{3, 1, {Tiling{{{0}, {1}, {2}}, CMatrix::identity(2)}}};
  const auto a = shared(three);
  const auto e0 = embed_single(SingleExcitationState::localized(a, 0));
  ASSERT_EQ(e0.amplitudes.size(), 8u);
  EXPECT_EQ(e0.amplitudes[1], Complex{1.0});
  const auto e2 = embed_single(SingleExcitationState::localized(a, 2));
  EXPECT_EQ(e2.amplitudes[4], Complex{1.0});

  std::mt19937_64 rng(4);
  const auto s = random_single(a, rng);
  EXPECT_EQ(norm(embed_single(s).amplitudes), norm(s.amplitudes));
}

TEST(SingleExcitationBlock, ReadsWeightOneEntries) {
  const CMatrix block{{0.6, Complex{0, 0.8}}, {Complex{0, 0.8}, 0.6}};
  EXPECT_EQ(single_excitation_block(embed_weight_one(block)), block);
  EXPECT_EQ(single_excitation_block(swap_gate()), (CMatrix{{0, 1}, {1, 0}}));
}

TEST(CellDistribution, SumsSubcells) {
  const auto a = shared(fixture::ring_automaton(3, swap_gate(), swap_gate()));
  const double h = 1.0 / std::sqrt(2.0);
  const SingleExcitationState s{a, CVector{h, 0, 0, kI * h, 0, 0}, 0};
  const auto p = cell_distribution(s);
  EXPECT_NEAR(p[0], 0.5, 1e-15);
  EXPECT_NEAR(p[1], 0.5, 1e-15);
  EXPECT_EQ(p[2], 0.0);
}

TEST(AutomatonProperties, TileOrderIndependence) {
  std::mt19937_64 rng(5);
  for (const auto& a : random_automata(rng)) {
    Automaton shuffled = *a;
    for (auto& t : shuffled.tilings) std::shuffle(t.tiles.begin(), t.tiles.end(), rng);
    for (auto& t : shuffled.tilings)
      for (auto& tile : t.tiles) std::sort(tile.begin(), tile.end());
    const auto b = shared(shuffled);
    const auto s = random_single(a, rng);
    const SingleExcitationState sb{b, s.amplitudes, 0};
    EXPECT_LE(max_abs_diff(qca_step_single(s).amplitudes, qca_step_single(sb).amplitudes), 1e-14);

    const CVector f = oracle::gaussian_state(std::size_t{1} << a->subcell_count(), rng);
    EXPECT_LE(max_abs_diff(qca_step_full(FullState{a, f, 0}).amplitudes, qca_step_full(FullState{b, f, 0}).amplitudes),
              1e-14);
  }
}

TEST(AutomatonProperties, TileListingOrderDoesNotChangeBitOrder) {
  // Bit r of the local basis is the r-th smallest subcell id, however the tile is listed.
  std::mt19937_64 rng(6);
  const CMatrix w = fixture::random_weight_preserving(2, rng);
  const auto a = shared(fixture::ring_automaton(4, w, swap_gate()));
  Automaton reversed = *a;
  for (auto& tile : reversed.tilings[0].tiles) std::reverse(tile.begin(), tile.end());
  const auto b = shared(reversed);
  const auto s = random_single(a, rng);
  EXPECT_EQ(qca_step_single(s).amplitudes, qca_step_single(SingleExcitationState{b, s.amplitudes, 0}).amplitudes);
}

TEST(AutomatonProperties, WeightPreservingEvolutionDoesNotLeak) {
  std::mt19937_64 rng(7);
  for (const auto& a : random_automata(rng)) {
    FullState f = embed_single(random_single(a, rng));
    for (int t = 0; t < 20; ++t) f = qca_step_full(f);
    EXPECT_LE(leakage_outside_single(f), 1e-12);
  }
  // A unitary coupling weight 1 and weight 2 does leak.
  CMatrix w = CMatrix::identity(4);
  const double h = 1.0 / std::sqrt(2.0);
  w(1, 1) = h;
  w(1, 3) = h;
  w(3, 1) = -h;
  w(3, 3) = h;
  const auto bad = shared(fixture::ring_automaton(3, w, swap_gate()));
  const FullState f = qca_step_full(embed_single(SingleExcitationState::localized(bad, 0)));
  EXPECT_GT(leakage_outside_single(f), 0.1);
}

TEST(AutomatonProperties, BackendsAgreeOnTranslatedAutomata) {
  std::mt19937_64 rng(8);
  const auto c7 = std::make_shared<const Graph>(build_cycle(7));
  const auto cqw = cqw_to_puqca(c7, CoinSpec::uniform(balanced_coin()), direction_swap());
  ASSERT_EQ(cqw.automaton->subcell_count(), 14u);
  const auto c12 = std::make_shared<const Graph>(build_cycle(12));
  const auto cover = cycle_cover(12);
  const auto sqwh = sqwh_to_puqca(c12, SqwhSpec{cover, balanced_coefficients(cover), {1.0, 0.4}});
  for (const auto& a : {cqw.automaton, sqwh.automaton}) {
    auto s = random_single(a, rng);
    FullState f = embed_single(s);
    for (int t = 1; t <= 10; ++t) {
      s = qca_step_single(s);
      f = qca_step_full(f);
      ASSERT_LE(max_abs_diff(embed_single(s).amplitudes, f.amplitudes), 1e-10) << t;
    }
  }
}

TEST(AutomatonProperties, NormOnBothBackendsOverTwoHundredSteps) {
  std::mt19937_64 rng(9);
  for (const auto& a : random_automata(rng)) {
    auto s = random_single(a, rng);
    FullState f{a, oracle::gaussian_state(std::size_t{1} << a->subcell_count(), rng), 0};
    for (int t = 0; t < 200; ++t) {
      s = qca_step_single(s);
      f = qca_step_full(f);
    }
    EXPECT_LE(std::abs(norm(s.amplitudes) - 1.0), 1e-10);
    EXPECT_LE(std::abs(norm(f.amplitudes) - 1.0), 1e-10);
  }
}
