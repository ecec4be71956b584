// Copyright 2026 The olsc Authors
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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "olsc/error.hpp"
#include "olsc/labeler.hpp"
#include "olsc/synthesizer.hpp"
#include "oracles.hpp"

namespace olsc {
namespace {

constexpr auto kChain = TopologyKind::kQuadrupolarChain;
constexpr auto kCube = TopologyKind::kSpinHalfHypercube;

// Every multi-state chain sits on consecutive topology neighbours.
void expect_chains_are_paths(const MaximalSetDecomposition& d, const LabelingScheme& s,
                             const Topology& t) {
  for (const auto& set : d.sets) {
    for (std::size_t j = 0; j + 1 < set.size(); ++j) {
      EXPECT_TRUE(t.adjacent(s.labeling.level(set.chain[j]),
                             s.labeling.level(set.chain[j + 1])))
          << format_state(set.chain[j], d.n_qubits);
    }
  }
}

TEST(OlsChain, AdderPlacesLargestSetsFirst) {
  const auto t = Topology::build(kChain, 4);
  const auto d = maximal_sets(full_adder4());
  const auto s = ols_quadrupolar(d, t);
  EXPECT_EQ(s.provenance, Provenance::kOls);
  // S5 on levels 0..3 in chain order, S6 on 4..7, then S7, S8, singletons.
  const std::vector<State> want{0b0100, 0b0110, 0b0101, 0b0111, 0b1000, 0b1010,
                                0b1001, 0b1011, 0b1100, 0b1101, 0b1110, 0b1111,
                                0b0000, 0b0001, 0b0010, 0b0011};
  for (Level l = 0; l < 16; ++l) EXPECT_EQ(s.labeling.label(l), want[l]) << l;
  ASSERT_EQ(s.placements.size(), 4u);
  EXPECT_EQ(s.placements[0].set_index, 4u);
  EXPECT_EQ(s.placements[0].levels, (std::vector<Level>{0, 1, 2, 3}));
  expect_chains_are_paths(d, s, t);
  EXPECT_EQ(synthesize(full_adder4(), s, t).size(), 8u);
}

TEST(OlsChain, IdentityKeepsConventionalLabeling) {
  const auto t = Topology::build(kChain, 3);
  const auto s = ols_quadrupolar(maximal_sets(Permutation::identity(3)), t);
  EXPECT_EQ(s.labeling, conventional_labeling(t));
  EXPECT_TRUE(s.placements.empty());
}

TEST(OlsChain, AdderThenSwapNeedsTwelve) {
  const auto t = Topology::build(kChain, 4);
  const auto p = compose(full_adder4(), swap_qubits(4, 2, 4));
  const auto s = ols_quadrupolar(maximal_sets(p), t);
  EXPECT_EQ(synthesize(p, s, t).size(), 12u);
}

TEST(OlsChain, RejectsWrongTopology) {
  const auto d = maximal_sets(full_adder4());
  EXPECT_THROW(ols_quadrupolar(d, Topology::build(kCube, 4)), std::invalid_argument);
  EXPECT_THROW(ols_quadrupolar(d, Topology::build(kChain, 3)), std::invalid_argument);
}

TEST(Enumerate, AdderCount) {
  const auto t = Topology::build(kChain, 4);
  OlsEnumerator it(maximal_sets(full_adder4()), t);
  std::size_t n = 0;
  while (it.next()) ++n;
  EXPECT_EQ(n, 645120u);
  EXPECT_FALSE(it.next());
}

TEST(Enumerate, FirstIsDefaultPlacement) {
  const auto t = Topology::build(kChain, 4);
  const auto d = maximal_sets(full_adder4());
  const auto first = enumerate_ols_quadrupolar(d, t, 1);
  ASSERT_EQ(first.size(), 1u);
  EXPECT_EQ(first[0].labeling, ols_quadrupolar(d, t).labeling);
  EXPECT_EQ(enumerate_ols_quadrupolar(d, t, 5).size(), 5u);
  EXPECT_THROW(enumerate_ols_quadrupolar(d, t, 0), std::invalid_argument);
}

TEST(Enumerate, OneQubitIdentityHasTwo) {
  const auto t = Topology::build(kChain, 1);
  EXPECT_EQ(enumerate_ols_quadrupolar(maximal_sets(Permutation::identity(1)), t, 100).size(),
            2u);
}

TEST(Enumerate, ExhaustiveSmallCountsDistinctAndOptimal) {
  std::mt19937_64 rng(11);
  for (int n : {2, 3}) {
    const auto t = Topology::build(kChain, n);
    const int trials = n == 2 ? 24 : 15;
    for (int trial = 0; trial < trials; ++trial) {
      const auto map = testing::random_map(n, rng);
      const auto p = Permutation::from_map(n, map);
      const auto d = maximal_sets(p);
      const auto all = enumerate_ols_quadrupolar(d, t, 1u << 30);
      const std::size_t k = d.multi_element_count();
      EXPECT_EQ(all.size(), testing::factorial(d.sets.size()) << k);
      std::set<std::vector<State>> distinct;
      for (const auto& s : all) {
        distinct.emplace(s.labeling.labels().begin(), s.labeling.labels().end());
        if (n == 2 || trial < 3) {
          expect_chains_are_paths(d, s, t);
          EXPECT_EQ(synthesize(p, s, t).size(), min_pulse_count(d));
        }
      }
      EXPECT_EQ(distinct.size(), all.size());
    }
  }
}

TEST(PairSwap, AdderRepairsWithTwoExchanges) {
  const auto t = Topology::build(kCube, 4);
  const auto d = maximal_sets(full_adder4());
  const auto s = relabel_pairswap_spin_half(d, t);
  EXPECT_EQ(s.provenance, Provenance::kRelabeledPairSwap);
  const auto want = conventional_labeling(t)
                        .with_swapped_labels(0b0100, 0b0110)
                        .with_swapped_labels(0b1000, 0b1010);
  EXPECT_EQ(s.labeling, want);
  EXPECT_TRUE(t.adjacent(s.labeling.level(0b0101), s.labeling.level(0b0110)));
  EXPECT_TRUE(t.adjacent(s.labeling.level(0b1001), s.labeling.level(0b1010)));
  expect_chains_are_paths(d, s, t);
  EXPECT_EQ(synthesize(full_adder4(), s, t).size(), 8u);
}

TEST(PairSwap, IdentityUnchanged) {
  const auto t = Topology::build(kCube, 3);
  const auto s = relabel_pairswap_spin_half(maximal_sets(Permutation::identity(3)), t);
  EXPECT_EQ(s.labeling, conventional_labeling(t));
}

TEST(PairSwap, ExplicitExchangesMakePaths) {
  const auto t = Topology::build(kCube, 4);
  const auto d = maximal_sets(full_adder4());
  const auto s = scheme_from_pair_swaps(t, {{0b0100, 0b0110}, {0b1000, 0b1010}}, d);
  expect_chains_are_paths(d, s, t);
  EXPECT_EQ(s.placements.size(), 4u);
  // These exchanges leave |0110> -> |0101> off the transitions, so the
  // scheme falls back to routing, still in eight pulses.
  const auto routed = scheme_from_pair_swaps(t, {{0b0100, 0b0111}, {0b1000, 0b1011}}, d);
  EXPECT_TRUE(routed.placements.empty());
  EXPECT_EQ(routed.provenance, Provenance::kRelabeledPairSwap);
  EXPECT_EQ(synthesize(full_adder4(), routed, t).size(), 8u);
  EXPECT_THROW(scheme_from_pair_swaps(t, {{0, 16}}, d), std::invalid_argument);
}

TEST(PairSwap, ReportsUnrepairableChain) {
  // 2 -> 3 -> 5 -> 4 -> 2 on three qubits: no single exchange joins
  // |011> to |101> without breaking a link that already holds.
  const auto t = Topology::build(kCube, 3);
  const auto p = Permutation::from_map(3, {0, 1, 3, 5, 2, 4, 6, 7});
  const auto d = maximal_sets(p);
  try {
    relabel_pairswap_spin_half(d, t);
    FAIL() << "expected UnrepairableChain";
  } catch (const UnrepairableChain& e) {
    EXPECT_EQ(e.set_index(), 2u);
    EXPECT_NE(std::string(e.what()).find("|011> -> |101>"), std::string::npos);
  }
  // The fallback still produces a path labeling.
  const auto s = ols_spin_half(d, t);
  EXPECT_EQ(s.provenance, Provenance::kOls);
  expect_chains_are_paths(d, s, t);
  EXPECT_EQ(synthesize(p, s, t).size(), min_pulse_count(d));
}

TEST(OlsSpinHalf, RandomTablesReachMinimum) {
  std::mt19937_64 rng(99);
  const std::size_t dims[] = {2, 3, 4};
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(dims[trial % 3]);
    const auto p = Permutation::from_map(n, testing::random_map(n, rng));
    const auto d = maximal_sets(p);
    const auto t = Topology::build(kCube, n);
    const auto s = ols_spin_half(d, t);
    expect_chains_are_paths(d, s, t);
    EXPECT_EQ(synthesize(p, s, t).size(), min_pulse_count(d));
  }
}

}  // namespace
}  // namespace olsc
