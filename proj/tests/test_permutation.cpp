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
#include "olsc/permutation.hpp"
#include "oracles.hpp"

namespace olsc {
namespace {

using testing::read_data;

constexpr const char* kAdderSets =
    "|0000>\tS1={|0000>}\n"
    "|0001>\tS2={|0001>}\n"
    "|0010>\tS3={|0010>}\n"
    "|0011>\tS4={|0011>}\n"
    "|0100> -> |0110> -> |0101> -> |0111> -> |0100>\tS5={|0100>,|0110>,|0101>,|0111>}\n"
    "|1000> -> |1010> -> |1001> -> |1011> -> |1000>\tS6={|1000>,|1010>,|1001>,|1011>}\n"
    "|1100> -> |1101> -> |1100>\tS7={|1100>,|1101>}\n"
    "|1110> -> |1111> -> |1110>\tS8={|1110>,|1111>}\n";

MaximalSet chain(std::initializer_list<State> s) { return MaximalSet{{s}}; }

TEST(TruthTable, ParsesAdderFile) {
  const Permutation p = parse_truth_table(read_data("fulladder.tt"));
  EXPECT_EQ(p.n_qubits(), 4);
  EXPECT_EQ(p(0b0100), 0b0110u);
  EXPECT_EQ(p(0b1011), 0b1000u);
  EXPECT_EQ(p(0b0000), 0b0000u);
  EXPECT_EQ(p, full_adder4());
}

TEST(TruthTable, OneQubitIdentity) {
  const Permutation p = parse_truth_table(read_data("identity1.tt"));
  EXPECT_TRUE(p.is_identity());
  EXPECT_EQ(p.n_qubits(), 1);
}

TEST(TruthTable, RowsInAnyOrderWithLooseSpacing) {
  const Permutation p = parse_truth_table(read_data("shuffled2.tt"));
  EXPECT_EQ(p(0), 1u);
  EXPECT_EQ(p(1), 2u);
  EXPECT_EQ(p(2), 3u);
  EXPECT_EQ(p(3), 0u);
}

TEST(TruthTable, RejectsRepeatedOutput) {
  try {
    parse_truth_table(read_data("not_reversible.tt"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("not reversible"), std::string::npos);
  }
}

TEST(TruthTable, RejectsMissingRow) {
  EXPECT_THROW(parse_truth_table(read_data("missing_row.tt")), ParseError);
}

TEST(TruthTable, RejectsWrongWidth) {
  try {
    parse_truth_table(read_data("bad_width.tt"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(TruthTable, RejectsDuplicateInputAndMalformedLines) {
  EXPECT_THROW(parse_truth_table("qubits: 1\n0 -> 0\n0 -> 1\n"), ParseError);
  EXPECT_THROW(parse_truth_table("qubits: 1\n0 => 0\n1 -> 1\n"), ParseError);
  EXPECT_THROW(parse_truth_table("0 -> 0\n"), ParseError);
  EXPECT_THROW(parse_truth_table("qubits: 11\n"), ParseError);
  EXPECT_THROW(parse_truth_table(""), ParseError);
  EXPECT_THROW(parse_truth_table("qubits: 1\n0 -> 2\n1 -> 1\n"), ParseError);
}

TEST(TruthTable, FormatRoundTrips) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 4; ++n) {
    const auto p = Permutation::from_map(n, testing::random_map(n, rng));
    EXPECT_EQ(parse_truth_table(format_truth_table(p)), p);
  }
}

TEST(Permutation, FromMapValidates) {
  EXPECT_THROW(Permutation::from_map(2, {0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_map(2, {0, 1, 1, 3}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_map(2, {0, 1, 2, 4}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_map(0, {0}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_map(11, {}), std::invalid_argument);
}

TEST(Builtins, FullAdderMatchesLogicEquations) {
  const Permutation p = full_adder4();
  for (State x = 0; x < 16; ++x) {
    const State c0 = x >> 3 & 1, a = x >> 2 & 1, b = x >> 1 & 1, l = x & 1;
    const State carry = (a & b) | (a & c0) | (b & c0);
    const State expected = (c0 << 3) | (a << 2) | ((c0 ^ a ^ b) << 1) | (l ^ carry);
    EXPECT_EQ(p(x), expected) << format_state(x, 4);
  }
}

TEST(Builtins, SwapExchangesBits) {
  const Permutation s = swap_qubits(4, 2, 4);
  EXPECT_EQ(s(0b0100), 0b0001u);
  EXPECT_EQ(s(0b0001), 0b0100u);
  EXPECT_EQ(s(0b1010), 0b1010u);
  EXPECT_TRUE(compose(s, s).is_identity());
  EXPECT_THROW(swap_qubits(4, 0, 2), std::invalid_argument);
  EXPECT_THROW(swap_qubits(4, 2, 5), std::invalid_argument);
}

TEST(Builtins, NamedOperations) {
  EXPECT_EQ(builtin_operation("fulladder4", 0), full_adder4());
  EXPECT_EQ(builtin_operation("full_adder4", 4), full_adder4());
  EXPECT_EQ(builtin_operation("swap:2,4", 4), swap_qubits(4, 2, 4));
  EXPECT_EQ(builtin_operation("swap(2,4)", 0), swap_qubits(4, 2, 4));
  EXPECT_EQ(builtin_operation("swap:1,2", 3), swap_qubits(3, 1, 2));
  EXPECT_EQ(builtin_operation("identity:3", 0), Permutation::identity(3));
  EXPECT_EQ(builtin_operation("identity", 2), Permutation::identity(2));
  EXPECT_THROW(builtin_operation("halfadder", 0), std::invalid_argument);
  EXPECT_THROW(builtin_operation("fulladder4", 3), std::invalid_argument);
  EXPECT_THROW(builtin_operation("swap:2", 4), std::invalid_argument);
  EXPECT_THROW(builtin_operation("swap:1,x", 4), std::invalid_argument);
  EXPECT_THROW(builtin_operation("swap:1,5", 4), std::invalid_argument);
}

TEST(Compose, AppliesFirstThenSecond) {
  const auto p = Permutation::from_map(2, {1, 2, 3, 0});
  const auto q = Permutation::from_map(2, {0, 2, 1, 3});
  const auto pq = compose(p, q);
  for (State i = 0; i < 4; ++i) EXPECT_EQ(pq(i), q(p(i)));
  EXPECT_EQ(compose(p, Permutation::identity(2)), p);
  EXPECT_THROW(compose(p, Permutation::identity(3)), std::invalid_argument);
}

TEST(Compose, AdderAndSwapDoNotCommute) {
  const auto fa = full_adder4();
  const auto sw = swap_qubits(4, 2, 4);
  EXPECT_NE(compose(fa, sw), compose(sw, fa));
}

TEST(MaximalSets, AdderMatchesReferenceRows) {
  const auto d = maximal_sets(full_adder4());
  EXPECT_EQ(format_decomposition(d), kAdderSets);
  ASSERT_EQ(d.sets.size(), 8u);
  EXPECT_EQ(d.sets[4], chain({0b0100, 0b0110, 0b0101, 0b0111}));
  EXPECT_EQ(d.multi_element_count(), 4u);
}

TEST(MaximalSets, AdderThenSwap) {
  const auto d = maximal_sets(compose(full_adder4(), swap_qubits(4, 2, 4)));
  ASSERT_EQ(d.sets.size(), 4u);
  EXPECT_EQ(d.sets[0], chain({0b0000}));
  EXPECT_EQ(d.sets[1], chain({0b0001, 0b0100, 0b0011, 0b0110, 0b0101, 0b0111}));
  EXPECT_EQ(d.sets[2], chain({0b0010}));
  EXPECT_EQ(d.sets[3], chain({0b1000, 0b1010, 0b1100, 0b1101, 0b1001, 0b1110,
                              0b1111, 0b1011}));
  EXPECT_EQ(min_pulse_count(d), 12u);
  EXPECT_EQ(count_optimal_labelings(d), 96);
}

TEST(MaximalSets, SwapThenAdder) {
  const auto d = maximal_sets(compose(swap_qubits(4, 2, 4), full_adder4()));
  ASSERT_EQ(d.sets.size(), 4u);
  EXPECT_EQ(d.sets[0], chain({0b0000}));
  EXPECT_EQ(d.sets[1], chain({0b0001, 0b0110, 0b0011, 0b0101, 0b0111, 0b0100}));
  EXPECT_EQ(d.sets[2], chain({0b0010}));
  EXPECT_EQ(d.sets[3], chain({0b1000, 0b1010, 0b1001, 0b1101, 0b1100, 0b1011,
                              0b1111, 0b1110}));
  EXPECT_EQ(min_pulse_count(d), 12u);
}

TEST(MaximalSets, IdentityIsAllSingletons) {
  const auto d = maximal_sets(Permutation::identity(4));
  EXPECT_EQ(d.sets.size(), 16u);
  EXPECT_EQ(min_pulse_count(d), 0u);
  EXPECT_EQ(count_optimal_labelings(maximal_sets(Permutation::identity(2))), 24);
}

TEST(Counting, AdderValues) {
  const auto d = maximal_sets(full_adder4());
  EXPECT_EQ(min_pulse_count(d), 8u);
  EXPECT_EQ(count_optimal_labelings(d), 645120);
}

TEST(Counting, LargeCountsAreExact) {
  // 1024 singletons: 1024! has 2640 decimal digits.
  const auto d = maximal_sets(Permutation::identity(10));
  const BigInt c = count_optimal_labelings(d);
  EXPECT_EQ(c.str().size(), 2640u);
  EXPECT_EQ(c % 1000000007, 988636580);
}

TEST(Properties, RandomDecompositionsPartitionAndCount) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 3;
    const auto map = testing::random_map(n, rng);
    const auto p = Permutation::from_map(n, map);
    const auto d = maximal_sets(p);

    std::set<State> seen;
    for (const auto& s : d.sets) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        EXPECT_TRUE(seen.insert(s.chain[j]).second);
        EXPECT_EQ(p(s.chain[j]), s.chain[(j + 1) % s.size()]);
      }
      // Each set starts at its smallest element.
      EXPECT_EQ(*std::min_element(s.chain.begin(), s.chain.end()), s.chain.front());
    }
    EXPECT_EQ(seen.size(), p.size());
    for (std::size_t i = 1; i < d.sets.size(); ++i) {
      EXPECT_LT(d.sets[i - 1].chain.front(), d.sets[i].chain.front());
    }
    EXPECT_EQ(min_pulse_count(d), p.size() - testing::cycle_count(map));
    EXPECT_TRUE(compose(p, p.inverse()).is_identity());
    EXPECT_EQ(format_decomposition(maximal_sets(p)), format_decomposition(d));
  }
}

}  // namespace
}  // namespace olsc
