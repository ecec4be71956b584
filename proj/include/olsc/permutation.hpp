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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace olsc {

/// Index of a computational basis state |x1 x2 ... xN>. Bit x1 is the most
/// significant bit, so |0100> is 4.
using State = std::uint32_t;

inline constexpr int kMaxQubits = 10;

using BigInt = boost::multiprecision::cpp_int;

/// A reversible truth table: a bijection on the 2^N basis states, where
/// map()[i] is the output for input i.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `map` is a bijection on [0, 2^N).
  static Permutation from_map(int n_qubits, std::vector<State> map);
  static Permutation identity(int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return map_.size(); }
  std::span<const State> map() const noexcept { return map_; }

  /// Output state for input `s`. Throws std::out_of_range for s >= 2^N.
  State operator()(State s) const { return map_.at(s); }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  Permutation(int n_qubits, std::vector<State> map)
      : n_qubits_(n_qubits), map_(std::move(map)) {}

  int n_qubits_;
  std::vector<State> map_;
};

/// Applies `first`, then `second`: result(i) = second(first(i)).
/// Throws std::invalid_argument on mismatched qubit counts.
Permutation compose(const Permutation& first, const Permutation& second);

/// "0100" for state 4 on four qubits.
std::string format_state(State s, int n_qubits);
/// "|0100>".
std::string format_ket(State s, int n_qubits);

/// One orbit of a permutation, listed s1 -> s2 -> ... -> sL with p(sL) = s1.
struct MaximalSet {
  std::vector<State> chain;

  std::size_t size() const noexcept { return chain.size(); }
  friend bool operator==(const MaximalSet&, const MaximalSet&) = default;
};

/// All orbits of a permutation. Each set starts at the smallest state not
/// covered by an earlier set and lists its states in transformation order.
struct MaximalSetDecomposition {
  int n_qubits = 0;
  std::vector<MaximalSet> sets;

  /// Number of sets with more than one state.
  std::size_t multi_element_count() const noexcept;
  friend bool operator==(const MaximalSetDecomposition&,
                         const MaximalSetDecomposition&) = default;
};

MaximalSetDecomposition maximal_sets(const Permutation& p);

/// Sum over sets of (|S_i| - 1).
std::size_t min_pulse_count(const MaximalSetDecomposition& d);

/// M! * 2^k, with M sets of which k have more than one state.
BigInt count_optimal_labelings(const MaximalSetDecomposition& d);

/// One line per set: the chain, a tab, then the set, e.g.
/// "|1100> -> |1101> -> |1100>\tS7={|1100>,|1101>}". Singletons print the
/// lone state as their chain.
std::string format_decomposition(const MaximalSetDecomposition& d);

/// Parses the truth-table document:
///
///     # comment
///     qubits: 2
///     00 -> 00
///     01 -> 10
///     ...
///
/// Rows may come in any order. Throws ParseError naming the line.
Permutation parse_truth_table(std::string_view text);
std::string format_truth_table(const Permutation& p);

/// The reversible full adder on |C0 A B L>: outputs C0, A,
/// S = C0^A^B and L ^ carry.
Permutation full_adder4();

/// Exchanges qubits i and j (1-based, x1 first) in every state.
Permutation swap_qubits(int n_qubits, int i, int j);

/// Named operations: "fulladder4" (or "full_adder4"), "swap:i,j" (or
/// "swap(i,j)"), "identity" or "identity:N". `n_qubits` sizes swap and plain
/// identity; 0 lets the name decide. Throws std::invalid_argument for unknown
/// names or out-of-range qubits.
Permutation builtin_operation(std::string_view name, int n_qubits);

}  // namespace olsc
