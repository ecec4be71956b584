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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "olsc/permutation.hpp"

namespace olsc {

/// Physical energy level index in [0, 2^N).
using Level = std::uint32_t;

enum class TopologyKind {
  /// Spin I = (2^N - 1)/2: a path of 2^N levels, level 0 at m = +I.
  kQuadrupolarChain,
  /// N weakly coupled spins-1/2: levels are spin states (alpha = 0, beta = 1),
  /// connected when they differ by one spin flip.
  kSpinHalfHypercube,
};

const char* topology_name(TopologyKind kind);

/// Single-quantum transition between two levels, lo < hi.
struct Edge {
  Level lo = 0;
  Level hi = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Topology {
 public:
  /// Throws std::invalid_argument unless 1 <= n_qubits <= kMaxQubits.
  static Topology build(TopologyKind kind, int n_qubits);

  TopologyKind kind() const noexcept { return kind_; }
  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t level_count() const noexcept { return std::size_t{1} << n_qubits_; }
  /// Sorted lexicographically.
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool adjacent(Level a, Level b) const;
  std::vector<Level> neighbors(Level a) const;
  /// Shortest edge count between a and b.
  int distance(Level a, Level b) const;

  /// 2m for a chain level (m = I - level). Hypercube: 2 * total m_z with
  /// alpha = +1/2, i.e. N - 2 * popcount(level).
  int twice_m(Level level) const;

 private:
  Topology(TopologyKind kind, int n_qubits, std::vector<Edge> edges)
      : kind_(kind), n_qubits_(n_qubits), edges_(std::move(edges)) {}

  void check_level(Level a) const;

  TopologyKind kind_;
  int n_qubits_;
  std::vector<Edge> edges_;
};

/// "+15/2", "-1/2", "+1", "0".
std::string format_m(int twice_m);

/// Bijection between levels and N-bit labels.
class Labeling {
 public:
  /// labels[level] is the label on that level. Throws std::invalid_argument
  /// unless it is a bijection on [0, 2^N).
  static Labeling from_labels(int n_qubits, std::vector<State> labels);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const State> labels() const noexcept { return labels_; }

  State label(Level level) const { return labels_.at(level); }
  Level level(State label) const { return levels_.at(label); }

  /// Copy with the levels carrying labels x and y exchanged.
  Labeling with_swapped_labels(State x, State y) const;

  friend bool operator==(const Labeling& a, const Labeling& b) {
    return a.labels_ == b.labels_;
  }

 private:
  Labeling(int n_qubits, std::vector<State> labels, std::vector<Level> levels)
      : n_qubits_(n_qubits), labels_(std::move(labels)), levels_(std::move(levels)) {}

  int n_qubits_;
  std::vector<State> labels_;
  std::vector<Level> levels_;
};

/// Level i carries label i.
Labeling conventional_labeling(const Topology& t);

enum class GrayCode {
  /// Extends the 3-bit code 000,001,011,010,110,100,101,111: each N-bit code
  /// is 0 followed by the (N-1)-bit code, then 1 followed by the reflected
  /// (N-1)-bit code XORed with the last lower-half word.
  kTabulated,
  /// Reflected binary code, i XOR (i >> 1).
  kReflected,
};

/// Gray code along the level order. On the hypercube the result still is a
/// valid labeling, though only the chain gains anything from it.
Labeling gray_labeling(const Topology& t, GrayCode code = GrayCode::kTabulated);

/// The code words themselves, in order.
std::vector<State> gray_sequence(int n_qubits, GrayCode code);

int single_quantum_distance(const Topology& t, Level a, Level b);

}  // namespace olsc
