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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "olsc/labeler.hpp"
#include "olsc/permutation.hpp"
#include "olsc/topology.hpp"

namespace olsc {

/// Transition-selective pi pulse about y on the transition a-b (a < b).
/// label_a and label_b record which logical states sat there.
struct Pulse {
  Level a = 0;
  Level b = 0;
  State label_a = 0;
  State label_b = 0;

  friend bool operator==(const Pulse&, const Pulse&) = default;
};

/// Pulses in application order, grouped into rounds of level-disjoint pulses.
class PulseSequence {
 public:
  PulseSequence() = default;

  /// Every pulse in its own round.
  static PulseSequence unscheduled(std::vector<Pulse> pulses);
  /// Throws std::invalid_argument if two pulses of a round share a level.
  static PulseSequence from_rounds(std::vector<std::vector<Pulse>> rounds);

  const std::vector<std::vector<Pulse>>& rounds() const noexcept { return rounds_; }
  std::vector<Pulse> flatten() const;
  std::size_t size() const noexcept;
  std::size_t round_count() const noexcept { return rounds_.size(); }

  friend bool operator==(const PulseSequence&, const PulseSequence&) = default;

 private:
  std::vector<std::vector<Pulse>> rounds_;
};

struct SearchLimits {
  /// Longest sequence the hypercube search may return. Defaults to the length
  /// of a constructive routing, which always exists.
  std::optional<std::size_t> depth_cap;
  /// Search nodes expanded before giving up.
  std::uint64_t node_budget = 50'000'000;
};

/// |S| - 1 pulses that cycle `set` along `levels` (levels[j] carries
/// chain[j]): the last link first, the first link last.
/// Throws std::invalid_argument on a length mismatch or a set under two states.
std::vector<Pulse> synthesize_on_path(const MaximalSet& set,
                                      std::span<const Level> levels);
/// As above, also rejecting placements that are not paths of `t`.
std::vector<Pulse> synthesize_on_path(const MaximalSet& set,
                                      std::span<const Level> levels,
                                      const Topology& t);

/// Shortest sequence of edge pulses realizing `p` under an arbitrary labeling.
/// Chain: adjacent-transposition sort of the level permutation. Hypercube:
/// iterative-deepening search over edge transpositions. Throws SynthesisError
/// when the cap or node budget stops the search.
PulseSequence synthesize_fixed_labeling(const Permutation& p,
                                        const LabelingScheme& scheme,
                                        const Topology& t,
                                        const SearchLimits& limits = {});

/// Path synthesis when the scheme carries placements, fixed-labeling routing
/// otherwise.
PulseSequence synthesize(const Permutation& p, const LabelingScheme& scheme,
                         const Topology& t, const SearchLimits& limits = {});

/// Each pulse goes one round after the latest earlier pulse sharing a level.
PulseSequence schedule_rounds(const PulseSequence& seq);

struct PulseCountReport {
  std::size_t min_pulses = 0;
  std::size_t conventional = 0;
  std::size_t conventional_rounds = 0;
  /// Chain only.
  std::optional<std::size_t> gray;
  std::optional<std::size_t> gray_rounds;
  std::size_t optimal = 0;
  std::size_t optimal_rounds = 0;
  Provenance optimal_provenance = Provenance::kOls;
};

PulseCountReport pulse_count_report(const Permutation& p, const Topology& t,
                                    const SearchLimits& limits = {});

}  // namespace olsc
