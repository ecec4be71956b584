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
#include <optional>
#include <utility>
#include <vector>

#include "olsc/permutation.hpp"
#include "olsc/topology.hpp"

namespace olsc {

enum class Provenance { kConventional, kGray, kOls, kRelabeledPairSwap };

const char* provenance_name(Provenance p);

enum class Orientation { kAscending, kDescending };

/// Where one multi-state maximal set lives: levels[j] carries chain[j], and
/// consecutive entries are topology neighbours.
struct SetPlacement {
  std::size_t set_index = 0;
  std::vector<Level> levels;
  Orientation orientation = Orientation::kAscending;

  friend bool operator==(const SetPlacement&, const SetPlacement&) = default;
};

struct LabelingScheme {
  Labeling labeling;
  Provenance provenance;
  /// One entry per set with more than one state, in canonical set order.
  /// Empty for fixed labelings (conventional, Gray) where chains need not be
  /// paths.
  std::vector<SetPlacement> placements;
};

LabelingScheme conventional_scheme(const Topology& t);
LabelingScheme gray_scheme(const Topology& t, GrayCode code = GrayCode::kTabulated);

/// Sets in decreasing size (ties in canonical order), laid end to end from
/// level 0, each ascending. Throws std::invalid_argument if `t` is not a
/// chain or the sizes disagree.
LabelingScheme ols_quadrupolar(const MaximalSetDecomposition& d, const Topology& t);

/// Pull-based stream over every optimal chain labeling: all orderings of the
/// sets along the chain, times both orientations of every multi-state set.
/// The first scheme is ols_quadrupolar's.
class OlsEnumerator {
 public:
  OlsEnumerator(MaximalSetDecomposition d, const Topology& t);

  /// Next scheme, or nullopt once all M! * 2^k have been produced.
  std::optional<LabelingScheme> next();

 private:
  LabelingScheme build() const;
  bool advance();

  MaximalSetDecomposition d_;
  Topology topology_;
  std::vector<std::size_t> base_order_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> multi_;  // positions in d_.sets with |S| > 1
  std::vector<bool> flipped_;  // orientation per entry of multi_
  bool done_ = false;
};

std::vector<LabelingScheme> enumerate_ols_quadrupolar(
    const MaximalSetDecomposition& d, const Topology& t, std::size_t limit);

/// Placements derived from `labeling` if every chain link lands on an edge,
/// nullopt otherwise.
std::optional<std::vector<SetPlacement>> path_placements(
    const MaximalSetDecomposition& d, const Labeling& labeling, const Topology& t);

/// Starts from the conventional labeling and walks the chain links in
/// canonical order. Each broken link is repaired by the lexicographically
/// smallest label pair whose exchange joins it without breaking a link that
/// already holds. Throws UnrepairableChain if no exchange works.
LabelingScheme relabel_pairswap_spin_half(const MaximalSetDecomposition& d,
                                          const Topology& t);

/// Conventional labeling with the given label pairs exchanged in order.
/// Placements are filled in when every chain becomes a path.
LabelingScheme scheme_from_pair_swaps(
    const Topology& t, const std::vector<std::pair<State, State>>& swaps,
    const MaximalSetDecomposition& d);

/// Pair-swap repair, falling back to laying the chains end to end along the
/// reflected Gray Hamiltonian path when a chain cannot be repaired.
LabelingScheme ols_spin_half(const MaximalSetDecomposition& d, const Topology& t);

/// ols_quadrupolar or ols_spin_half by topology kind.
LabelingScheme ols_scheme(const MaximalSetDecomposition& d, const Topology& t);

}  // namespace olsc
