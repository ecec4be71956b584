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

#include "olsc/labeler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "olsc/error.hpp"

namespace olsc {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kConventional:
      return "conventional";
    case Provenance::kGray:
      return "gray";
    case Provenance::kOls:
      return "ols";
    case Provenance::kRelabeledPairSwap:
      return "relabeled_pairswap";
  }
  return "unknown";
}

namespace {

void check_sizes(const MaximalSetDecomposition& d, const Topology& t) {
  if (d.n_qubits != t.n_qubits()) {
    throw std::invalid_argument(
        "decomposition covers " + std::to_string(d.n_qubits) +
        " qubits but the topology has " + std::to_string(t.n_qubits()));
  }
}

// Set indices by decreasing size, ties in canonical order.
std::vector<std::size_t> placement_order(const MaximalSetDecomposition& d) {
  std::vector<std::size_t> order(d.sets.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d.sets[a].size() > d.sets[b].size();
  });
  return order;
}

// Lays the sets along `route` (a Hamiltonian path of levels) in the given
// order. flipped[i] reverses set order[i].
LabelingScheme lay_along(const MaximalSetDecomposition& d,
                         const std::vector<std::size_t>& order,
                         const std::vector<bool>& flipped,
                         const std::vector<Level>& route, Provenance provenance) {
  std::vector<State> labels(route.size());
  std::vector<SetPlacement> placements;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& chain = d.sets[order[i]].chain;
    const bool desc = flipped[i];
    SetPlacement placement{order[i], std::vector<Level>(chain.size()),
                           desc ? Orientation::kDescending : Orientation::kAscending};
    for (std::size_t j = 0; j < chain.size(); ++j) {
      const Level level = route[pos + (desc ? chain.size() - 1 - j : j)];
      labels[level] = chain[j];
      placement.levels[j] = level;
    }
    pos += chain.size();
    if (chain.size() > 1) placements.push_back(std::move(placement));
  }
  std::sort(placements.begin(), placements.end(),
            [](const SetPlacement& a, const SetPlacement& b) {
              return a.set_index < b.set_index;
            });
  return {Labeling::from_labels(d.n_qubits, std::move(labels)), provenance,
          std::move(placements)};
}

std::vector<Level> level_route(const Topology& t) {
  std::vector<Level> route(t.level_count());
  std::iota(route.begin(), route.end(), Level{0});
  return route;
}

}  // namespace

LabelingScheme conventional_scheme(const Topology& t) {
  return {conventional_labeling(t), Provenance::kConventional, {}};
}

LabelingScheme gray_scheme(const Topology& t, GrayCode code) {
  return {gray_labeling(t, code), Provenance::kGray, {}};
}

LabelingScheme ols_quadrupolar(const MaximalSetDecomposition& d, const Topology& t) {
  if (t.kind() != TopologyKind::kQuadrupolarChain) {
    throw std::invalid_argument("ols_quadrupolar needs a quadrupolar chain");
  }
  check_sizes(d, t);
  const auto order = placement_order(d);
  return lay_along(d, order, std::vector<bool>(order.size(), false), level_route(t),
                   Provenance::kOls);
}

OlsEnumerator::OlsEnumerator(MaximalSetDecomposition d, const Topology& t)
    : d_(std::move(d)), topology_(t) {
  if (topology_.kind() != TopologyKind::kQuadrupolarChain) {
    throw std::invalid_argument("OLS enumeration needs a quadrupolar chain");
  }
  check_sizes(d_, topology_);
  base_order_ = placement_order(d_);
  order_.resize(base_order_.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  for (std::size_t i = 0; i < d_.sets.size(); ++i) {
    if (d_.sets[i].size() > 1) multi_.push_back(i);
  }
  flipped_.assign(multi_.size(), false);
}

LabelingScheme OlsEnumerator::build() const {
  std::vector<bool> set_flipped(d_.sets.size(), false);
  for (std::size_t i = 0; i < multi_.size(); ++i) set_flipped[multi_[i]] = flipped_[i];
  std::vector<std::size_t> order(order_.size());
  std::vector<bool> flipped(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    order[i] = base_order_[order_[i]];
    flipped[i] = set_flipped[order[i]];
  }
  return lay_along(d_, order, flipped, level_route(topology_), Provenance::kOls);
}

bool OlsEnumerator::advance() {
  // Orientation counter is the inner loop.
  for (std::size_t i = 0; i < flipped_.size(); ++i) {
    flipped_[i] = !flipped_[i];
    if (flipped_[i]) return true;
  }
  return std::next_permutation(order_.begin(), order_.end());
}

std::optional<LabelingScheme> OlsEnumerator::next() {
  if (done_) return std::nullopt;
  LabelingScheme scheme = build();
  done_ = !advance();
  return scheme;
}

std::vector<LabelingScheme> enumerate_ols_quadrupolar(
    const MaximalSetDecomposition& d, const Topology& t, std::size_t limit) {
  if (limit < 1) throw std::invalid_argument("enumeration limit must be >= 1");
  OlsEnumerator it(d, t);
  std::vector<LabelingScheme> out;
  while (out.size() < limit) {
    auto s = it.next();
    if (!s) break;
    out.push_back(std::move(*s));
  }
  return out;
}

std::optional<std::vector<SetPlacement>> path_placements(
    const MaximalSetDecomposition& d, const Labeling& labeling, const Topology& t) {
  check_sizes(d, t);
  std::vector<SetPlacement> out;
  for (std::size_t i = 0; i < d.sets.size(); ++i) {
    const auto& chain = d.sets[i].chain;
    if (chain.size() < 2) continue;
    SetPlacement placement{i, {}, Orientation::kAscending};
    for (State s : chain) placement.levels.push_back(labeling.level(s));
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
      if (!t.adjacent(placement.levels[j], placement.levels[j + 1])) {
        return std::nullopt;
      }
    }
    if (t.kind() == TopologyKind::kQuadrupolarChain &&
        placement.levels.front() > placement.levels.back()) {
      placement.orientation = Orientation::kDescending;
    }
    out.push_back(std::move(placement));
  }
  return out;
}

namespace {

struct Link {
  std::size_t set_index;
  State from;
  State to;
};

}  // namespace

LabelingScheme relabel_pairswap_spin_half(const MaximalSetDecomposition& d,
                                          const Topology& t) {
  if (t.kind() != TopologyKind::kSpinHalfHypercube) {
    throw std::invalid_argument("pair-swap relabeling needs a spin-1/2 hypercube");
  }
  check_sizes(d, t);

  std::vector<Link> links;
  // Links touching each label, for checking only what an exchange moves.
  std::vector<std::vector<std::size_t>> touching(t.level_count());
  for (std::size_t i = 0; i < d.sets.size(); ++i) {
    const auto& chain = d.sets[i].chain;
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
      touching[chain[j]].push_back(links.size());
      touching[chain[j + 1]].push_back(links.size());
      links.push_back({i, chain[j], chain[j + 1]});
    }
  }

  std::vector<Level> level_of(t.level_count());
  std::iota(level_of.begin(), level_of.end(), Level{0});
  auto holds = [&](const Link& l, State x, State y) {
    auto lv = [&](State s) { return s == x ? level_of[y] : s == y ? level_of[x] : level_of[s]; };
    return t.adjacent(lv(l.from), lv(l.to));
  };
  auto holds_now = [&](const Link& l) {
    return t.adjacent(level_of[l.from], level_of[l.to]);
  };

  for (const Link& link : links) {
    if (holds_now(link)) continue;
    std::vector<std::pair<State, State>> candidates;
    for (State other = 0; other < t.level_count(); ++other) {
      for (State moved : {link.from, link.to}) {
        if (other != moved) {
          candidates.emplace_back(std::min(moved, other), std::max(moved, other));
        }
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    bool repaired = false;
    for (auto [x, y] : candidates) {
      if (!holds(link, x, y)) continue;
      bool ok = true;
      for (State s : {x, y}) {
        for (std::size_t li : touching[s]) {
          if (holds_now(links[li]) && !holds(links[li], x, y)) ok = false;
        }
      }
      if (!ok) continue;
      std::swap(level_of[x], level_of[y]);
      repaired = true;
      break;
    }
    if (!repaired) {
      throw UnrepairableChain(
          "maximal set S" + std::to_string(link.set_index + 1) +
              " cannot be embedded as a hypercube path by label exchanges (link " +
              format_ket(link.from, d.n_qubits) + " -> " +
              format_ket(link.to, d.n_qubits) + ")",
          link.set_index);
    }
  }

  std::vector<State> labels(t.level_count());
  for (State s = 0; s < labels.size(); ++s) labels[level_of[s]] = s;
  Labeling labeling = Labeling::from_labels(t.n_qubits(), std::move(labels));
  auto placements = path_placements(d, labeling, t);
  return {std::move(labeling), Provenance::kRelabeledPairSwap, std::move(*placements)};
}

LabelingScheme scheme_from_pair_swaps(
    const Topology& t, const std::vector<std::pair<State, State>>& swaps,
    const MaximalSetDecomposition& d) {
  Labeling labeling = conventional_labeling(t);
  for (auto [x, y] : swaps) {
    if (x >= t.level_count() || y >= t.level_count()) {
      throw std::invalid_argument("swap label out of range");
    }
    labeling = labeling.with_swapped_labels(x, y);
  }
  auto placements = path_placements(d, labeling, t);
  return {std::move(labeling), Provenance::kRelabeledPairSwap,
          placements ? std::move(*placements) : std::vector<SetPlacement>{}};
}

LabelingScheme ols_spin_half(const MaximalSetDecomposition& d, const Topology& t) {
  try {
    return relabel_pairswap_spin_half(d, t);
  } catch (const UnrepairableChain&) {
    const auto order = placement_order(d);
    const auto gray = gray_sequence(t.n_qubits(), GrayCode::kReflected);
    return lay_along(d, order, std::vector<bool>(order.size(), false),
                     std::vector<Level>(gray.begin(), gray.end()), Provenance::kOls);
  }
}

LabelingScheme ols_scheme(const MaximalSetDecomposition& d, const Topology& t) {
  if (t.kind() == TopologyKind::kQuadrupolarChain) return ols_quadrupolar(d, t);
  return ols_spin_half(d, t);
}

}  // namespace olsc
