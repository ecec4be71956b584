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

#include "olsc/synthesizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "routing.hpp"

namespace olsc {

PulseSequence PulseSequence::unscheduled(std::vector<Pulse> pulses) {
  PulseSequence seq;
  for (const Pulse& p : pulses) seq.rounds_.push_back({p});
  return seq;
}

PulseSequence PulseSequence::from_rounds(std::vector<std::vector<Pulse>> rounds) {
  for (std::size_t r = 0; r < rounds.size(); ++r) {
    if (rounds[r].empty()) {
      throw std::invalid_argument("round " + std::to_string(r + 1) + " is empty");
    }
    for (std::size_t i = 0; i < rounds[r].size(); ++i) {
      const Pulse& p = rounds[r][i];
      if (p.a >= p.b) {
        throw std::invalid_argument("pulse levels must satisfy a < b");
      }
      for (std::size_t j = 0; j < i; ++j) {
        const Pulse& q = rounds[r][j];
        if (p.a == q.a || p.a == q.b || p.b == q.a || p.b == q.b) {
          throw std::invalid_argument(
              "pulses (" + std::to_string(q.a) + "," + std::to_string(q.b) +
              ") and (" + std::to_string(p.a) + "," + std::to_string(p.b) +
              ") share a level in round " + std::to_string(r + 1));
        }
      }
    }
  }
  PulseSequence seq;
  seq.rounds_ = std::move(rounds);
  return seq;
}

std::vector<Pulse> PulseSequence::flatten() const {
  std::vector<Pulse> out;
  for (const auto& r : rounds_) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::size_t PulseSequence::size() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rounds_) n += r.size();
  return n;
}

namespace {

Pulse make_pulse(Level x, Level y, State lx, State ly) {
  return x < y ? Pulse{x, y, lx, ly} : Pulse{y, x, ly, lx};
}

Pulse labeled_pulse(const Edge& e, const Labeling& labeling) {
  return {e.lo, e.hi, labeling.label(e.lo), labeling.label(e.hi)};
}

std::vector<Level> level_target(const Permutation& p, const Labeling& labeling) {
  std::vector<Level> target(p.size());
  for (Level l = 0; l < target.size(); ++l) {
    target[l] = labeling.level(p(labeling.label(l)));
  }
  return target;
}

std::string moving_sets(const Permutation& p, std::size_t* first) {
  const auto d = maximal_sets(p);
  std::string names;
  *first = 0;
  for (std::size_t i = 0; i < d.sets.size(); ++i) {
    if (d.sets[i].size() < 2) continue;
    if (names.empty()) *first = i;
    names += names.empty() ? "S" : ", S";
    names += std::to_string(i + 1);
  }
  return "maximal sets {" + names + "}";
}

}  // namespace

std::vector<Pulse> synthesize_on_path(const MaximalSet& set,
                                      std::span<const Level> levels) {
  if (set.size() < 2) {
    throw std::invalid_argument("path synthesis needs a set of at least two states");
  }
  if (levels.size() != set.size()) {
    throw std::invalid_argument("placement has " + std::to_string(levels.size()) +
                                " levels for a set of " +
                                std::to_string(set.size()));
  }
  std::vector<Pulse> out;
  for (std::size_t j = set.size() - 1; j-- > 0;) {
    if (levels[j] == levels[j + 1]) {
      throw std::invalid_argument("placement repeats a level");
    }
    out.push_back(make_pulse(levels[j], levels[j + 1], set.chain[j], set.chain[j + 1]));
  }
  return out;
}

std::vector<Pulse> synthesize_on_path(const MaximalSet& set,
                                      std::span<const Level> levels,
                                      const Topology& t) {
  for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
    if (levels[j] >= t.level_count() || levels[j + 1] >= t.level_count() ||
        !t.adjacent(levels[j], levels[j + 1])) {
      throw std::invalid_argument("placement is not a path: levels " +
                                  std::to_string(levels[j]) + " and " +
                                  std::to_string(levels[j + 1]) +
                                  " share no transition");
    }
  }
  return synthesize_on_path(set, levels);
}

PulseSequence synthesize_fixed_labeling(const Permutation& p,
                                        const LabelingScheme& scheme,
                                        const Topology& t, const SearchLimits& limits) {
  if (p.n_qubits() != t.n_qubits() || scheme.labeling.n_qubits() != t.n_qubits()) {
    throw std::invalid_argument("operation, labeling and topology sizes differ");
  }
  const auto target = level_target(p, scheme.labeling);
  std::vector<Edge> swaps;
  if (t.kind() == TopologyKind::kQuadrupolarChain) {
    swaps = detail::sort_chain(target);
  } else {
    std::size_t first = 0;
    const std::string what = moving_sets(p, &first);
    swaps = detail::route_shortest(t, target, limits, what, first);
  }
  std::vector<Pulse> pulses;
  for (const Edge& e : swaps) pulses.push_back(labeled_pulse(e, scheme.labeling));
  return PulseSequence::unscheduled(std::move(pulses));
}

PulseSequence synthesize(const Permutation& p, const LabelingScheme& scheme,
                         const Topology& t, const SearchLimits& limits) {
  if (scheme.placements.empty()) {
    return synthesize_fixed_labeling(p, scheme, t, limits);
  }
  const auto d = maximal_sets(p);
  std::vector<Pulse> pulses;
  for (const SetPlacement& placement : scheme.placements) {
    if (placement.set_index >= d.sets.size()) {
      throw std::invalid_argument("placement names a missing maximal set");
    }
    const MaximalSet& set = d.sets[placement.set_index];
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (scheme.labeling.level(set.chain[j]) != placement.levels.at(j)) {
        throw std::invalid_argument(
            "placement of S" + std::to_string(placement.set_index + 1) +
            " disagrees with the labeling");
      }
    }
    const auto part = synthesize_on_path(set, placement.levels, t);
    pulses.insert(pulses.end(), part.begin(), part.end());
  }
  return PulseSequence::unscheduled(std::move(pulses));
}

PulseSequence schedule_rounds(const PulseSequence& seq) {
  std::vector<std::vector<Pulse>> rounds;
  std::vector<std::size_t> level_round;  // 1 + last round touching the level
  for (const Pulse& p : seq.flatten()) {
    const std::size_t need = std::max(p.b, p.a) + 1;
    if (level_round.size() < need) level_round.resize(need, 0);
    const std::size_t r = std::max(level_round[p.a], level_round[p.b]);
    if (rounds.size() <= r) rounds.resize(r + 1);
    rounds[r].push_back(p);
    level_round[p.a] = level_round[p.b] = r + 1;
  }
  return PulseSequence::from_rounds(std::move(rounds));
}

PulseCountReport pulse_count_report(const Permutation& p, const Topology& t,
                                    const SearchLimits& limits) {
  PulseCountReport r;
  const auto d = maximal_sets(p);
  r.min_pulses = min_pulse_count(d);

  const auto cl = synthesize(p, conventional_scheme(t), t, limits);
  r.conventional = cl.size();
  r.conventional_rounds = schedule_rounds(cl).round_count();

  if (t.kind() == TopologyKind::kQuadrupolarChain) {
    const auto gray = synthesize(p, gray_scheme(t), t, limits);
    r.gray = gray.size();
    r.gray_rounds = schedule_rounds(gray).round_count();
  }

  const auto scheme = ols_scheme(d, t);
  const auto best = synthesize(p, scheme, t, limits);
  r.optimal = best.size();
  r.optimal_rounds = schedule_rounds(best).round_count();
  r.optimal_provenance = scheme.provenance;
  return r;
}

}  // namespace olsc
