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

#include "olsc/topology.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace olsc {

const char* topology_name(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::kQuadrupolarChain:
      return "chain";
    case TopologyKind::kSpinHalfHypercube:
      return "hypercube";
  }
  return "unknown";
}

Topology Topology::build(TopologyKind kind, int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n_qubits) +
                                " outside [1, " + std::to_string(kMaxQubits) +
                                "]");
  }
  const Level n = Level{1} << n_qubits;
  std::vector<Edge> edges;
  if (kind == TopologyKind::kQuadrupolarChain) {
    for (Level i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  } else {
    for (Level a = 0; a < n; ++a) {
      for (int bit = n_qubits - 1; bit >= 0; --bit) {
        const Level b = a | (Level{1} << bit);
        if (b != a) edges.push_back({a, b});
      }
    }
    std::sort(edges.begin(), edges.end());
  }
  return Topology(kind, n_qubits, std::move(edges));
}

void Topology::check_level(Level a) const {
  if (a >= level_count()) {
    throw std::out_of_range("level " + std::to_string(a) + " out of range");
  }
}

bool Topology::adjacent(Level a, Level b) const {
  return distance(a, b) == 1;
}

std::vector<Level> Topology::neighbors(Level a) const {
  check_level(a);
  std::vector<Level> out;
  if (kind_ == TopologyKind::kQuadrupolarChain) {
    if (a > 0) out.push_back(a - 1);
    if (a + 1 < level_count()) out.push_back(a + 1);
  } else {
    for (int bit = n_qubits_ - 1; bit >= 0; --bit) {
      out.push_back(a ^ (Level{1} << bit));
    }
    std::sort(out.begin(), out.end());
  }
  return out;
}

int Topology::distance(Level a, Level b) const {
  check_level(a);
  check_level(b);
  if (kind_ == TopologyKind::kQuadrupolarChain) {
    return std::abs(static_cast<int>(a) - static_cast<int>(b));
  }
  return std::popcount(a ^ b);
}

int Topology::twice_m(Level level) const {
  check_level(level);
  if (kind_ == TopologyKind::kQuadrupolarChain) {
    return static_cast<int>(level_count()) - 1 - 2 * static_cast<int>(level);
  }
  return n_qubits_ - 2 * std::popcount(level);
}

std::string format_m(int twice_m) {
  std::string sign = twice_m > 0 ? "+" : (twice_m < 0 ? "-" : "");
  const int mag = std::abs(twice_m);
  if (mag % 2 == 0) return sign + std::to_string(mag / 2);
  return sign + std::to_string(mag) + "/2";
}

Labeling Labeling::from_labels(int n_qubits, std::vector<State> labels) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (labels.size() != dim) {
    throw std::invalid_argument("labeling has " + std::to_string(labels.size()) +
                                " levels, expected " + std::to_string(dim));
  }
  std::vector<Level> levels(dim, static_cast<Level>(dim));
  for (Level l = 0; l < dim; ++l) {
    if (labels[l] >= dim) {
      throw std::invalid_argument("label " + std::to_string(labels[l]) +
                                  " out of range");
    }
    if (levels[labels[l]] != dim) {
      throw std::invalid_argument("label " + format_state(labels[l], n_qubits) +
                                  " used twice");
    }
    levels[labels[l]] = l;
  }
  return Labeling(n_qubits, std::move(labels), std::move(levels));
}

Labeling Labeling::with_swapped_labels(State x, State y) const {
  std::vector<State> labels = labels_;
  std::swap(labels.at(levels_.at(x)), labels.at(levels_.at(y)));
  return from_labels(n_qubits_, std::move(labels));
}

Labeling conventional_labeling(const Topology& t) {
  std::vector<State> labels(t.level_count());
  std::iota(labels.begin(), labels.end(), State{0});
  return Labeling::from_labels(t.n_qubits(), std::move(labels));
}

std::vector<State> gray_sequence(int n_qubits, GrayCode code) {
  const State n = State{1} << n_qubits;
  std::vector<State> reflected(n);
  for (State i = 0; i < n; ++i) reflected[i] = i ^ (i >> 1);
  if (code == GrayCode::kReflected || n_qubits <= 2) return reflected;
  if (n_qubits == 3) return {0, 1, 3, 2, 6, 4, 5, 7};
  std::vector<State> lower = gray_sequence(n_qubits - 1, GrayCode::kTabulated);
  const std::vector<State> refl_lower =
      gray_sequence(n_qubits - 1, GrayCode::kReflected);
  const State last = lower.back();
  const State top = State{1} << (n_qubits - 1);
  for (State w : refl_lower) lower.push_back(top | (w ^ last));
  return lower;
}

Labeling gray_labeling(const Topology& t, GrayCode code) {
  return Labeling::from_labels(t.n_qubits(), gray_sequence(t.n_qubits(), code));
}

int single_quantum_distance(const Topology& t, Level a, Level b) {
  return t.distance(a, b);
}

}  // namespace olsc
