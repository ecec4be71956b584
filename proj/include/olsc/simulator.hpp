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

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "olsc/permutation.hpp"
#include "olsc/synthesizer.hpp"
#include "olsc/topology.hpp"

namespace olsc {

using Unitary = Eigen::MatrixXcd;

inline constexpr double kTolerance = 1e-9;

/// Identity except rows (0, 1 / -1, 0) on levels (a, b), a < b.
/// Throws std::invalid_argument for equal or out-of-range levels.
Unitary pulse_unitary(const Pulse& p, std::size_t dim);

/// Product of the pulses written in application order, first pulse leftmost:
/// U = P_1 P_2 ... P_n. Row i of U then holds its unit entry in the column of
/// the level that state i is carried to.
Unitary sequence_unitary(const PulseSequence& seq, std::size_t dim);
Unitary sequence_unitary(const std::vector<Pulse>& pulses, std::size_t dim);

/// Max |U U^dagger - 1| below `tol`.
bool is_unitary(const Unitary& u, double tol = kTolerance);

struct Verdict {
  bool pass = false;
  /// realized[label] = label it is carried to, or nullopt if row is not a
  /// signed unit vector.
  std::vector<std::optional<State>> realized;
  /// Unit entry of each level's row (0 where the row is malformed).
  std::vector<std::complex<double>> phases;
  /// Human-readable mismatch lines, empty on PASS.
  std::vector<std::string> mismatches;
};

/// PASS iff every row j holds exactly one entry of modulus 1 (others below
/// tolerance), in the column of the level labeled p(label(j)). Phases are
/// reported and never judged.
Verdict verify_permutation(const Unitary& u, const Permutation& p,
                           const Labeling& labeling, double tol = kTolerance);

/// "PASS" or "FAIL", the phase vector, and on failure the realized map and
/// mismatches.
std::string format_verdict(const Verdict& v, const Labeling& labeling);

/// Deviation populations in units of one spin flip. Hypercube: number of
/// alpha spins minus N/2. Chain: m = I - level.
std::vector<double> equilibrium_populations(const Topology& t);

/// Moves each level's population with its state:
/// final[level(p(label(l)))] = eq[l].
std::vector<double> final_populations(const std::vector<double>& eq,
                                      const Permutation& p, const Labeling& labeling);

struct Stick {
  /// 1-based spin whose flip the transition is. Always 1 on the chain.
  int spin = 1;
  /// Hypercube: spectator spins as an alpha/beta string, e.g. "aba".
  /// Chain: the m pair, e.g. "+3/2<->+1/2".
  std::string transition;
  Level a = 0;
  Level b = 0;
  double intensity = 0;
};

/// One stick per transition, intensity = pop(a) - pop(b) with a the lower
/// level index. Hypercube sticks are grouped by spin, spectators ascending.
std::vector<Stick> stick_spectrum(const std::vector<double>& pop, const Topology& t);

/// `spin  transition  intensity` table.
std::string format_spectrum(const std::vector<Stick>& sticks);
/// Vertical-bar stick plot, one column per stick.
std::string render_sticks(const std::vector<Stick>& sticks);

}  // namespace olsc
