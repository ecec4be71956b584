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

#include <string>
#include <string_view>

#include "olsc/synthesizer.hpp"
#include "olsc/topology.hpp"

namespace olsc {

/// Pulse program, one line per pulse in application order:
///
///     1  pi_y  4  6  # |0100> <-> |0110>
///
/// The first column is the 1-based round.
std::string format_pulse_program(const PulseSequence& seq, int n_qubits);

/// Reads a pulse program. Consecutive lines with the same round number form a
/// round. Every pulse must be a transition of `t`; labels are filled in from
/// `labeling` and the trailing comment is ignored. Throws ParseError.
PulseSequence parse_pulse_program(std::string_view text, const Topology& t,
                                  const Labeling& labeling);

/// `level  m  label` on the chain, `level  label` on the hypercube.
std::string format_labeling_table(const Labeling& labeling, const Topology& t);

/// Accepts both shapes; the qubit count comes from the label width. Every
/// level in [0, 2^N) must appear once. Throws ParseError.
Labeling parse_labeling_table(std::string_view text);

}  // namespace olsc
