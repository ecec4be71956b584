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
#include <string>
#include <vector>

#include "olsc/synthesizer.hpp"
#include "olsc/topology.hpp"

namespace olsc::detail {

/// Token routing: the token on level i must end on level target[i]. Returns
/// edge swaps in application order.
std::vector<Edge> sort_chain(std::vector<Level> target);

/// Hypercube token routing that moves each token home along a shortest path,
/// restoring the levels it passes: 2d - 1 swaps per transposition.
std::vector<Edge> route_constructive(const Topology& t, std::vector<Level> target);

/// Shortest swap sequence by iterative deepening. `what` names the sets being
/// routed for error messages; `set_index` goes into SynthesisError.
std::vector<Edge> route_shortest(const Topology& t, const std::vector<Level>& target,
                                 const SearchLimits& limits, const std::string& what,
                                 std::size_t set_index);

}  // namespace olsc::detail
