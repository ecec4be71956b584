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
#include <stdexcept>
#include <string>

namespace olsc {

/// Malformed input document (truth table, labeling table, pulse program).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based line of the offending input, 0 when not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Pulse routing could not finish within the configured depth cap or node
/// budget.
class SynthesisError : public std::runtime_error {
 public:
  SynthesisError(const std::string& what, std::size_t set_index,
                 std::size_t best_known_depth)
      : std::runtime_error(what),
        set_index_(set_index),
        best_known_depth_(best_known_depth) {}

  std::size_t set_index() const noexcept { return set_index_; }
  std::size_t best_known_depth() const noexcept { return best_known_depth_; }

 private:
  std::size_t set_index_;
  std::size_t best_known_depth_;
};

/// A maximal-set chain that pairwise label swaps cannot embed as a
/// hypercube path.
class UnrepairableChain : public std::runtime_error {
 public:
  UnrepairableChain(const std::string& what, std::size_t set_index)
      : std::runtime_error(what), set_index_(set_index) {}

  std::size_t set_index() const noexcept { return set_index_; }

 private:
  std::size_t set_index_;
};

}  // namespace olsc
