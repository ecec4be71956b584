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

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "olsc/error.hpp"
#include "olsc/permutation.hpp"
#include "text_util.hpp"

namespace olsc {

namespace {

State parse_bits(std::string_view bits, int n_qubits, std::size_t line) {
  if (bits.size() != static_cast<std::size_t>(n_qubits)) {
    throw ParseError("bit string '" + std::string(bits) + "' has length " +
                         std::to_string(bits.size()) + ", expected " +
                         std::to_string(n_qubits),
                     line);
  }
  State s = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw ParseError("bad bit string '" + std::string(bits) + "'", line);
    }
    s = (s << 1) | static_cast<State>(c - '0');
  }
  return s;
}

}  // namespace

Permutation parse_truth_table(std::string_view text) {
  int n_qubits = 0;
  std::vector<std::optional<State>> map;
  std::vector<bool> output_seen;
  std::vector<std::size_t> row_line;

  std::size_t line_no = 0;
  for (std::string_view raw : detail::split_lines(text)) {
    ++line_no;
    const std::string_view line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;

    if (n_qubits == 0) {
      const auto colon = line.find(':');
      if (colon == std::string_view::npos ||
          detail::trim(line.substr(0, colon)) != "qubits") {
        throw ParseError("expected 'qubits: N' header", line_no);
      }
      const std::string_view num = detail::trim(line.substr(colon + 1));
      int n = 0;
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
      if (ec != std::errc{} || ptr != num.data() + num.size() || n < 1 ||
          n > kMaxQubits) {
        throw ParseError("qubit count must be an integer in [1, " +
                             std::to_string(kMaxQubits) + "]",
                         line_no);
      }
      n_qubits = n;
      map.assign(std::size_t{1} << n, std::nullopt);
      output_seen.assign(map.size(), false);
      row_line.assign(map.size(), 0);
      continue;
    }

    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError("expected 'BITS -> BITS'", line_no);
    }
    const State in = parse_bits(detail::trim(line.substr(0, arrow)), n_qubits, line_no);
    const State out =
        parse_bits(detail::trim(line.substr(arrow + 2)), n_qubits, line_no);
    if (map[in]) {
      throw ParseError("duplicate input row " + format_state(in, n_qubits) +
                           " (first on line " + std::to_string(row_line[in]) + ")",
                       line_no);
    }
    if (output_seen[out]) {
      throw ParseError("output " + format_state(out, n_qubits) +
                           " repeated; table is not reversible",
                       line_no);
    }
    map[in] = out;
    output_seen[out] = true;
    row_line[in] = line_no;
  }

  if (n_qubits == 0) throw ParseError("missing 'qubits: N' header", 0);
  std::vector<State> flat(map.size());
  for (State i = 0; i < map.size(); ++i) {
    if (!map[i]) {
      throw ParseError("missing input row " + format_state(i, n_qubits), 0);
    }
    flat[i] = *map[i];
  }
  return Permutation::from_map(n_qubits, std::move(flat));
}

std::string format_truth_table(const Permutation& p) {
  std::ostringstream os;
  os << "qubits: " << p.n_qubits() << "\n";
  for (State i = 0; i < p.size(); ++i) {
    os << format_state(i, p.n_qubits()) << " -> "
       << format_state(p(i), p.n_qubits()) << "\n";
  }
  return os.str();
}

}  // namespace olsc
