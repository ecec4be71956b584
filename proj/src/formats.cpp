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

#include "olsc/formats.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "olsc/error.hpp"
#include "text_util.hpp"

namespace olsc {

namespace {

std::uint32_t parse_uint(std::string_view s, std::size_t line, const char* what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'", line);
  }
  return v;
}

}  // namespace

std::string format_pulse_program(const PulseSequence& seq, int n_qubits) {
  std::ostringstream os;
  for (std::size_t r = 0; r < seq.rounds().size(); ++r) {
    for (const Pulse& p : seq.rounds()[r]) {
      os << (r + 1) << "  pi_y  " << p.a << "  " << p.b << "  # "
         << format_ket(p.label_a, n_qubits) << " <-> "
         << format_ket(p.label_b, n_qubits) << "\n";
    }
  }
  return os.str();
}

PulseSequence parse_pulse_program(std::string_view text, const Topology& t,
                                  const Labeling& labeling) {
  if (labeling.n_qubits() != t.n_qubits()) {
    throw ParseError("labeling and topology sizes differ", 0);
  }
  std::vector<std::vector<Pulse>> rounds;
  std::uint32_t current = 0;
  std::size_t line_no = 0;
  for (std::string_view raw : detail::split_lines(text)) {
    ++line_no;
    const auto tokens = detail::split_ws(detail::strip_comment(raw));
    if (tokens.empty()) continue;
    if (tokens.size() != 4) {
      throw ParseError("expected 'round pi_y level_a level_b'", line_no);
    }
    const std::uint32_t round = parse_uint(tokens[0], line_no, "round index");
    if (round == 0) throw ParseError("round indices start at 1", line_no);
    if (tokens[1] != "pi_y") {
      throw ParseError("unsupported pulse '" + std::string(tokens[1]) + "'", line_no);
    }
    Level a = parse_uint(tokens[2], line_no, "level");
    Level b = parse_uint(tokens[3], line_no, "level");
    if (a >= t.level_count() || b >= t.level_count()) {
      throw ParseError("level out of range", line_no);
    }
    if (a > b) std::swap(a, b);
    if (!t.adjacent(a, b)) {
      throw ParseError("levels " + std::to_string(a) + " and " + std::to_string(b) +
                           " are not a single-quantum transition",
                       line_no);
    }
    if (round != current) {
      if (round < current) throw ParseError("round indices must not decrease", line_no);
      rounds.emplace_back();
      current = round;
    }
    for (const Pulse& q : rounds.back()) {
      if (q.a == a || q.a == b || q.b == a || q.b == b) {
        throw ParseError("pulse shares a level with another pulse in round " +
                             std::to_string(round),
                         line_no);
      }
    }
    rounds.back().push_back({a, b, labeling.label(a), labeling.label(b)});
  }
  return PulseSequence::from_rounds(std::move(rounds));
}

std::string format_labeling_table(const Labeling& labeling, const Topology& t) {
  const bool chain = t.kind() == TopologyKind::kQuadrupolarChain;
  std::ostringstream os;
  os << (chain ? "# level  m  label\n" : "# level  label\n");
  for (Level l = 0; l < labeling.size(); ++l) {
    os << l << "  ";
    if (chain) os << format_m(t.twice_m(l)) << "  ";
    os << format_state(labeling.label(l), labeling.n_qubits()) << "\n";
  }
  return os.str();
}

Labeling parse_labeling_table(std::string_view text) {
  std::vector<std::pair<Level, std::string_view>> rows;
  std::vector<std::size_t> lines;
  std::size_t line_no = 0;
  for (std::string_view raw : detail::split_lines(text)) {
    ++line_no;
    const auto tokens = detail::split_ws(detail::strip_comment(raw));
    if (tokens.empty()) continue;
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError("expected 'level [m] label'", line_no);
    }
    rows.emplace_back(parse_uint(tokens[0], line_no, "level"), tokens.back());
    lines.push_back(line_no);
  }
  if (rows.empty()) throw ParseError("empty labeling table", 0);
  const std::size_t width = rows.front().second.size();
  if (width < 1 || width > static_cast<std::size_t>(kMaxQubits)) {
    throw ParseError("label width out of range", lines.front());
  }
  const int n = static_cast<int>(width);
  const std::size_t dim = std::size_t{1} << n;
  if (rows.size() != dim) {
    throw ParseError("labeling table has " + std::to_string(rows.size()) +
                         " rows, expected " + std::to_string(dim),
                     0);
  }
  std::vector<State> labels(dim);
  std::vector<bool> level_seen(dim, false);
  std::vector<bool> label_seen(dim, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto [level, bits] = rows[i];
    if (bits.size() != width) throw ParseError("label width differs", lines[i]);
    State s = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') throw ParseError("bad label", lines[i]);
      s = (s << 1) | static_cast<State>(c - '0');
    }
    if (level >= dim || level_seen[level]) {
      throw ParseError("level " + std::to_string(level) + " out of range or repeated",
                       lines[i]);
    }
    if (label_seen[s]) throw ParseError("label used twice", lines[i]);
    level_seen[level] = label_seen[s] = true;
    labels[level] = s;
  }
  return Labeling::from_labels(n, std::move(labels));
}

}  // namespace olsc
