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

#include "olsc/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace olsc {

namespace {

void check_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n_qubits) +
                                " outside [1, " + std::to_string(kMaxQubits) +
                                "]");
  }
}

State bit_of(State s, int n_qubits, int qubit) {
  return (s >> (n_qubits - qubit)) & 1u;
}

}  // namespace

Permutation Permutation::from_map(int n_qubits, std::vector<State> map) {
  check_qubits(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (map.size() != dim) {
    throw std::invalid_argument("map has " + std::to_string(map.size()) +
                                " entries, expected " + std::to_string(dim));
  }
  std::vector<bool> seen(dim, false);
  for (State out : map) {
    if (out >= dim) {
      throw std::invalid_argument("output " + std::to_string(out) +
                                  " out of range");
    }
    if (seen[out]) {
      throw std::invalid_argument("output " + format_state(out, n_qubits) +
                                  " repeated; map is not a bijection");
    }
    seen[out] = true;
  }
  return Permutation(n_qubits, std::move(map));
}

Permutation Permutation::identity(int n_qubits) {
  check_qubits(n_qubits);
  std::vector<State> map(std::size_t{1} << n_qubits);
  std::iota(map.begin(), map.end(), State{0});
  return Permutation(n_qubits, std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<State> inv(map_.size());
  for (State i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return Permutation(n_qubits_, std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (State i = 0; i < map_.size(); ++i) {
    if (map_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& first, const Permutation& second) {
  if (first.n_qubits() != second.n_qubits()) {
    throw std::invalid_argument(
        "cannot compose operations on " + std::to_string(first.n_qubits()) +
        " and " + std::to_string(second.n_qubits()) + " qubits");
  }
  std::vector<State> map(first.size());
  for (State i = 0; i < map.size(); ++i) map[i] = second(first(i));
  return Permutation::from_map(first.n_qubits(), std::move(map));
}

std::string format_state(State s, int n_qubits) {
  std::string out(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 1; q <= n_qubits; ++q) {
    if (bit_of(s, n_qubits, q)) out[static_cast<std::size_t>(q - 1)] = '1';
  }
  return out;
}

std::string format_ket(State s, int n_qubits) {
  return "|" + format_state(s, n_qubits) + ">";
}

std::size_t MaximalSetDecomposition::multi_element_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      sets.begin(), sets.end(), [](const MaximalSet& s) { return s.size() > 1; }));
}

MaximalSetDecomposition maximal_sets(const Permutation& p) {
  MaximalSetDecomposition d;
  d.n_qubits = p.n_qubits();
  std::vector<bool> covered(p.size(), false);
  for (State start = 0; start < p.size(); ++start) {
    if (covered[start]) continue;
    MaximalSet set;
    for (State s = start; !covered[s]; s = p(s)) {
      covered[s] = true;
      set.chain.push_back(s);
    }
    d.sets.push_back(std::move(set));
  }
  return d;
}

std::size_t min_pulse_count(const MaximalSetDecomposition& d) {
  std::size_t total = 0;
  for (const auto& s : d.sets) total += s.size() - 1;
  return total;
}

BigInt count_optimal_labelings(const MaximalSetDecomposition& d) {
  BigInt count = 1;
  for (std::size_t m = 2; m <= d.sets.size(); ++m) count *= m;
  count <<= static_cast<unsigned>(d.multi_element_count());
  return count;
}

std::string format_decomposition(const MaximalSetDecomposition& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.sets.size(); ++i) {
    const auto& chain = d.sets[i].chain;
    for (std::size_t j = 0; j < chain.size(); ++j) {
      if (j > 0) os << " -> ";
      os << format_ket(chain[j], d.n_qubits);
    }
    if (chain.size() > 1) os << " -> " << format_ket(chain.front(), d.n_qubits);
    os << "\tS" << (i + 1) << "={";
    for (std::size_t j = 0; j < chain.size(); ++j) {
      if (j > 0) os << ",";
      os << format_ket(chain[j], d.n_qubits);
    }
    os << "}\n";
  }
  return os.str();
}

Permutation full_adder4() {
  constexpr int n = 4;
  std::vector<State> map(16);
  for (State x = 0; x < 16; ++x) {
    const State c0 = bit_of(x, n, 1);
    const State a = bit_of(x, n, 2);
    const State b = bit_of(x, n, 3);
    const State l = bit_of(x, n, 4);
    const State sum = c0 ^ a ^ b;
    const State carry = l ^ ((a & b) ^ (a & c0) ^ (b & c0));
    map[x] = (c0 << 3) | (a << 2) | (sum << 1) | carry;
  }
  return Permutation::from_map(n, std::move(map));
}

Permutation swap_qubits(int n_qubits, int i, int j) {
  check_qubits(n_qubits);
  if (i < 1 || i > n_qubits || j < 1 || j > n_qubits) {
    throw std::invalid_argument("swap qubit index out of range for " +
                                std::to_string(n_qubits) + " qubits");
  }
  std::vector<State> map(std::size_t{1} << n_qubits);
  const State mask_i = State{1} << (n_qubits - i);
  const State mask_j = State{1} << (n_qubits - j);
  for (State x = 0; x < map.size(); ++x) {
    const bool bi = (x & mask_i) != 0;
    const bool bj = (x & mask_j) != 0;
    map[x] = bi == bj ? x : x ^ mask_i ^ mask_j;
  }
  return Permutation::from_map(n_qubits, std::move(map));
}

namespace {

int parse_index(std::string_view text, std::string_view name) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("bad number '" + std::string(text) +
                                "' in operation '" + std::string(name) + "'");
  }
  return value;
}

}  // namespace

Permutation builtin_operation(std::string_view name, int n_qubits) {
  if (name == "fulladder4" || name == "full_adder4") {
    if (n_qubits != 0 && n_qubits != 4) {
      throw std::invalid_argument("fulladder4 acts on 4 qubits, not " +
                                  std::to_string(n_qubits));
    }
    return full_adder4();
  }
  if (name == "identity") {
    return Permutation::identity(n_qubits == 0 ? 1 : n_qubits);
  }
  if (name.starts_with("identity:")) {
    const int n = parse_index(name.substr(9), name);
    if (n_qubits != 0 && n_qubits != n) {
      throw std::invalid_argument("operation '" + std::string(name) +
                                  "' does not act on " +
                                  std::to_string(n_qubits) + " qubits");
    }
    return Permutation::identity(n);
  }
  std::string_view args;
  if (name.starts_with("swap:")) {
    args = name.substr(5);
  } else if (name.starts_with("swap(") && name.ends_with(")")) {
    args = name.substr(5, name.size() - 6);
  } else {
    throw std::invalid_argument("unknown operation '" + std::string(name) + "'");
  }
  const auto comma = args.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("swap needs two qubit indices: '" +
                                std::string(name) + "'");
  }
  const int i = parse_index(args.substr(0, comma), name);
  const int j = parse_index(args.substr(comma + 1), name);
  return swap_qubits(n_qubits == 0 ? std::max(i, j) : n_qubits, i, j);
}

}  // namespace olsc
