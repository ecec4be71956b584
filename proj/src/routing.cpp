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

#include "routing.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "olsc/error.hpp"

namespace olsc::detail {

std::vector<Edge> sort_chain(std::vector<Level> target) {
  std::vector<Edge> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Level i = 0; i + 1 < target.size(); ++i) {
      if (target[i] > target[i + 1]) {
        std::swap(target[i], target[i + 1]);
        swaps.push_back({i, i + 1});
        changed = true;
      }
    }
  }
  return swaps;
}

namespace {

Edge make_edge(Level a, Level b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

std::vector<Edge> route_constructive(const Topology& t, std::vector<Level> target) {
  std::vector<Edge> swaps;
  auto swap_at = [&](Level a, Level b) {
    std::swap(target[a], target[b]);
    swaps.push_back(make_edge(a, b));
  };
  for (Level i = 0; i < target.size(); ++i) {
    while (target[i] != i) {
      const Level dest = target[i];
      std::vector<Level> path{i};
      for (Level diff = i ^ dest; diff != 0;) {
        const Level bit = std::bit_floor(diff);
        path.push_back(path.back() ^ bit);
        diff ^= bit;
      }
      if (t.kind() == TopologyKind::kQuadrupolarChain) {
        path.clear();
        const int step = dest > i ? 1 : -1;
        for (Level v = i;; v = static_cast<Level>(static_cast<int>(v) + step)) {
          path.push_back(v);
          if (v == dest) break;
        }
      }
      const std::size_t d = path.size() - 1;
      for (std::size_t k = 0; k < d; ++k) swap_at(path[k], path[k + 1]);
      for (std::size_t k = d - 1; k-- > 0;) swap_at(path[k], path[k + 1]);
    }
  }
  return swaps;
}

namespace {

class Search {
 public:
  Search(const Topology& t, std::vector<Level> target, std::uint64_t budget)
      : edges_(t.edges().begin(), t.edges().end()),
        kind_(t.kind()),
        cur_(std::move(target)),
        seen_(cur_.size()),
        budget_(budget) {}

  std::size_t heuristic() {
    std::size_t dist = 0;
    for (Level i = 0; i < cur_.size(); ++i) dist += distance(i, cur_[i]);
    ++stamp_;
    std::size_t cycles = 0;
    for (Level i = 0; i < cur_.size(); ++i) {
      if (seen_[i] == stamp_) continue;
      ++cycles;
      for (Level j = i; seen_[j] != stamp_; j = cur_[j]) seen_[j] = stamp_;
    }
    return std::max((dist + 1) / 2, cur_.size() - cycles);
  }

  // Returns true when a solution of length <= threshold was found.
  bool run(std::size_t threshold) {
    next_threshold_ = std::numeric_limits<std::size_t>::max();
    path_.clear();
    return dfs(0, threshold, edges_.size());
  }

  std::size_t next_threshold() const { return next_threshold_; }
  const std::vector<Edge>& path() const { return path_; }
  bool exhausted() const { return nodes_ > budget_; }

 private:
  std::size_t distance(Level a, Level b) const {
    if (kind_ == TopologyKind::kQuadrupolarChain) return a > b ? a - b : b - a;
    return static_cast<std::size_t>(std::popcount(a ^ b));
  }

  bool dfs(std::size_t g, std::size_t threshold, std::size_t prev) {
    if (++nodes_ > budget_) return false;
    const std::size_t h = heuristic();
    if (h == 0) return true;
    if (g + h > threshold) {
      next_threshold_ = std::min(next_threshold_, g + h);
      return false;
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (prev < edges_.size()) {
        if (e == prev) continue;
        const Edge& p = edges_[prev];
        const Edge& c = edges_[e];
        const bool disjoint = c.lo != p.lo && c.lo != p.hi && c.hi != p.lo && c.hi != p.hi;
        // Commuting neighbours only in increasing order.
        if (disjoint && e < prev) continue;
      }
      const Edge& c = edges_[e];
      std::swap(cur_[c.lo], cur_[c.hi]);
      path_.push_back(c);
      if (dfs(g + 1, threshold, e)) return true;
      path_.pop_back();
      std::swap(cur_[c.lo], cur_[c.hi]);
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  std::vector<Edge> edges_;
  TopologyKind kind_;
  std::vector<Level> cur_;
  std::vector<std::uint64_t> seen_;
  std::uint64_t stamp_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_;
  std::size_t next_threshold_ = 0;
  std::vector<Edge> path_;
};

}  // namespace

std::vector<Edge> route_shortest(const Topology& t, const std::vector<Level>& target,
                                 const SearchLimits& limits, const std::string& what,
                                 std::size_t set_index) {
  std::vector<Edge> fallback = route_constructive(t, target);
  const std::size_t upper = fallback.size();
  const std::size_t cap = limits.depth_cap.value_or(upper);

  Search search(t, target, limits.node_budget);
  std::size_t threshold = search.heuristic();
  // The constructive routing already achieves `upper`; search strictly below.
  const std::size_t last = std::min(cap, upper == 0 ? 0 : upper - 1);
  while (threshold <= last) {
    if (search.run(threshold)) return search.path();
    if (search.exhausted()) {
      throw SynthesisError("routing " + what + " exhausted the node budget of " +
                               std::to_string(limits.node_budget) +
                               " at depth " + std::to_string(threshold) +
                               " (best known " + std::to_string(upper) + ")",
                           set_index, upper);
    }
    threshold = search.next_threshold();
  }
  if (cap < upper) {
    throw SynthesisError("no pulse sequence for " + what + " within depth cap " +
                             std::to_string(cap) + " (best known " +
                             std::to_string(upper) + ")",
                         set_index, upper);
  }
  return fallback;
}

}  // namespace olsc::detail
