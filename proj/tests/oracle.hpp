#pragma once

// Small brute-force helpers used as independent checks in the unit tests.

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "jnt/kset.hpp"
#include "jnt/perm.hpp"

namespace oracle {

struct VecHash {
  std::size_t operator()(const std::vector<jnt::Point>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

// Every element of <gens>, by closure under right multiplication.
inline std::vector<std::vector<jnt::Point>> closure(std::size_t n, const std::vector<jnt::Permutation>& gens,
                                                    std::size_t limit = 200000) {
  std::vector<jnt::Point> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<jnt::Point>(i);
  std::unordered_set<std::vector<jnt::Point>, VecHash> seen{id};
  std::vector<std::vector<jnt::Point>> out{id};
  for (std::size_t i = 0; i < out.size() && out.size() <= limit; ++i) {
    for (const auto& s : gens) {
      std::vector<jnt::Point> h(n);
      for (std::size_t x = 0; x < n; ++x) h[x] = s(out[i][x]);
      if (seen.insert(h).second) out.push_back(std::move(h));
    }
  }
  return out;
}

// Johnson distance by breadth-first search from a to b.
inline std::size_t bfs_distance(std::size_t v, const jnt::KSubset& a, const jnt::KSubset& b) {
  std::unordered_set<jnt::KSubset, jnt::KSubsetHash> seen{a};
  std::vector<jnt::KSubset> frontier{a};
  for (std::size_t d = 0;; ++d) {
    for (const auto& s : frontier) {
      if (s == b) return d;
    }
    std::vector<jnt::KSubset> next;
    for (const auto& s : frontier) {
      for (jnt::Point u = 0; u < v; ++u) {
        if (!s.contains(u)) continue;
        for (jnt::Point w = 0; w < v; ++w) {
          if (s.contains(w)) continue;
          auto n = s.without(u).with(w);
          if (seen.insert(n).second) next.push_back(std::move(n));
        }
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace oracle
