#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "bramsey/bigraph.hpp"

namespace bramsey::test {

inline BipartiteGraph random_graph(int left, int right, std::mt19937_64& rng) {
  BipartiteGraph g(left, right);
  for (int i = 0; i < left; ++i) {
    std::uint64_t bits = rng();
    for (int j = 0; j < right; ++j)
      if (bits >> j & 1u) g.add_edge(i, j);
  }
  return g;
}

/// Graph from a packed edge matrix, bit (i*right + j) = edge (i, j).
/// Lets sweeps enumerate every graph on a small board.
inline BipartiteGraph graph_from_bits(int left, int right, std::uint64_t bits) {
  BipartiteGraph g(left, right);
  for (int i = 0; i < left; ++i)
    for (int j = 0; j < right; ++j)
      if (bits >> (i * right + j) & 1u) g.add_edge(i, j);
  return g;
}

/// Independent subset-pair enumeration for complete-subgraph containment.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> brute_contains_complete(
    const BipartiteGraph& g, int a, int b) {
  const int L = g.left_size(), R = g.right_size();
  for (std::uint64_t ls = 0; ls < (std::uint64_t{1} << L); ++ls) {
    if (std::popcount(ls) != a) continue;
    for (std::uint64_t rs = 0; rs < (std::uint64_t{1} << R); ++rs) {
      if (std::popcount(rs) != b) continue;
      bool complete = true;
      for (int i = 0; i < L && complete; ++i)
        if (ls >> i & 1u)
          for (int j = 0; j < R && complete; ++j)
            if ((rs >> j & 1u) && !g.adjacent(i, j)) complete = false;
      if (complete) return std::make_pair(ls, rs);
    }
  }
  return std::nullopt;
}

}  // namespace bramsey::test
