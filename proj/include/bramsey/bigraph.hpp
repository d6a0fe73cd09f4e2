#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace bramsey {

// One neighborhood fits in a machine word; nothing in this toolkit needs more.
inline constexpr int kMaxSide = 64;

enum class Side { left, right };

/// Subset of the vertices on one side of a bipartition, stored as a bitmask.
struct VertexSet {
  Side side = Side::left;
  std::uint64_t mask = 0;

  int count() const noexcept;
  bool contains(int v) const noexcept;
  std::vector<int> indices() const;

  static VertexSet of(Side side, std::initializer_list<int> vertices);
  static VertexSet of(Side side, const std::vector<int>& vertices);
  /// Vertices [first, last).
  static VertexSet range(Side side, int first, int last);

  bool operator==(const VertexSet&) const noexcept = default;
};

/// Bipartite graph on vertex classes X (left) and Y (right), at most 64
/// vertices per side. Adjacency is one 64-bit mask per left vertex, bit j
/// standing for right vertex j. Values are cheap to copy and safe to share
/// across threads once built; every operation below is a pure function.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int left_size, int right_size);

  static BipartiteGraph complete(int left_size, int right_size);
  static BipartiteGraph from_edges(int left_size, int right_size,
                                   const std::vector<std::pair<int, int>>& edges);

  int left_size() const noexcept { return left_size_; }
  int right_size() const noexcept { return right_size_; }

  bool adjacent(int i, int j) const noexcept;
  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  /// N(x_i) as a mask over right vertices.
  std::uint64_t row(int i) const noexcept { return rows_[static_cast<std::size_t>(i)]; }
  /// N(y_j) as a mask over left vertices.
  std::uint64_t column(int j) const noexcept;

  int degree_left(int i) const noexcept;
  int degree_right(int j) const noexcept;
  int min_degree() const noexcept;
  int max_degree() const noexcept;

  int edge_count() const noexcept;
  /// Edges as (left, right) pairs in ascending lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// Mask with one bit per right vertex.
  std::uint64_t full_row_mask() const noexcept;
  /// Mask with one bit per left vertex.
  std::uint64_t full_column_mask() const noexcept;

  bool operator==(const BipartiteGraph&) const noexcept = default;

 private:
  int left_size_ = 0;
  int right_size_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Edge-complement within the complete bipartite host of the same dimensions.
BipartiteGraph complement(const BipartiteGraph& g);

/// Subgraph induced by a left vertex set and a right vertex set. Result
/// vertices keep the ascending order of their original indices.
BipartiteGraph induced(const BipartiteGraph& g, const VertexSet& xs, const VertexSet& ys);

/// Graph with the two sides exchanged.
BipartiteGraph transpose(const BipartiteGraph& g);

/// Image of g under a pair of side permutations: vertex i maps to
/// left_perm[i], j to right_perm[j].
BipartiteGraph relabel(const BipartiteGraph& g, const std::vector<int>& left_perm,
                       const std::vector<int>& right_perm);

/// First complete K_{a,b} subgraph in ascending (left set, right set) order,
/// or nullopt. Ties are broken lexicographically so witnesses are stable
/// across runs.
std::optional<std::pair<VertexSet, VertexSet>> contains_complete(const BipartiteGraph& g,
                                                                 int a, int b);

/// Whether some pair of side permutations (including the side swap when the
/// dimensions allow it) maps g onto h. Plain permutation backtracking with
/// degree pruning; both sides must have at most 8 vertices.
bool are_isomorphic(const BipartiteGraph& g, const BipartiteGraph& h);

/// 2-edge-coloring of the complete bipartite graph on the red graph's
/// dimensions: red is stored, blue is its bipartite complement.
struct TwoColoring {
  BipartiteGraph red;

  int board_left() const noexcept { return red.left_size(); }
  int board_right() const noexcept { return red.right_size(); }
  BipartiteGraph blue() const { return complement(red); }

  bool operator==(const TwoColoring&) const noexcept = default;
};

}  // namespace bramsey
