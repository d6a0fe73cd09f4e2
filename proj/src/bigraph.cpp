#include "bramsey/bigraph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace bramsey {

namespace {

void check_side_size(int n, const char* what) {
  if (n < 0 || n > kMaxSide)
    throw std::invalid_argument(std::string(what) + " must be in [0, 64], got " +
                                std::to_string(n));
}

std::uint64_t low_bits(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

int VertexSet::count() const noexcept { return std::popcount(mask); }

bool VertexSet::contains(int v) const noexcept {
  return v >= 0 && v < 64 && (mask >> v & 1u);
}

std::vector<int> VertexSet::indices() const {
  std::vector<int> out;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

VertexSet VertexSet::of(Side side, std::initializer_list<int> vertices) {
  VertexSet s{side, 0};
  for (int v : vertices) {
    if (v < 0 || v >= kMaxSide) throw std::invalid_argument("vertex index out of range");
    s.mask |= std::uint64_t{1} << v;
  }
  return s;
}

VertexSet VertexSet::of(Side side, const std::vector<int>& vertices) {
  VertexSet s{side, 0};
  for (int v : vertices) {
    if (v < 0 || v >= kMaxSide) throw std::invalid_argument("vertex index out of range");
    s.mask |= std::uint64_t{1} << v;
  }
  return s;
}

VertexSet VertexSet::range(Side side, int first, int last) {
  if (first < 0 || last < first || last > kMaxSide)
    throw std::invalid_argument("bad vertex range");
  return VertexSet{side, low_bits(last) & ~low_bits(first)};
}

BipartiteGraph::BipartiteGraph(int left_size, int right_size)
    : left_size_(left_size), right_size_(right_size) {
  check_side_size(left_size, "left size");
  check_side_size(right_size, "right size");
  rows_.assign(static_cast<std::size_t>(left_size), 0);
}

BipartiteGraph BipartiteGraph::complete(int left_size, int right_size) {
  BipartiteGraph g(left_size, right_size);
  const std::uint64_t full = g.full_row_mask();
  for (auto& r : g.rows_) r = full;
  return g;
}

BipartiteGraph BipartiteGraph::from_edges(int left_size, int right_size,
                                          const std::vector<std::pair<int, int>>& edges) {
  BipartiteGraph g(left_size, right_size);
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

bool BipartiteGraph::adjacent(int i, int j) const noexcept {
  return (rows_[static_cast<std::size_t>(i)] >> j) & 1u;
}

void BipartiteGraph::add_edge(int i, int j) {
  if (i < 0 || i >= left_size_ || j < 0 || j >= right_size_)
    throw std::invalid_argument("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") outside a " + std::to_string(left_size_) + "x" +
                                std::to_string(right_size_) + " graph");
  rows_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
}

void BipartiteGraph::remove_edge(int i, int j) {
  if (i < 0 || i >= left_size_ || j < 0 || j >= right_size_)
    throw std::invalid_argument("edge outside graph");
  rows_[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j);
}

std::uint64_t BipartiteGraph::column(int j) const noexcept {
  std::uint64_t col = 0;
  for (int i = 0; i < left_size_; ++i) col |= std::uint64_t{adjacent(i, j)} << i;
  return col;
}

int BipartiteGraph::degree_left(int i) const noexcept {
  return std::popcount(rows_[static_cast<std::size_t>(i)]);
}

int BipartiteGraph::degree_right(int j) const noexcept { return std::popcount(column(j)); }

int BipartiteGraph::min_degree() const noexcept {
  int d = kMaxSide + 1;
  for (int i = 0; i < left_size_; ++i) d = std::min(d, degree_left(i));
  for (int j = 0; j < right_size_; ++j) d = std::min(d, degree_right(j));
  return d == kMaxSide + 1 ? 0 : d;
}

int BipartiteGraph::max_degree() const noexcept {
  int d = 0;
  for (int i = 0; i < left_size_; ++i) d = std::max(d, degree_left(i));
  for (int j = 0; j < right_size_; ++j) d = std::max(d, degree_right(j));
  return d;
}

int BipartiteGraph::edge_count() const noexcept {
  int n = 0;
  for (auto r : rows_) n += std::popcount(r);
  return n;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int i = 0; i < left_size_; ++i)
    for (std::uint64_t m = rows_[static_cast<std::size_t>(i)]; m != 0; m &= m - 1)
      out.emplace_back(i, std::countr_zero(m));
  return out;
}

std::uint64_t BipartiteGraph::full_row_mask() const noexcept { return low_bits(right_size_); }

std::uint64_t BipartiteGraph::full_column_mask() const noexcept { return low_bits(left_size_); }

BipartiteGraph complement(const BipartiteGraph& g) {
  BipartiteGraph out(g.left_size(), g.right_size());
  const std::uint64_t full = g.full_row_mask();
  for (int i = 0; i < g.left_size(); ++i)
    for (std::uint64_t m = ~g.row(i) & full; m != 0; m &= m - 1)
      out.add_edge(i, std::countr_zero(m));
  return out;
}

BipartiteGraph induced(const BipartiteGraph& g, const VertexSet& xs, const VertexSet& ys) {
  if (xs.side != Side::left || ys.side != Side::right)
    throw std::invalid_argument("induced: expected a left set and a right set");
  const std::vector<int> li = xs.indices();
  const std::vector<int> ri = ys.indices();
  if (!li.empty() && li.back() >= g.left_size())
    throw std::invalid_argument("induced: left vertex out of range");
  if (!ri.empty() && ri.back() >= g.right_size())
    throw std::invalid_argument("induced: right vertex out of range");
  BipartiteGraph out(static_cast<int>(li.size()), static_cast<int>(ri.size()));
  for (std::size_t a = 0; a < li.size(); ++a)
    for (std::size_t b = 0; b < ri.size(); ++b)
      if (g.adjacent(li[a], ri[b])) out.add_edge(static_cast<int>(a), static_cast<int>(b));
  return out;
}

BipartiteGraph transpose(const BipartiteGraph& g) {
  BipartiteGraph out(g.right_size(), g.left_size());
  for (int i = 0; i < g.left_size(); ++i)
    for (int j = 0; j < g.right_size(); ++j)
      if (g.adjacent(i, j)) out.add_edge(j, i);
  return out;
}

namespace {

bool is_permutation_of(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::uint64_t seen = 0;
  for (int v : p) {
    if (v < 0 || v >= n || (seen >> v & 1u)) return false;
    seen |= std::uint64_t{1} << v;
  }
  return true;
}

}  // namespace

BipartiteGraph relabel(const BipartiteGraph& g, const std::vector<int>& left_perm,
                       const std::vector<int>& right_perm) {
  if (!is_permutation_of(left_perm, g.left_size()) ||
      !is_permutation_of(right_perm, g.right_size()))
    throw std::invalid_argument("relabel: not a permutation of the vertex classes");
  BipartiteGraph out(g.left_size(), g.right_size());
  for (int i = 0; i < g.left_size(); ++i)
    for (int j = 0; j < g.right_size(); ++j)
      if (g.adjacent(i, j)) out.add_edge(left_perm[static_cast<std::size_t>(i)],
                                         right_perm[static_cast<std::size_t>(j)]);
  return out;
}

std::optional<std::pair<VertexSet, VertexSet>> contains_complete(const BipartiteGraph& g,
                                                                 int a, int b) {
  if (a < 0 || a > g.left_size() || b < 0 || b > g.right_size())
    throw std::invalid_argument("contains_complete: target dimensions exceed the graph");

  // a-subsets of the left side in ascending lexicographic order.
  std::vector<int> pick(static_cast<std::size_t>(a));
  for (int t = 0; t < a; ++t) pick[static_cast<std::size_t>(t)] = t;
  const int L = g.left_size();
  while (true) {
    std::uint64_t common = g.full_row_mask();
    for (int v : pick) common &= g.row(v);
    if (std::popcount(common) >= b) {
      std::uint64_t rmask = 0;
      std::uint64_t m = common;
      for (int t = 0; t < b; ++t, m &= m - 1) rmask |= m & ~(m - 1);
      VertexSet xs{Side::left, 0};
      for (int v : pick) xs.mask |= std::uint64_t{1} << v;
      return std::make_pair(xs, VertexSet{Side::right, rmask});
    }
    // next combination
    int t = a - 1;
    while (t >= 0 && pick[static_cast<std::size_t>(t)] == L - a + t) --t;
    if (t < 0) break;
    ++pick[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < a; ++u)
      pick[static_cast<std::size_t>(u)] = pick[static_cast<std::size_t>(u - 1)] + 1;
  }
  return std::nullopt;
}

namespace {

// Backtracking over left-vertex assignments; right side is settled by a
// column-signature multiset comparison once the left map is complete.
bool iso_oriented(const BipartiteGraph& g, const BipartiteGraph& h) {
  const int L = g.left_size(), R = g.right_size();
  if (h.left_size() != L || h.right_size() != R) return false;
  if (g.edge_count() != h.edge_count()) return false;

  std::array<int, 8> deg_g{}, deg_h{};
  for (int i = 0; i < L; ++i) {
    deg_g[static_cast<std::size_t>(i)] = g.degree_left(i);
    deg_h[static_cast<std::size_t>(i)] = h.degree_left(i);
  }
  {
    auto dg = deg_g, dh = deg_h;
    std::sort(dg.begin(), dg.begin() + L);
    std::sort(dh.begin(), dh.begin() + L);
    if (!std::equal(dg.begin(), dg.begin() + L, dh.begin())) return false;
    std::vector<int> rg, rh;
    for (int j = 0; j < R; ++j) {
      rg.push_back(g.degree_right(j));
      rh.push_back(h.degree_right(j));
    }
    std::sort(rg.begin(), rg.end());
    std::sort(rh.begin(), rh.end());
    if (rg != rh) return false;
  }

  std::array<int, 8> perm{};
  std::array<bool, 8> used{};

  auto columns_match = [&]() {
    std::array<std::uint64_t, 8> cg{}, ch{};
    for (int j = 0; j < R; ++j) {
      std::uint64_t a = 0, b = 0;
      for (int i = 0; i < L; ++i) {
        a |= std::uint64_t{g.adjacent(i, j)} << i;
        b |= std::uint64_t{h.adjacent(perm[static_cast<std::size_t>(i)], j)} << i;
      }
      cg[static_cast<std::size_t>(j)] = a;
      ch[static_cast<std::size_t>(j)] = b;
    }
    std::sort(cg.begin(), cg.begin() + R);
    std::sort(ch.begin(), ch.begin() + R);
    return std::equal(cg.begin(), cg.begin() + R, ch.begin());
  };

  auto assign = [&](auto&& self, int i) -> bool {
    if (i == L) return columns_match();
    for (int t = 0; t < L; ++t) {
      if (used[static_cast<std::size_t>(t)]) continue;
      if (deg_h[static_cast<std::size_t>(t)] != deg_g[static_cast<std::size_t>(i)]) continue;
      used[static_cast<std::size_t>(t)] = true;
      perm[static_cast<std::size_t>(i)] = t;
      if (self(self, i + 1)) return true;
      used[static_cast<std::size_t>(t)] = false;
    }
    return false;
  };
  return assign(assign, 0);
}

}  // namespace

bool are_isomorphic(const BipartiteGraph& g, const BipartiteGraph& h) {
  if (g.left_size() > 8 || g.right_size() > 8 || h.left_size() > 8 || h.right_size() > 8)
    throw std::invalid_argument("are_isomorphic: sides larger than 8 are not supported");
  if (iso_oriented(g, h)) return true;
  if (g.left_size() == h.right_size() && g.right_size() == h.left_size() &&
      g.left_size() != g.right_size())
    return iso_oriented(transpose(g), h);
  if (g.left_size() == g.right_size() && h.left_size() == h.right_size() &&
      g.left_size() == h.left_size())
    return iso_oriented(transpose(g), h);
  return false;
}

}  // namespace bramsey
