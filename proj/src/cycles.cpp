#include "bramsey/cycles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace bramsey {

namespace {

bool all_distinct_in_range(const std::vector<int>& seq, int bound) {
  std::uint64_t seen = 0;
  for (int v : seq) {
    if (v < 0 || v >= bound) return false;
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

// Scratch state for the exact-length alternating DFS. Left moves are
// restricted to indices above the anchor, which kills rotational duplicates;
// closing is only attempted at full depth.
struct CycleSearch {
  const BipartiteGraph* g = nullptr;
  int k = 0;
  std::uint64_t active_left = 0;   // 2-core restriction
  std::uint64_t active_right = 0;
  std::array<std::uint64_t, kMaxSide> cols{};
  std::array<int, kMaxSide> ls{};
  std::array<int, kMaxSide> rs{};
  std::uint64_t used_left = 0;
  std::uint64_t used_right = 0;
  std::uint64_t above_anchor = 0;

  bool right_step(int depth);

  bool left_step(int depth) {
    std::uint64_t cand = cols[static_cast<std::size_t>(rs[depth - 1])] & active_left &
                         above_anchor & ~used_left;
    for (; cand != 0; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      ls[static_cast<std::size_t>(depth)] = v;
      used_left |= std::uint64_t{1} << v;
      if (right_step(depth)) return true;
      used_left &= ~(std::uint64_t{1} << v);
    }
    return false;
  }
};

bool CycleSearch::right_step(int depth) {
  std::uint64_t cand =
      g->row(ls[static_cast<std::size_t>(depth)]) & active_right & ~used_right;
  for (; cand != 0; cand &= cand - 1) {
    const int v = std::countr_zero(cand);
    if (depth == k - 1) {
      if (cols[static_cast<std::size_t>(v)] >> ls[0] & 1u) {
        rs[static_cast<std::size_t>(depth)] = v;
        return true;
      }
      continue;
    }
    rs[static_cast<std::size_t>(depth)] = v;
    used_right |= std::uint64_t{1} << v;
    if (left_step(depth + 1)) return true;
    used_right &= ~(std::uint64_t{1} << v);
  }
  return false;
}

// Iteratively drops vertices of degree < 2; every cycle lives in the 2-core.
void peel_to_two_core(const BipartiteGraph& g, std::uint64_t& left, std::uint64_t& right,
                      const std::array<std::uint64_t, kMaxSide>& cols) {
  left = g.full_column_mask();
  right = g.full_row_mask();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint64_t m = left; m != 0; m &= m - 1) {
      const int i = std::countr_zero(m);
      if (std::popcount(g.row(i) & right) < 2) {
        left &= ~(std::uint64_t{1} << i);
        changed = true;
      }
    }
    for (std::uint64_t m = right; m != 0; m &= m - 1) {
      const int j = std::countr_zero(m);
      if (std::popcount(cols[static_cast<std::size_t>(j)] & left) < 2) {
        right &= ~(std::uint64_t{1} << j);
        changed = true;
      }
    }
  }
}

CycleWitness witness_from(const CycleSearch& s) {
  CycleWitness w;
  w.half_length = s.k;
  w.left_seq.assign(s.ls.begin(), s.ls.begin() + s.k);
  w.right_seq.assign(s.rs.begin(), s.rs.begin() + s.k);
  return w;
}

void fill_columns(const BipartiteGraph& g, std::array<std::uint64_t, kMaxSide>& cols) {
  cols.fill(0);
  for (int i = 0; i < g.left_size(); ++i)
    for (std::uint64_t m = g.row(i); m != 0; m &= m - 1)
      cols[static_cast<std::size_t>(std::countr_zero(m))] |= std::uint64_t{1} << i;
}

}  // namespace

bool validate_witness(const BipartiteGraph& g, const CycleWitness& w) {
  const int k = w.half_length;
  if (k < 2) return false;
  if (static_cast<int>(w.left_seq.size()) != k ||
      static_cast<int>(w.right_seq.size()) != k)
    return false;
  if (!all_distinct_in_range(w.left_seq, g.left_size())) return false;
  if (!all_distinct_in_range(w.right_seq, g.right_size())) return false;
  for (int t = 0; t < k; ++t) {
    const std::size_t st = static_cast<std::size_t>(t);
    if (!g.adjacent(w.left_seq[st], w.right_seq[st])) return false;
    if (!g.adjacent(w.left_seq[static_cast<std::size_t>((t + 1) % k)], w.right_seq[st]))
      return false;
  }
  return true;
}

CycleWitness normalized(const CycleWitness& w) {
  const int k = w.half_length;
  if (k < 1) return w;
  const auto min_it = std::min_element(w.left_seq.begin(), w.left_seq.end());
  const int s = static_cast<int>(min_it - w.left_seq.begin());

  CycleWitness out;
  out.half_length = k;
  out.left_seq.resize(static_cast<std::size_t>(k));
  out.right_seq.resize(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) {
    out.left_seq[static_cast<std::size_t>(t)] =
        w.left_seq[static_cast<std::size_t>((s + t) % k)];
    out.right_seq[static_cast<std::size_t>(t)] =
        w.right_seq[static_cast<std::size_t>((s + t) % k)];
  }
  if (k >= 2 && out.right_seq[0] > out.right_seq[static_cast<std::size_t>(k - 1)]) {
    // Reverse traversal: keeps left_seq[0], reverses the rest pairwise.
    CycleWitness rev;
    rev.half_length = k;
    rev.left_seq.push_back(out.left_seq[0]);
    for (int t = k - 1; t >= 1; --t)
      rev.left_seq.push_back(out.left_seq[static_cast<std::size_t>(t)]);
    for (int t = k - 1; t >= 0; --t)
      rev.right_seq.push_back(out.right_seq[static_cast<std::size_t>(t)]);
    return rev;
  }
  return out;
}

std::optional<CycleWitness> find_cycle(const BipartiteGraph& g, int k) {
  if (k < 2) throw std::invalid_argument("find_cycle: half-length must be at least 2");
  if (k > g.left_size() || k > g.right_size()) return std::nullopt;

  CycleSearch s;
  s.g = &g;
  s.k = k;
  fill_columns(g, s.cols);
  peel_to_two_core(g, s.active_left, s.active_right, s.cols);
  if (std::popcount(s.active_left) < k || std::popcount(s.active_right) < k)
    return std::nullopt;

  for (std::uint64_t anchors = s.active_left; anchors != 0; anchors &= anchors - 1) {
    const int a = std::countr_zero(anchors);
    s.ls[0] = a;
    s.used_left = std::uint64_t{1} << a;
    s.used_right = 0;
    s.above_anchor = ~((std::uint64_t{1} << a << 1) - 1);
    if (s.right_step(0)) return normalized(witness_from(s));
  }
  return std::nullopt;
}

std::optional<CycleWitness> find_cycle_through_edge(const BipartiteGraph& g, int k, int i,
                                                    int j) {
  if (k < 2)
    throw std::invalid_argument("find_cycle_through_edge: half-length must be at least 2");
  if (i < 0 || i >= g.left_size() || j < 0 || j >= g.right_size() || !g.adjacent(i, j))
    throw std::invalid_argument("find_cycle_through_edge: (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") is not an edge of the graph");
  if (k > g.left_size() || k > g.right_size()) return std::nullopt;

  CycleSearch s;
  s.g = &g;
  s.k = k;
  fill_columns(g, s.cols);
  peel_to_two_core(g, s.active_left, s.active_right, s.cols);
  if (std::popcount(s.active_left) < k || std::popcount(s.active_right) < k)
    return std::nullopt;
  if (!(s.active_left >> i & 1u) || !(s.active_right >> j & 1u)) return std::nullopt;

  // Anchor the searched cycle at the edge itself: every cycle through (i, j)
  // has a traversal starting x_0 = i, y_0 = j.
  s.ls[0] = i;
  s.rs[0] = j;
  s.used_left = std::uint64_t{1} << i;
  s.used_right = std::uint64_t{1} << j;
  s.above_anchor = ~std::uint64_t{0};
  if (s.left_step(1)) return normalized(witness_from(s));
  return std::nullopt;
}

namespace {

constexpr int kOracleBound = 6;

// Enumerates ordered selections: all k-permutations of each side in
// lexicographic order, validating each arrangement as a witness directly.
template <typename Visit>
void oracle_enumerate(const BipartiteGraph& g, int k, Visit&& visit) {
  const int L = g.left_size(), R = g.right_size();
  if (k > L || k > R) return;

  std::vector<int> lperm(static_cast<std::size_t>(k)), rperm(static_cast<std::size_t>(k));
  std::uint64_t lused = 0;

  auto check = [&]() -> bool {
    for (int t = 0; t < k; ++t) {
      const std::size_t st = static_cast<std::size_t>(t);
      if (!g.adjacent(lperm[st], rperm[st])) return false;
      if (!g.adjacent(lperm[static_cast<std::size_t>((t + 1) % k)], rperm[st])) return false;
    }
    return true;
  };

  auto pick_right = [&](auto&& self, int depth, std::uint64_t rused) -> bool {
    if (depth == k) {
      CycleWitness w{k, lperm, rperm};
      return check() && visit(w);
    }
    for (int v = 0; v < R; ++v) {
      if (rused >> v & 1u) continue;
      rperm[static_cast<std::size_t>(depth)] = v;
      if (self(self, depth + 1, rused | std::uint64_t{1} << v)) return true;
    }
    return false;
  };

  auto pick_left = [&](auto&& self, int depth) -> bool {
    if (depth == k) return pick_right(pick_right, 0, 0);
    for (int v = 0; v < L; ++v) {
      if (lused >> v & 1u) continue;
      lperm[static_cast<std::size_t>(depth)] = v;
      lused |= std::uint64_t{1} << v;
      if (self(self, depth + 1)) return true;
      lused &= ~(std::uint64_t{1} << v);
    }
    return false;
  };

  pick_left(pick_left, 0);
}

void oracle_check_size(const BipartiteGraph& g, const char* who) {
  if (g.left_size() > kOracleBound || g.right_size() > kOracleBound)
    throw std::invalid_argument(std::string(who) +
                                ": refusing graphs with more than 6 vertices per side");
}

}  // namespace

std::optional<CycleWitness> oracle_find_cycle(const BipartiteGraph& g, int k) {
  if (k < 2) throw std::invalid_argument("oracle_find_cycle: half-length must be at least 2");
  oracle_check_size(g, "oracle_find_cycle");
  std::optional<CycleWitness> found;
  oracle_enumerate(g, k, [&](const CycleWitness& w) {
    found = w;
    return true;  // stop at the first valid arrangement
  });
  return found;
}

std::uint64_t oracle_count_cycles(const BipartiteGraph& g, int k) {
  if (k < 2)
    throw std::invalid_argument("oracle_count_cycles: half-length must be at least 2");
  oracle_check_size(g, "oracle_count_cycles");
  // Each 2k-cycle subgraph has exactly one tuple with the smallest left
  // vertex first and right_seq[0] < right_seq[k-1].
  std::uint64_t count = 0;
  oracle_enumerate(g, k, [&](const CycleWitness& w) {
    const bool canonical =
        w.left_seq[0] == *std::min_element(w.left_seq.begin(), w.left_seq.end()) &&
        w.right_seq[0] < w.right_seq[static_cast<std::size_t>(k - 1)];
    if (canonical) ++count;
    return false;  // keep enumerating
  });
  return count;
}

namespace {

void check_extension_args(const BipartiteGraph& g, const CycleWitness& c, int x, int y,
                          const char* who) {
  if (!validate_witness(g, c))
    throw std::invalid_argument(std::string(who) + ": witness is not a cycle of the graph");
  if (x < 0 || x >= g.left_size() || y < 0 || y >= g.right_size())
    throw std::invalid_argument(std::string(who) + ": vertex out of range");
  if (std::find(c.left_seq.begin(), c.left_seq.end(), x) != c.left_seq.end() ||
      std::find(c.right_seq.begin(), c.right_seq.end(), y) != c.right_seq.end())
    throw std::invalid_argument(std::string(who) + ": x and y must not lie on the cycle");
}

// Rotates c so position i comes first, then splices x and y in at the front
// according to the matched pattern.
CycleWitness splice_both(const CycleWitness& c, int i, int x, int y) {
  const int k = c.half_length;
  CycleWitness out;
  out.half_length = k + 1;
  // x_i  y  x_{i+1}  y_i  x  y_{i+1}  x_{i+2} ...
  out.left_seq.push_back(c.left_seq[static_cast<std::size_t>(i)]);
  out.left_seq.push_back(c.left_seq[static_cast<std::size_t>((i + 1) % k)]);
  out.left_seq.push_back(x);
  for (int t = 2; t < k; ++t)
    out.left_seq.push_back(c.left_seq[static_cast<std::size_t>((i + t) % k)]);
  out.right_seq.push_back(y);
  for (int t = 0; t < k; ++t)
    out.right_seq.push_back(c.right_seq[static_cast<std::size_t>((i + t) % k)]);
  return out;
}

CycleWitness splice_chord(const CycleWitness& c, int i, int x, int y) {
  const int k = c.half_length;
  CycleWitness out;
  out.half_length = k + 1;
  // x_i  y  x  y_i  x_{i+1} ...
  out.left_seq.push_back(c.left_seq[static_cast<std::size_t>(i)]);
  out.left_seq.push_back(x);
  for (int t = 1; t < k; ++t)
    out.left_seq.push_back(c.left_seq[static_cast<std::size_t>((i + t) % k)]);
  out.right_seq.push_back(y);
  for (int t = 0; t < k; ++t)
    out.right_seq.push_back(c.right_seq[static_cast<std::size_t>((i + t) % k)]);
  return out;
}

}  // namespace

std::optional<CycleWitness> extend_lemma1(const BipartiteGraph& g, const CycleWitness& c,
                                          int x, int y) {
  check_extension_args(g, c, x, y, "extend_lemma1");
  const int k = c.half_length;

  for (int i = 0; i < k; ++i) {
    const int xi = c.left_seq[static_cast<std::size_t>(i)];
    const int xi1 = c.left_seq[static_cast<std::size_t>((i + 1) % k)];
    const int yi = c.right_seq[static_cast<std::size_t>(i)];
    const int yi1 = c.right_seq[static_cast<std::size_t>((i + 1) % k)];
    if (g.adjacent(xi, y) && g.adjacent(xi1, y) && g.adjacent(x, yi) && g.adjacent(x, yi1))
      return normalized(splice_both(c, i, x, y));
  }
  if (g.adjacent(x, y)) {
    for (int i = 0; i < k; ++i) {
      const int xi = c.left_seq[static_cast<std::size_t>(i)];
      const int yi = c.right_seq[static_cast<std::size_t>(i)];
      if (g.adjacent(xi, y) && g.adjacent(x, yi))
        return normalized(splice_chord(c, i, x, y));
    }
  }
  return std::nullopt;
}

Lemma2Result extend_lemma2(const BipartiteGraph& g, const CycleWitness& c, int x, int y) {
  check_extension_args(g, c, x, y, "extend_lemma2");
  const int k = c.half_length;
  if (k < 4) return {};

  std::uint64_t cycle_rights = 0, cycle_lefts = 0;
  for (int v : c.right_seq) cycle_rights |= std::uint64_t{1} << v;
  for (int v : c.left_seq) cycle_lefts |= std::uint64_t{1} << v;
  const int x_on_c = std::popcount(g.row(x) & cycle_rights);
  const int y_on_c = std::popcount(g.column(y) & cycle_lefts);
  const bool chord = g.adjacent(x, y);
  const int threshold = chord ? (k + 1) / 2 + 1 : k - 1;
  if (x_on_c < threshold || y_on_c < threshold) return {};

  if (auto w = extend_lemma1(g, c, x, y))
    return {Lemma2Result::Status::extended, std::move(w)};

  // The single-splice patterns are not exhaustive in the non-chord case: the
  // guaranteed (k+1)-cycle may reroute several cycle edges. It still lives
  // inside V(c) + {x, y}, so an exact search there settles it.
  std::vector<int> lefts = c.left_seq, rights = c.right_seq;
  lefts.push_back(x);
  rights.push_back(y);
  std::sort(lefts.begin(), lefts.end());
  std::sort(rights.begin(), rights.end());
  const BipartiteGraph sub =
      induced(g, VertexSet::of(Side::left, lefts), VertexSet::of(Side::right, rights));
  if (auto w = find_cycle(sub, k + 1)) {
    CycleWitness mapped;
    mapped.half_length = w->half_length;
    for (int v : w->left_seq) mapped.left_seq.push_back(lefts[static_cast<std::size_t>(v)]);
    for (int v : w->right_seq)
      mapped.right_seq.push_back(rights[static_cast<std::size_t>(v)]);
    return {Lemma2Result::Status::extended, normalized(mapped)};
  }
  throw std::logic_error(
      "extend_lemma2: hypothesis satisfied but no extension found; this is a defect");
}

}  // namespace bramsey
