#include "bramsey/constructions.hpp"

#include <random>
#include <stdexcept>
#include <utility>

namespace bramsey {

TwoColoring theorem4_construction(int m, int n) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("theorem4_construction: m and n must be at least 2");
  const int board = m + n - 2;
  if (board > kMaxSide)
    throw std::invalid_argument("theorem4_construction: board exceeds 64 vertices per side");
  BipartiteGraph red(board, board);
  for (int i = 0; i < m - 1; ++i)
    for (int j = 0; j < board; ++j) red.add_edge(i, j);
  return TwoColoring{std::move(red)};
}

TwoColoring figure1_graph() {
  BipartiteGraph red(7, 7);
  for (int i : {0, 1, 2})
    for (int j : {0, 1, 2}) red.add_edge(i, j);
  for (int j = 0; j < 7; ++j) red.add_edge(3, j);
  for (int i : {4, 5, 6})
    for (int j : {4, 5, 6}) red.add_edge(i, j);
  return TwoColoring{std::move(red)};
}

ConstructionReport check_construction(std::string construction_id, TwoColoring coloring,
                                      int red_k, int blue_k) {
  ConstructionReport report;
  report.construction_id = std::move(construction_id);
  report.checked_red_k = red_k;
  report.checked_blue_k = blue_k;
  report.red_cycle_absent = !find_cycle(coloring.red, red_k).has_value();
  report.blue_cycle_absent = !find_cycle(coloring.blue(), blue_k).has_value();
  report.coloring = std::move(coloring);
  return report;
}

ConstructionReport lower_bound_certificate(int m, int n) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("lower_bound_certificate: m and n must be at least 2");
  ConstructionReport report =
      (m == 4 && n == 4) ? check_construction("figure1", figure1_graph(), 4, 4)
                         : check_construction("theorem4", theorem4_construction(m, n), m, n);
  if (!report.passed())
    throw std::logic_error("lower_bound_certificate: construction failed its absence check");
  return report;
}

Prop1Verdict proposition1_check(const BipartiteGraph& g) {
  if (g.left_size() != 8 || g.right_size() != 8) return {};
  if (!contains_complete(g, 3, 4)) return {};
  if (auto w = find_cycle(g, 4)) return {Prop1Side::in_graph, std::move(w)};
  if (auto w = find_cycle(complement(g), 4)) return {Prop1Side::in_complement, std::move(w)};
  return {Prop1Side::neither, std::nullopt};
}

Prop1SweepReport proposition1_sweep(int samples, std::uint64_t seed) {
  Prop1SweepReport report;
  report.samples = samples;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    BipartiteGraph g(8, 8);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) g.add_edge(i, j);
    // 52 free slots drawn from raw engine bits, one word per sample.
    std::uint64_t bits = rng();
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        if (i < 3 && j < 4) continue;
        if (bits & 1u) g.add_edge(i, j);
        bits >>= 1;
      }
    switch (proposition1_check(g).side) {
      case Prop1Side::in_graph: ++report.in_graph; break;
      case Prop1Side::in_complement: ++report.in_complement; break;
      case Prop1Side::neither: ++report.neither; break;
      case Prop1Side::hypothesis_unmet:
        throw std::logic_error("proposition1_sweep: planted sample lost its K_{3,4}");
    }
  }
  return report;
}

}  // namespace bramsey
