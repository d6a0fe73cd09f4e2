#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bramsey/bigraph.hpp"
#include "bramsey/cycles.hpp"

namespace bramsey {

/// Outcome of checking one extremal coloring: which cycle lengths were
/// searched for on each side and whether both came up absent.
struct ConstructionReport {
  std::string construction_id;
  TwoColoring coloring;
  int checked_red_k = 0;
  int checked_blue_k = 0;
  bool red_cycle_absent = false;
  bool blue_cycle_absent = false;

  bool passed() const noexcept { return red_cycle_absent && blue_cycle_absent; }
};

/// Coloring of K_{m+n-2, m+n-2} splitting the left side: the first m-1 rows
/// are completely red, the remaining n-1 rows completely blue. Neither color
/// class has enough rows for its target cycle, so red avoids C_{2m} and blue
/// avoids C_{2n}.
TwoColoring theorem4_construction(int m, int n);

/// The fixed 7x7 coloring whose red side is three rows attached to the first
/// three columns, one full row, and three rows attached to the last three
/// columns (25 red edges). Both colors avoid C_8, and blue is isomorphic to
/// red with the middle edge (3, 3) removed.
TwoColoring figure1_graph();

/// Runs both absence checks on a coloring and records the verdicts.
ConstructionReport check_construction(std::string construction_id, TwoColoring coloring,
                                      int red_k, int blue_k);

/// Fully checked report for the strongest known coloring for the pair:
/// figure1_graph for (4, 4) on a 7x7 board, theorem4_construction on
/// m+n-2 otherwise. Throws if either absence check fails, since that would
/// mean the construction itself is wrong.
ConstructionReport lower_bound_certificate(int m, int n);

enum class Prop1Side { in_graph, in_complement, neither, hypothesis_unmet };

struct Prop1Verdict {
  Prop1Side side = Prop1Side::hypothesis_unmet;
  std::optional<CycleWitness> witness;
};

/// For an 8x8 graph containing a complete K_{3,4}: locates a C_8 in the graph
/// or in its complement. "neither" would contradict the forcing property and
/// makes the caller's test fail; a graph that is not 8x8 or has no K_{3,4}
/// reports hypothesis_unmet.
Prop1Verdict proposition1_check(const BipartiteGraph& g);

struct Prop1SweepReport {
  int samples = 0;
  std::uint64_t seed = 0;
  int in_graph = 0;
  int in_complement = 0;
  int neither = 0;
};

/// Seeded randomized sweep: plants K_{3,4} on rows {0,1,2} x columns
/// {0,1,2,3} of an 8x8 board, draws every other edge slot i.i.d. with
/// probability 1/2, and tallies proposition1_check verdicts.
Prop1SweepReport proposition1_sweep(int samples, std::uint64_t seed);

}  // namespace bramsey
