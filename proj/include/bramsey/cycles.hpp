#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bramsey/bigraph.hpp"

namespace bramsey {

/// An even cycle x_0 y_0 x_1 y_1 ... x_{k-1} y_{k-1} x_0 given by its two
/// alternating vertex sequences. The edges it asserts are (x_t, y_t) and
/// (x_{t+1 mod k}, y_t) for every t.
struct CycleWitness {
  int half_length = 0;
  std::vector<int> left_seq;
  std::vector<int> right_seq;

  bool operator==(const CycleWitness&) const noexcept = default;
};

/// Checks the witness against g: k >= 2, sequences of length k with distinct
/// in-range vertices, and all 2k asserted edges present.
bool validate_witness(const BipartiteGraph& g, const CycleWitness& w);

/// Canonical form of the same cycle: rotated so left_seq[0] is the smallest
/// left vertex on the cycle, reflected so right_seq[0] < right_seq[k-1].
/// Witnesses of equal cycles normalize identically, so certificates compare
/// across runs.
CycleWitness normalized(const CycleWitness& w);

/// A cycle of half-length exactly k (2k vertices), or nullopt. Depth-first
/// path extension alternating sides with bitmask visited sets, anchored at
/// the smallest left vertex of the cycle; closes only at full depth, so the
/// length is exact, never "at least".
std::optional<CycleWitness> find_cycle(const BipartiteGraph& g, int k);

/// Like find_cycle but only cycles through the edge (i, j), which must be
/// present in g. A freshly added edge can only create cycles through itself,
/// so this is the incremental check the search loop uses.
std::optional<CycleWitness> find_cycle_through_edge(const BipartiteGraph& g, int k, int i,
                                                    int j);

/// Independent brute-force reference: enumerates ordered k-tuples of left and
/// right vertices and validates each arrangement directly. Refuses graphs
/// with more than 6 vertices per side.
std::optional<CycleWitness> oracle_find_cycle(const BipartiteGraph& g, int k);

/// Number of distinct 2k-cycle subgraphs, by the same brute-force
/// enumeration restricted to canonically oriented tuples.
std::uint64_t oracle_count_cycles(const BipartiteGraph& g, int k);

/// Constructive single-step cycle extension. Given a valid witness c in g and
/// off-cycle vertices x (left), y (right), scans cycle positions for the
/// first applicable insertion pattern:
///   - x_i, x_{i+1} in N(y) and y_i, y_{i+1} in N(x): splice both x and y
///     between positions i and i+1;
///   - failing that, when xy is an edge: x_i in N(y) and y_i in N(x): insert
///     the path y x after x_i.
/// Returns the resulting (k+1)-witness, normalized, or nullopt when no
/// position matches.
std::optional<CycleWitness> extend_lemma1(const BipartiteGraph& g, const CycleWitness& c,
                                          int x, int y);

struct Lemma2Result {
  enum class Status { extended, hypothesis_unmet };
  Status status = Status::hypothesis_unmet;
  std::optional<CycleWitness> witness;

  bool extended() const noexcept { return status == Status::extended; }
};

/// Degree-threshold cycle extension for k >= 4: the hypothesis is that x and
/// y each have at least k-1 neighbors on c when xy is a non-edge, or at least
/// ceil(k/2)+1 neighbors on c when xy is an edge. Under the hypothesis an
/// extension always exists; a satisfied hypothesis with no witness found is a
/// defect and throws. Unmet hypotheses (including k < 4) report
/// hypothesis_unmet rather than failing.
Lemma2Result extend_lemma2(const BipartiteGraph& g, const CycleWitness& c, int x, int y);

}  // namespace bramsey
