#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "bramsey/bigraph.hpp"
#include "bramsey/constructions.hpp"

namespace bramsey {

/// Decision instance: does every 2-coloring of K_{b,b} contain a red cycle of
/// half-length red_k or a blue cycle of half-length blue_k?
struct RamseyQuery {
  int board = 0;    // b
  int red_k = 0;    // m
  int blue_k = 0;   // n
};

enum class Verdict { holds, counterexample, timeout };

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes_red = 0;
  std::uint64_t prunes_blue = 0;
  std::uint64_t prunes_sym = 0;
  std::int64_t elapsed_ms = 0;
  int workers = 1;
  bool deterministic = false;
  bool resource_exhausted = false;
};

struct SearchOutcome {
  Verdict verdict = Verdict::timeout;
  std::optional<TwoColoring> witness;  // present iff counterexample
  SearchStats stats;
};

struct DecideOptions {
  std::chrono::milliseconds budget{std::chrono::minutes{5}};
  int workers = 1;
  /// All subtrees run to completion and the least witness in edge-assignment
  /// order (red before blue, row-major edges) is returned, independent of the
  /// worker count.
  bool deterministic = false;
  /// Try the known extremal colorings before searching; a board no larger
  /// than the certificate board is an immediate counterexample.
  bool use_seeded = true;
};

/// Decides the query by branch-and-prune over edge colorings in row-major
/// order. Freshly colored edges are checked for a monochromatic cycle through
/// themselves; partial colorings already containing one are never extended.
/// Symmetry is broken by a partial orderly rule over row/column permutations
/// (and the color swap when red_k == blue_k): sound, cheap, not a full
/// canonical form. A "holds" verdict means the reduced search space closed
/// with no counterexample; "timeout" carries statistics only.
SearchOutcome decide(const RamseyQuery& query, const DecideOptions& options = {});

/// The known extremal coloring embedded on K_{b,b} when b is within its
/// board, revalidated; nullopt for larger boards. Removing vertices never
/// creates cycles, so the restriction stays a counterexample.
std::optional<TwoColoring> seeded_counterexample(const RamseyQuery& query);

struct ComputeBrOutcome {
  /// Smallest board on which the query holds, if determined within bounds.
  std::optional<int> value;
  std::vector<SearchOutcome> per_board;  // outcomes for b = 1, 2, ...
};

/// Scans boards upward until the first completed "holds". Monotone: once the
/// property holds it holds for every larger board, so the scan stops there.
/// A timeout at any board aborts with the partial table.
ComputeBrOutcome compute_br(int m, int n, int max_board, const DecideOptions& options = {});

}  // namespace bramsey
