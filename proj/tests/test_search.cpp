#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bramsey/cycles.hpp"
#include "bramsey/search.hpp"
#include "test_util.hpp"

using namespace bramsey;
using test::graph_from_bits;
using test::random_graph;

namespace {

DecideOptions search_only() {
  DecideOptions opt;
  opt.use_seeded = false;
  return opt;
}

bool avoids_both(const BipartiteGraph& red, int m, int n) {
  return !find_cycle(red, m) && !find_cycle(complement(red), n);
}

// Every coloring of K_{b,b}, directly.
bool brute_force_holds(int b, int m, int n) {
  const std::uint64_t total = std::uint64_t{1} << (b * b);
  for (std::uint64_t bits = 0; bits < total; ++bits)
    if (avoids_both(graph_from_bits(b, b, bits), m, n)) return false;
  return true;
}

}  // namespace

TEST_CASE("a 1x1 board fits no cycle at all") {
  const SearchOutcome o = decide(RamseyQuery{1, 2, 2});
  CHECK(o.verdict == Verdict::counterexample);
  REQUIRE(o.witness.has_value());
  CHECK(o.witness->board_left() == 1);
}

TEST_CASE("decide agrees with whole-space enumeration on tiny boards") {
  for (int b = 1; b <= 3; ++b)
    for (int m = 2; m <= 3; ++m)
      for (int n = 2; n <= 3; ++n) {
        CAPTURE(b);
        CAPTURE(m);
        CAPTURE(n);
        const SearchOutcome o = decide(RamseyQuery{b, m, n}, search_only());
        const bool expected = brute_force_holds(b, m, n);
        CHECK(o.verdict == (expected ? Verdict::holds : Verdict::counterexample));
        if (o.witness) CHECK(avoids_both(o.witness->red, m, n));
      }
  // 4x4 board across all half-length pairs that fit on it
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 4; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const SearchOutcome o = decide(RamseyQuery{4, m, n}, search_only());
      const bool expected = brute_force_holds(4, m, n);
      CHECK(o.verdict == (expected ? Verdict::holds : Verdict::counterexample));
    }
}

TEST_CASE("counterexamples below the thresholds") {
  SUBCASE("(4,2) on a 4x4 board") {
    const SearchOutcome o = decide(RamseyQuery{4, 4, 2});
    CHECK(o.verdict == Verdict::counterexample);
    REQUIRE(o.witness.has_value());
    CHECK(avoids_both(o.witness->red, 4, 2));
  }
  SUBCASE("(2,2) on a 4x4 board, searched") {
    const SearchOutcome o = decide(RamseyQuery{4, 2, 2}, search_only());
    CHECK(o.verdict == Verdict::counterexample);
    REQUIRE(o.witness.has_value());
    CHECK(avoids_both(o.witness->red, 2, 2));
  }
}

TEST_CASE("holds at the (2,2) threshold by completed search") {
  const SearchOutcome o = decide(RamseyQuery{5, 2, 2}, search_only());
  CHECK(o.verdict == Verdict::holds);
  CHECK_FALSE(o.witness.has_value());
  CHECK(o.stats.nodes > 0);
}

TEST_CASE("seeded counterexamples embed the known colorings") {
  SUBCASE("restriction of the 7x7 coloring to 6x6") {
    const auto w = seeded_counterexample(RamseyQuery{6, 4, 4});
    REQUIRE(w.has_value());
    CHECK(w->board_left() == 6);
    CHECK(avoids_both(w->red, 4, 4));
  }
  SUBCASE("the full 7x7 coloring") {
    const auto w = seeded_counterexample(RamseyQuery{7, 4, 4});
    REQUIRE(w.has_value());
    CHECK(w->board_left() == 7);
    CHECK(avoids_both(w->red, 4, 4));
  }
  SUBCASE("nothing seeded beyond the construction board") {
    CHECK_FALSE(seeded_counterexample(RamseyQuery{8, 4, 4}).has_value());
  }
}

TEST_CASE("deterministic mode returns the same witness for any worker count") {
  DecideOptions one = search_only();
  one.deterministic = true;
  one.workers = 1;
  DecideOptions four = one;
  four.workers = 4;
  const SearchOutcome a = decide(RamseyQuery{4, 2, 2}, one);
  const SearchOutcome b = decide(RamseyQuery{4, 2, 2}, four);
  REQUIRE(a.verdict == Verdict::counterexample);
  REQUIRE(b.verdict == Verdict::counterexample);
  CHECK(a.witness->red == b.witness->red);

  const SearchOutcome c = decide(RamseyQuery{4, 4, 2}, one);
  const SearchOutcome d = decide(RamseyQuery{4, 4, 2}, four);
  CHECK(c.witness->red == d.witness->red);
}

TEST_CASE("parallel holds verdicts match sequential ones") {
  DecideOptions four = search_only();
  four.workers = 4;
  const SearchOutcome o = decide(RamseyQuery{5, 2, 2}, four);
  CHECK(o.verdict == Verdict::holds);
}

TEST_CASE("a tiny budget reports timeout with stats only") {
  DecideOptions opt = search_only();
  opt.budget = std::chrono::milliseconds{50};
  const SearchOutcome o = decide(RamseyQuery{10, 4, 7}, opt);
  CHECK(o.verdict == Verdict::timeout);
  CHECK_FALSE(o.witness.has_value());
}

TEST_CASE("the values the whole-board search can reach") {
  // Thresholds the search closes quickly, searched without seeding: the
  // (4,2) pair at its threshold board and the (4,4) pair one past its
  // 7x7 extremal coloring.
  CHECK(decide(RamseyQuery{5, 4, 2}, search_only()).verdict == Verdict::holds);
  CHECK(decide(RamseyQuery{7, 4, 4}, search_only()).verdict == Verdict::counterexample);
  CHECK(decide(RamseyQuery{8, 4, 4}, search_only()).verdict == Verdict::holds);
}

TEST_CASE("compute_br lands on the known small values") {
  const ComputeBrOutcome r = compute_br(2, 2, 6);
  REQUIRE(r.value.has_value());
  CHECK(*r.value == 5);
  REQUIRE(r.per_board.size() == 5);
  CHECK(r.per_board[3].verdict == Verdict::counterexample);
  CHECK(r.per_board[4].verdict == Verdict::holds);

  const ComputeBrOutcome r42 = compute_br(4, 2, 6);
  CHECK(r42.value == 5);
  const ComputeBrOutcome r23 = compute_br(2, 3, 6);
  CHECK(r23.value == 5);
  const ComputeBrOutcome r33 = compute_br(3, 3, 7);
  CHECK(r33.value == 6);
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(decide(RamseyQuery{0, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(decide(RamseyQuery{4, 1, 2}), std::invalid_argument);
  DecideOptions opt;
  opt.workers = 0;
  CHECK_THROWS_AS(decide(RamseyQuery{4, 2, 2}, opt), std::invalid_argument);
}

TEST_CASE("targets too long for any certificate still decide") {
  // no construction board fits m + n - 2 > 64; the board is far too small
  // for either cycle anyway, so any coloring is a counterexample
  const SearchOutcome o = decide(RamseyQuery{3, 40, 40});
  CHECK(o.verdict == Verdict::counterexample);
}

TEST_CASE("the largest board is accepted") {
  // the 4-cycle prunes collapse the tree almost immediately, so even the
  // 64x64 board closes; grant a timeout on slow machines but never a
  // counterexample
  DecideOptions opt = search_only();
  opt.budget = std::chrono::seconds{60};
  const SearchOutcome o = decide(RamseyQuery{64, 2, 2}, opt);
  CHECK(o.verdict != Verdict::counterexample);
}

TEST_CASE("holds verdicts persist on larger boards") {
  // completed pairs: once the property holds it must hold one board up
  CHECK(decide(RamseyQuery{5, 2, 2}, search_only()).verdict == Verdict::holds);
  CHECK(decide(RamseyQuery{6, 2, 2}, search_only()).verdict == Verdict::holds);
  CHECK(decide(RamseyQuery{7, 2, 2}, search_only()).verdict == Verdict::holds);
  CHECK(decide(RamseyQuery{6, 3, 3}, search_only()).verdict == Verdict::holds);
  CHECK(decide(RamseyQuery{7, 3, 3}, search_only()).verdict == Verdict::holds);
}

TEST_CASE("deleting a vertex pair never creates a cycle") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const BipartiteGraph red = random_graph(6, 6, rng);
    const int di = static_cast<int>(rng() % 6);
    const int dj = static_cast<int>(rng() % 6);
    std::uint64_t keep_l = 0x3f & ~(std::uint64_t{1} << di);
    std::uint64_t keep_r = 0x3f & ~(std::uint64_t{1} << dj);
    const BipartiteGraph sub =
        induced(red, VertexSet{Side::left, keep_l}, VertexSet{Side::right, keep_r});
    const BipartiteGraph blue = complement(red);
    const BipartiteGraph sub_blue =
        induced(blue, VertexSet{Side::left, keep_l}, VertexSet{Side::right, keep_r});
    for (int k = 2; k <= 5; ++k) {
      if (find_cycle(sub, k)) CHECK(find_cycle(red, k).has_value());
      if (find_cycle(sub_blue, k)) CHECK(find_cycle(blue, k).has_value());
    }
  }
}
