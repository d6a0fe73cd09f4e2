#include "bramsey/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <new>
#include <stdexcept>
#include <thread>
#include <utility>

#include "bramsey/cycles.hpp"

namespace bramsey {

namespace {

using Clock = std::chrono::steady_clock;

enum class SubtreeResult { closed, found, timed_out, cancelled };

struct SharedControl {
  Clock::time_point deadline;
  std::atomic<bool> cancel{false};
  std::atomic<bool> timed_out{false};
};

// One branch-and-prune searcher over row-major edge assignments, red tried
// before blue. All state is private to the owning thread.
//
// Symmetry breaking (partial orderly rule, sound but not a canonical form):
//   - within every run of columns that all previous rows treat identically,
//     a row must place its red edges first;
//   - rows are non-increasing as bit strings (column 0 most significant);
//   - when the two target lengths coincide, edge (0,0) is fixed red.
// Each rule only discards assignments whose orbit under row/column
// permutations (and the color swap) keeps a surviving representative: the
// greedy row-by-row maximum of any coloring satisfies all three.
struct Searcher {
  int b;
  int red_k;
  int blue_k;
  bool fix_first_red;
  SharedControl* control;

  BipartiteGraph red;
  BipartiteGraph blue;
  // class_mask[r] bit j: columns j-1 and j agree on all rows before r.
  std::array<std::uint64_t, kMaxSide> class_mask{};
  SearchStats stats;
  std::optional<BipartiteGraph> witness;

  Searcher(const RamseyQuery& q, SharedControl* c)
      : b(q.board),
        red_k(q.red_k),
        blue_k(q.blue_k),
        fix_first_red(q.red_k == q.blue_k),
        control(c),
        red(q.board, q.board),
        blue(q.board, q.board) {}

  std::uint64_t columns_above_zero() const {
    const std::uint64_t all = b >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << b) - 1;
    return all & ~std::uint64_t{1};
  }

  void refresh_class_mask(int row) {
    if (row == 0) {
      class_mask[0] = columns_above_zero();
      return;
    }
    std::uint64_t same = 0;
    for (int j = 1; j < b; ++j)
      if (red.adjacent(row - 1, j - 1) == red.adjacent(row - 1, j))
        same |= std::uint64_t{1} << j;
    class_mask[static_cast<std::size_t>(row)] =
        class_mask[static_cast<std::size_t>(row - 1)] & same;
  }

  void rebuild_class_masks(int upto_row) {
    for (int r = 0; r <= upto_row && r < b; ++r) refresh_class_mask(r);
  }

  bool interrupted(SubtreeResult& out) {
    if ((stats.nodes & 0xFFF) != 0) return false;
    if (control->cancel.load(std::memory_order_relaxed)) {
      out = SubtreeResult::cancelled;
      return true;
    }
    if (Clock::now() >= control->deadline) {
      control->timed_out.store(true, std::memory_order_relaxed);
      out = SubtreeResult::timed_out;
      return true;
    }
    return false;
  }

  // Explores positions [pos, stop). With stop == b*b a completed assignment
  // is a counterexample; with stop < b*b the frontier states are collected
  // instead, for distribution across workers.
  SubtreeResult run(int pos, bool tight, int stop,
                    std::vector<std::pair<BipartiteGraph, BipartiteGraph>>* frontier) {
    if (pos == stop) {
      if (frontier != nullptr) {
        frontier->emplace_back(red, blue);
        return SubtreeResult::closed;
      }
      witness = red;
      return SubtreeResult::found;
    }
    const int i = pos / b;
    const int j = pos % b;
    if (j == 0) {
      refresh_class_mask(i);
      tight = i >= 1;
    }

    for (int color = 0; color < 2; ++color) {
      const bool is_red = color == 0;
      if (is_red) {
        if (j > 0 && (class_mask[static_cast<std::size_t>(i)] >> j & 1u) &&
            !red.adjacent(i, j - 1)) {
          ++stats.prunes_sym;  // red after blue inside one column class
          continue;
        }
        if (tight && !red.adjacent(i - 1, j)) {
          ++stats.prunes_sym;  // row would exceed the one above
          continue;
        }
      } else {
        if (fix_first_red && pos == 0) {
          ++stats.prunes_sym;
          continue;
        }
      }

      BipartiteGraph& mine = is_red ? red : blue;
      mine.add_edge(i, j);
      ++stats.nodes;
      SubtreeResult interrupt_result;
      if (interrupted(interrupt_result)) {
        mine.remove_edge(i, j);
        return interrupt_result;
      }
      const int target = is_red ? red_k : blue_k;
      if (find_cycle_through_edge(mine, target, i, j)) {
        (is_red ? stats.prunes_red : stats.prunes_blue) += 1;
        mine.remove_edge(i, j);
        continue;
      }
      const bool next_tight =
          tight && i >= 1 && (red.adjacent(i - 1, j) == is_red);
      const SubtreeResult r = run(pos + 1, next_tight, stop, frontier);
      mine.remove_edge(i, j);
      if (r != SubtreeResult::closed) return r;
    }
    return SubtreeResult::closed;
  }
};

bool is_valid_counterexample(const TwoColoring& coloring, int red_k, int blue_k) {
  return !find_cycle(coloring.red, red_k) && !find_cycle(coloring.blue(), blue_k);
}

void validate_query(const RamseyQuery& q) {
  if (q.board < 1 || q.board > kMaxSide)
    throw std::invalid_argument("board side must be in [1, 64]");
  if (q.red_k < 2 || q.blue_k < 2)
    throw std::invalid_argument("cycle half-lengths must be at least 2");
}

}  // namespace

std::optional<TwoColoring> seeded_counterexample(const RamseyQuery& query) {
  validate_query(query);
  if (query.red_k + query.blue_k - 2 > kMaxSide) return std::nullopt;  // no certificate fits
  const ConstructionReport cert = lower_bound_certificate(query.red_k, query.blue_k);
  if (query.board > cert.coloring.board_left()) return std::nullopt;
  const VertexSet keep_left = VertexSet::range(Side::left, 0, query.board);
  const VertexSet keep_right = VertexSet::range(Side::right, 0, query.board);
  TwoColoring restricted{induced(cert.coloring.red, keep_left, keep_right)};
  if (!is_valid_counterexample(restricted, query.red_k, query.blue_k))
    throw std::logic_error("seeded_counterexample: restriction failed revalidation");
  return restricted;
}

SearchOutcome decide(const RamseyQuery& query, const DecideOptions& options) {
  validate_query(query);
  if (options.budget <= std::chrono::milliseconds::zero())
    throw std::invalid_argument("budget must be positive");
  if (options.workers < 1) throw std::invalid_argument("worker count must be at least 1");

  const auto start = Clock::now();
  SearchOutcome out;
  out.stats.workers = options.workers;
  out.stats.deterministic = options.deterministic;
  auto finish = [&](Verdict v) {
    out.verdict = v;
    out.stats.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return out;
  };

  if (options.use_seeded) {
    if (auto seeded = seeded_counterexample(query)) {
      out.witness = std::move(seeded);
      return finish(Verdict::counterexample);
    }
  }

  try {
    SharedControl control;
    control.deadline = start + options.budget;

    const int total = query.board * query.board;
    const int split = query.board >= 3 ? 2 * query.board : total;

    Searcher generator(query, &control);
    if (split >= total) {
      const SubtreeResult r = generator.run(0, false, total, nullptr);
      out.stats.nodes = generator.stats.nodes;
      out.stats.prunes_red = generator.stats.prunes_red;
      out.stats.prunes_blue = generator.stats.prunes_blue;
      out.stats.prunes_sym = generator.stats.prunes_sym;
      if (r == SubtreeResult::timed_out) return finish(Verdict::timeout);
      if (r == SubtreeResult::found) {
        out.witness = TwoColoring{std::move(*generator.witness)};
        if (!is_valid_counterexample(*out.witness, query.red_k, query.blue_k))
          throw std::logic_error("decide: leaf coloring failed revalidation");
        return finish(Verdict::counterexample);
      }
      return finish(Verdict::holds);
    }

    std::vector<std::pair<BipartiteGraph, BipartiteGraph>> tasks;
    const SubtreeResult gen_result = generator.run(0, false, split, &tasks);
    SearchStats merged = generator.stats;
    if (gen_result == SubtreeResult::timed_out) {
      out.stats = merged;
      out.stats.workers = options.workers;
      out.stats.deterministic = options.deterministic;
      return finish(Verdict::timeout);
    }

    struct TaskResult {
      SubtreeResult result = SubtreeResult::cancelled;
      std::optional<BipartiteGraph> witness;
    };
    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> next_task{0};
    std::mutex merge_mutex;

    auto work = [&]() {
      while (true) {
        const std::size_t t = next_task.fetch_add(1);
        if (t >= tasks.size()) return;
        if (!options.deterministic && control.cancel.load(std::memory_order_relaxed))
          return;
        // Small tasks may finish below the in-search check cadence, so the
        // deadline is also enforced between tasks.
        if (Clock::now() >= control.deadline) {
          control.timed_out.store(true, std::memory_order_relaxed);
          return;
        }
        Searcher searcher(query, &control);
        searcher.red = tasks[t].first;
        searcher.blue = tasks[t].second;
        searcher.rebuild_class_masks(split / query.board);
        const SubtreeResult r = searcher.run(split, true, total, nullptr);
        results[t].result = r;
        if (r == SubtreeResult::found) {
          results[t].witness = std::move(searcher.witness);
          if (!options.deterministic) control.cancel.store(true, std::memory_order_relaxed);
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        merged.nodes += searcher.stats.nodes;
        merged.prunes_red += searcher.stats.prunes_red;
        merged.prunes_blue += searcher.stats.prunes_blue;
        merged.prunes_sym += searcher.stats.prunes_sym;
      }
    };

    const int worker_count =
        static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(options.workers),
                                               std::max<std::size_t>(tasks.size(), 1)));
    if (worker_count <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(worker_count));
      for (int w = 0; w < worker_count; ++w) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }

    out.stats = merged;
    out.stats.workers = options.workers;
    out.stats.deterministic = options.deterministic;

    // Tasks are generated in assignment order, so the first found witness is
    // the least one; deterministic mode ran every task, making the choice
    // independent of scheduling.
    for (auto& tr : results) {
      if (tr.result == SubtreeResult::found) {
        out.witness = TwoColoring{std::move(*tr.witness)};
        if (!is_valid_counterexample(*out.witness, query.red_k, query.blue_k))
          throw std::logic_error("decide: leaf coloring failed revalidation");
        return finish(Verdict::counterexample);
      }
    }
    if (control.timed_out.load() ||
        std::any_of(results.begin(), results.end(), [](const TaskResult& tr) {
          return tr.result == SubtreeResult::timed_out ||
                 tr.result == SubtreeResult::cancelled;
        }))
      return finish(Verdict::timeout);
    return finish(Verdict::holds);
  } catch (const std::bad_alloc&) {
    out.stats.resource_exhausted = true;
    out.witness.reset();
    return finish(Verdict::timeout);
  }
}

ComputeBrOutcome compute_br(int m, int n, int max_board, const DecideOptions& options) {
  if (max_board < 1 || max_board > kMaxSide)
    throw std::invalid_argument("compute_br: max board must be in [1, 64]");
  ComputeBrOutcome out;
  for (int b = 1; b <= max_board; ++b) {
    SearchOutcome outcome = decide(RamseyQuery{b, m, n}, options);
    const Verdict verdict = outcome.verdict;
    out.per_board.push_back(std::move(outcome));
    if (verdict == Verdict::holds) {
      out.value = b;
      return out;
    }
    if (verdict == Verdict::timeout) return out;
  }
  return out;
}

}  // namespace bramsey
