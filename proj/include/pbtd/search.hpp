#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "pbtd/design.hpp"
#include "pbtd/orbit_template.hpp"
#include "pbtd/symmetry.hpp"
#include "pbtd/verifier.hpp"

namespace pbtd {

// Incremental constraint state for filling an n x (2n-1) grid cell by cell.
// Tracks per-column element masks (C1), per-row masks over the first n and
// last n columns (C3, C4; C2 follows from these) and used pairs (C0).
class Propagator {
 public:
  explicit Propagator(int n)
      : n_(n),
        cols_(2 * n - 1),
        all_(universe_mask(2 * n)),
        grid_(n, 2 * n - 1),
        col_(static_cast<std::size_t>(2 * n - 1), 0),
        left_(static_cast<std::size_t>(n), 0),
        right_(static_cast<std::size_t>(n), 0),
        partner_(static_cast<std::size_t>(2 * n), 0) {
    if (n < 1 || n > kMaxSide) throw Error(ErrorKind::Shape, "side outside [1, 32]");
  }

  int n() const noexcept { return n_; }
  int center() const noexcept { return n_ - 1; }
  const PairGrid& grid() const noexcept { return grid_; }
  bool is_open(int r, int c) const { return !grid_(r, c).has_value(); }

  // Elements that may still enter cell (r, c) without breaking C1/C3/C4.
  ElementMask allowed(int r, int c) const {
    ElementMask m = all_ & ~col_[static_cast<std::size_t>(c)];
    if (c <= center()) m &= ~left_[static_cast<std::size_t>(r)];
    if (c >= center()) m &= ~right_[static_cast<std::size_t>(r)];
    return m;
  }

  bool pair_used(int a, int b) const { return (partner_[static_cast<std::size_t>(a)] >> b) & 1U; }

  bool can_place(int r, int c, const UnorderedPair& p) const {
    if (!is_open(r, c) || p.hi() >= 2 * n_) return false;
    ElementMask bits = p.mask();
    return (allowed(r, c) & bits) == bits && !pair_used(p.lo(), p.hi());
  }

  void place(int r, int c, const UnorderedPair& p) {
    ElementMask bits = p.mask();
    col_[static_cast<std::size_t>(c)] |= bits;
    if (c <= center()) left_[static_cast<std::size_t>(r)] |= bits;
    if (c >= center()) right_[static_cast<std::size_t>(r)] |= bits;
    partner_[static_cast<std::size_t>(p.lo())] |= element_bit(p.hi());
    partner_[static_cast<std::size_t>(p.hi())] |= element_bit(p.lo());
    grid_(r, c) = p;
  }

  void remove(int r, int c) {
    const UnorderedPair p = *grid_(r, c);
    ElementMask bits = p.mask();
    col_[static_cast<std::size_t>(c)] &= ~bits;
    if (c <= center()) left_[static_cast<std::size_t>(r)] &= ~bits;
    if (c >= center()) right_[static_cast<std::size_t>(r)] &= ~bits;
    partner_[static_cast<std::size_t>(p.lo())] &= ~element_bit(p.hi());
    partner_[static_cast<std::size_t>(p.hi())] &= ~element_bit(p.lo());
    grid_(r, c).reset();
  }

  // Elements of allowed(r, c) that still have an unused partner inside it.
  ElementMask usable(int r, int c) const {
    const ElementMask a = allowed(r, c);
    ElementMask out = 0;
    for (ElementMask rest = a; rest; rest &= rest - 1) {
      int e = std::countr_zero(rest);
      if (a & ~partner_[static_cast<std::size_t>(e)] & ~element_bit(e)) out |= element_bit(e);
    }
    return out;
  }

  // Forward check: every open cell has a candidate pair, and every element
  // missing from a column or row half can still reach an open cell there.
  bool feasible() const {
    std::vector<ElementMask> use(static_cast<std::size_t>(n_ * cols_), 0);
    for (int r = 0; r < n_; ++r) {
      for (int c = 0; c < cols_; ++c) {
        if (!is_open(r, c)) continue;
        ElementMask u = usable(r, c);
        if (!u) return false;
        use[static_cast<std::size_t>(r * cols_ + c)] = u;
      }
    }
    for (int c = 0; c < cols_; ++c) {
      ElementMask cover = 0;
      for (int r = 0; r < n_; ++r) cover |= use[static_cast<std::size_t>(r * cols_ + c)];
      if ((all_ & ~col_[static_cast<std::size_t>(c)]) & ~cover) return false;
    }
    for (int r = 0; r < n_; ++r) {
      ElementMask lcover = 0;
      ElementMask rcover = 0;
      for (int c = 0; c <= center(); ++c) lcover |= use[static_cast<std::size_t>(r * cols_ + c)];
      for (int c = center(); c < cols_; ++c) rcover |= use[static_cast<std::size_t>(r * cols_ + c)];
      if ((all_ & ~left_[static_cast<std::size_t>(r)]) & ~lcover) return false;
      if ((all_ & ~right_[static_cast<std::size_t>(r)]) & ~rcover) return false;
    }
    return true;
  }

 private:
  int n_;
  int cols_;
  ElementMask all_;
  PairGrid grid_;
  std::vector<ElementMask> col_;
  std::vector<ElementMask> left_;
  std::vector<ElementMask> right_;
  std::vector<ElementMask> partner_;
};

enum class SearchMode { Full, Template, Mate };

inline std::string_view to_string(SearchMode m) {
  switch (m) {
    case SearchMode::Full: return "full";
    case SearchMode::Template: return "template";
    case SearchMode::Mate: return "mate";
  }
  return "?";
}

using Prefix = std::vector<UnorderedPair>;

struct SearchConfig {
  int n = 1;
  SearchMode mode = SearchMode::Full;
  std::optional<TemplatePair> templates;  // Template mode: left and right half templates
  std::optional<HowellGrid> fixed_left;   // Mate mode: (T^L | T^C)
  std::size_t limit = 1;
  std::uint64_t node_budget = 1'000'000'000;
  std::optional<std::chrono::milliseconds> time_budget;
  std::uint64_t seed = 0;  // 0 keeps lexicographic value order
  bool symmetry_break = true;
  int jobs = 1;
  int split_depth = 0;          // subtrees are cut at this many assigned steps
  std::vector<Prefix> resume;   // explore exactly these subtrees (from a checkpoint)
  std::uint64_t progress_interval = 10'000'000;
  std::function<void(std::uint64_t nodes)> progress;
};

enum class SearchStatus { Exhausted, LimitReached, BudgetExhausted };

inline std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::LimitReached: return "limit-reached";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

struct SearchOutcome {
  std::vector<PBTDesign> solutions;
  SearchStatus status = SearchStatus::Exhausted;
  bool exhausted = false;  // the whole (symmetry-reduced) space was traversed
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  std::chrono::nanoseconds elapsed{0};
  std::vector<std::string> reductions;  // symmetry reductions that were applied
  std::vector<Prefix> frontier;         // subtrees left unexplored when the budget ran out
};

namespace detail {

// Canonical perfect matchings of the elements outside block 0, one per
// multiset of block-cycle lengths (each >= 2) summing to n-1. Blocks are the
// center pairs {2b, 2b+1}; a cycle over blocks b_1..b_k uses the pairs
// {2b_i+1, 2b_{i+1}} (indices mod k). Pairs are returned sorted by lo.
inline std::vector<std::vector<UnorderedPair>> row0_left_patterns(int n) {
  std::vector<std::vector<UnorderedPair>> out;
  std::vector<int> parts;
  auto emit = [&] {
    std::vector<UnorderedPair> m;
    int block = 1;
    for (int len : parts) {
      for (int i = 0; i < len; ++i) {
        int from = block + i;
        int to = block + (i + 1) % len;
        m.emplace_back(2 * from + 1, 2 * to);
      }
      block += len;
    }
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
  };
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  if (n >= 2) rec(rec, n - 1, 2);
  return out;
}

struct Target {
  int row;
  int col;
  Permutation map;  // generator value -> cell value
  Permutation inverse;
  bool identity;
};

struct Step {
  std::vector<Target> targets;
  int pattern_column = -1;   // row-0 left cell constrained to the canonical patterns
  int ordered_after = -1;    // row-0 cell whose lo must be smaller than this one's
};

struct Plan {
  int n = 1;
  std::vector<std::tuple<int, int, UnorderedPair>> prefilled;
  std::vector<Step> steps;
  std::vector<std::vector<UnorderedPair>> patterns;
  std::vector<std::string> reductions;
  std::vector<std::vector<std::uint32_t>> priority;  // per step, per pair index
};

inline std::tuple<int, int, int> cell_order_key(int n, int r, int c) {
  if (c == n - 1) return {0, 0, r};
  if (c < n - 1) return {1, c, r};
  return {2, c, r};
}

inline Plan make_plan(const SearchConfig& cfg) {
  const int n = cfg.n;
  if (n < 1 || n > kMaxSide) throw Error(ErrorKind::Precondition, "side outside [1, 32]");
  if (cfg.limit < 1 || cfg.node_budget < 1) throw Error(ErrorKind::Precondition, "limit and node budget must be >= 1");
  Plan plan;
  plan.n = n;
  const int v = 2 * n;
  const int center = n - 1;
  const Permutation id = Permutation::identity(v);

  bool center_fixed = cfg.symmetry_break || cfg.mode == SearchMode::Mate;
  if (cfg.mode == SearchMode::Mate) {
    if (!cfg.fixed_left) throw Error(ErrorKind::Precondition, "mate mode needs a fixed left half");
    const HowellGrid& h = *cfg.fixed_left;
    if (h.s() != n || h.v() != v) throw Error(ErrorKind::Precondition, "fixed left half must be H(n, 2n)");
    if (!verify_howell(h).valid()) throw Error(ErrorKind::Precondition, "fixed left half is not a Howell design");
    if (!has_canonical_center(h.cells(), n)) {
      throw Error(ErrorKind::Precondition, "fixed left half must end in the canonical center column");
    }
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n - 1; ++c) plan.prefilled.emplace_back(r, c, *h(r, c));
  }
  if (center_fixed) {
    for (int r = 0; r < n; ++r) plan.prefilled.emplace_back(r, center, UnorderedPair(2 * r, 2 * r + 1));
    plan.reductions.push_back("center column fixed to {0,1},{2,3},...,{2n-2,2n-1} (element relabeling)");
  }

  auto is_prefilled = [&plan](int r, int c) {
    for (const auto& [pr, pc, _] : plan.prefilled)
      if (pr == r && pc == c) return true;
    return false;
  };

  if (cfg.mode == SearchMode::Template) {
    if (!cfg.templates) throw Error(ErrorKind::Precondition, "template mode needs templates");
    const auto& [lt, rt] = *cfg.templates;
    for (const OrbitTemplate* t : {&lt, &rt}) {
      if (t->rows() != n || t->cols() != n - 1 || t->elements() != v) {
        throw Error(ErrorKind::Precondition, "template shape must be n x (n-1) over 2n elements");
      }
    }
    // Generators of the right template are renumbered after the left ones.
    std::map<int, std::vector<std::tuple<int, int, int, const OrbitTemplate*>>> gens;
    int offset = 0;
    for (int g : lt.generators()) offset = std::max(offset, g + 1);
    for (int side = 0; side < 2; ++side) {
      const OrbitTemplate& t = side == 0 ? lt : rt;
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n - 1; ++c) {
          const Slot& s = t.slots()(r, c);
          int col = side == 0 ? c : n + c;
          int k = s.kind == Slot::Kind::Free ? 0 : s.exponent;
          gens[s.generator + side * offset].emplace_back(r, col, k, &t);
        }
      }
    }
    for (auto& [g, slots] : gens) {
      Step step;
      for (const auto& [r, c, k, t] : slots) {
        Permutation m = t->pi().pow(k);
        step.targets.push_back({r, c, m, m.inverse(), m.is_identity()});
      }
      std::sort(step.targets.begin(), step.targets.end(), [n](const Target& a, const Target& b) {
        return cell_order_key(n, a.row, a.col) < cell_order_key(n, b.row, b.col);
      });
      plan.steps.push_back(std::move(step));
    }
    if (!center_fixed) {
      for (int r = 0; r < n; ++r) plan.steps.push_back({{{r, center, id, id, true}}});
    }
    std::stable_sort(plan.steps.begin(), plan.steps.end(), [n](const Step& a, const Step& b) {
      return cell_order_key(n, a.targets.front().row, a.targets.front().col) <
             cell_order_key(n, b.targets.front().row, b.targets.front().col);
    });
  } else {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < 2 * n - 1; ++c)
        if (!is_prefilled(r, c)) plan.steps.push_back({{{r, c, id, id, true}}});
    std::sort(plan.steps.begin(), plan.steps.end(), [n](const Step& a, const Step& b) {
      return cell_order_key(n, a.targets.front().row, a.targets.front().col) <
             cell_order_key(n, b.targets.front().row, b.targets.front().col);
    });
  }

  if (cfg.symmetry_break && cfg.mode == SearchMode::Full && n >= 2) {
    plan.patterns = row0_left_patterns(n);
    // Row-0 left cells move to the front, right after the fixed center.
    std::stable_partition(plan.steps.begin(), plan.steps.end(), [center](const Step& s) {
      return s.targets.front().row == 0 && s.targets.front().col < center;
    });
    for (auto& s : plan.steps)
      if (s.targets.front().row == 0 && s.targets.front().col < center) s.pattern_column = s.targets.front().col;
    plan.reductions.push_back(
        "row 0 left cells fixed to a canonical block-cycle matching (row permutation with matching block "
        "relabeling, plus swaps inside center pairs)");
    plan.reductions.push_back("left columns ordered by the smaller element of their row-0 cell (left column permutation)");
  }
  if (cfg.symmetry_break && cfg.mode != SearchMode::Template && n >= 3) {
    for (auto& s : plan.steps) {
      const Target& t = s.targets.front();
      if (t.row == 0 && t.col > n) s.ordered_after = t.col - 1;
    }
    plan.reductions.push_back(
        "right columns ordered by the smaller element of their row-0 cell (right column permutation)");
  }

  if (cfg.seed != 0) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::uint32_t> ranks(static_cast<std::size_t>(pair_count(v)));
    for (std::size_t s = 0; s < plan.steps.size(); ++s) {
      std::iota(ranks.begin(), ranks.end(), 0U);
      std::shuffle(ranks.begin(), ranks.end(), rng);
      plan.priority.push_back(ranks);
    }
  }
  return plan;
}

// Shared counters for one search run (possibly across threads).
struct RunState {
  const SearchConfig* cfg = nullptr;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> prunes{0};
  std::atomic<std::size_t> found{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  std::atomic<bool> limit_hit{false};
  std::chrono::steady_clock::time_point start;
  std::mutex progress_mutex;
};

class Worker {
 public:
  Worker(const Plan& plan, RunState& run) : plan_(plan), run_(run), prop_(plan.n) {
    for (const auto& [r, c, p] : plan.prefilled) {
      if (!prop_.can_place(r, c, p)) throw Error(ErrorKind::Precondition, "fixed cells are inconsistent");
      prop_.place(r, c, p);
    }
    values_.reserve(plan.steps.size());
  }

  // Places a step's value on all its targets; false (with nothing placed) on conflict.
  bool apply_step(std::size_t depth, const UnorderedPair& x) {
    const Step& step = plan_.steps[depth];
    std::size_t placed = 0;
    for (const Target& t : step.targets) {
      UnorderedPair y = t.identity ? x : apply(t.map, x);
      if (!prop_.can_place(t.row, t.col, y)) break;
      prop_.place(t.row, t.col, y);
      ++placed;
    }
    if (placed == step.targets.size()) {
      values_.push_back(x);
      return true;
    }
    for (std::size_t k = 0; k < placed; ++k) prop_.remove(step.targets[k].row, step.targets[k].col);
    return false;
  }

  void undo_step(std::size_t depth) {
    for (const Target& t : plan_.steps[depth].targets) prop_.remove(t.row, t.col);
    values_.pop_back();
  }

  // Replays a subtree prefix without counting nodes.
  bool enter(const Prefix& prefix) {
    interrupted_ = false;
    if (prefix.size() > plan_.steps.size()) return false;
    for (std::size_t d = 0; d < prefix.size(); ++d) {
      if (!apply_step(d, prefix[d])) {
        while (!values_.empty()) undo_step(values_.size() - 1);
        return false;
      }
    }
    return true;
  }

  // True when the last dfs returned early (stop flag, limit or budget).
  bool interrupted() const noexcept { return interrupted_; }

  void leave() {
    while (!values_.empty()) undo_step(values_.size() - 1);
  }

  // Depth-first search below the current depth. Collects prefixes instead of
  // descending when cut_depth is reached.
  void dfs(std::vector<PBTDesign>& solutions, std::size_t cut_depth, std::vector<Prefix>* cuts) {
    const std::size_t depth = values_.size();
    if (depth == plan_.steps.size() || (cuts && depth == cut_depth)) {
      if (cuts) {
        cuts->push_back(values_);
        return;
      }
      PBTDesign t(plan_.n, prop_.grid());
      if (!verify_pbtd(t).valid()) throw std::logic_error("search produced a design that fails verification");
      solutions.push_back(std::move(t));
      run_.found.fetch_add(1);
      return;
    }
    for (const UnorderedPair& x : candidates(depth)) {
      if (run_.stop.load(std::memory_order_relaxed)) {
        interrupted_ = true;
        return;
      }
      if (!cuts && run_.found.load(std::memory_order_relaxed) >= run_.cfg->limit) {
        run_.limit_hit = true;
        run_.stop = true;
        interrupted_ = true;
        return;
      }
      if (!count_node()) {
        interrupted_ = true;
        return;
      }
      if (!apply_step(depth, x)) continue;
      if (!prop_.feasible()) {
        run_.prunes.fetch_add(1, std::memory_order_relaxed);
        undo_step(depth);
        continue;
      }
      dfs(solutions, cut_depth, cuts);
      undo_step(depth);
    }
  }

 private:
  bool count_node() {
    std::uint64_t k = run_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    const SearchConfig& cfg = *run_.cfg;
    if (k > cfg.node_budget) {
      run_.budget_hit = true;
      run_.stop = true;
      return false;
    }
    if (cfg.time_budget && (k & 1023U) == 0 &&
        std::chrono::steady_clock::now() - run_.start > *cfg.time_budget) {
      run_.budget_hit = true;
      run_.stop = true;
      return false;
    }
    if (cfg.progress && cfg.progress_interval && k % cfg.progress_interval == 0) {
      std::lock_guard lock(run_.progress_mutex);
      cfg.progress(k);
    }
    return true;
  }

  std::vector<UnorderedPair> candidates(std::size_t depth) const {
    const Step& step = plan_.steps[depth];
    const Target& t0 = step.targets.front();
    std::vector<UnorderedPair> out;
    const ElementMask a = prop_.allowed(t0.row, t0.col);
    for (ElementMask rest = a; rest; rest &= rest - 1) {
      int lo = std::countr_zero(rest);
      for (ElementMask hi_set = a & (rest & (rest - 1)); hi_set; hi_set &= hi_set - 1) {
        int hi = std::countr_zero(hi_set);
        if (prop_.pair_used(lo, hi)) continue;
        UnorderedPair y(lo, hi);
        out.push_back(t0.identity ? y : apply(t0.inverse, y));
      }
    }
    if (step.pattern_column >= 0) {
      std::erase_if(out, [&](const UnorderedPair& x) {
        for (const auto& pat : plan_.patterns) {
          if (pat[static_cast<std::size_t>(step.pattern_column)] != x) continue;
          bool consistent = true;
          for (int c = 0; c < step.pattern_column && consistent; ++c) {
            consistent = prop_.grid()(0, c) == Cell(pat[static_cast<std::size_t>(c)]);
          }
          if (consistent) return false;
        }
        return true;
      });
    }
    if (step.ordered_after >= 0) {
      const Cell& prev = prop_.grid()(0, step.ordered_after);
      if (prev) std::erase_if(out, [&](const UnorderedPair& x) { return x.lo() <= prev->lo(); });
    }
    if (plan_.priority.empty()) {
      std::sort(out.begin(), out.end());
    } else {
      const auto& prio = plan_.priority[depth];
      std::sort(out.begin(), out.end(), [&prio](const UnorderedPair& x, const UnorderedPair& y) {
        return prio[static_cast<std::size_t>(x.index())] < prio[static_cast<std::size_t>(y.index())];
      });
    }
    return out;
  }

  const Plan& plan_;
  RunState& run_;
  Propagator prop_;
  Prefix values_;
  bool interrupted_ = false;
};

}  // namespace detail

inline SearchOutcome search_pbtd(const SearchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  detail::Plan plan = detail::make_plan(cfg);
  detail::RunState run;
  run.cfg = &cfg;
  run.start = start;

  SearchOutcome outcome;
  outcome.reductions = plan.reductions;

  std::vector<Prefix> subtrees;
  if (!cfg.resume.empty()) {
    subtrees = cfg.resume;
  } else if (cfg.split_depth > 0) {
    detail::Worker splitter(plan, run);
    std::vector<PBTDesign> unused;
    splitter.dfs(unused, static_cast<std::size_t>(cfg.split_depth), &subtrees);
    if (run.budget_hit) subtrees = {Prefix{}};
  } else {
    subtrees.push_back({});
  }

  const std::size_t count = subtrees.size();
  std::vector<std::vector<PBTDesign>> results(count);
  std::vector<char> completed(count, 0);
  auto explore = [&](detail::Worker& w, std::size_t i) {
    if (!w.enter(subtrees[i])) {
      throw Error(ErrorKind::Precondition, "checkpoint prefix does not fit this search configuration");
    }
    w.dfs(results[i], 0, nullptr);
    w.leave();
    if (!w.interrupted()) completed[i] = 1;
  };

  if (cfg.jobs <= 1 || count <= 1) {
    detail::Worker w(plan, run);
    for (std::size_t i = 0; i < count && !run.stop && !run.budget_hit; ++i) explore(w, i);
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::vector<std::thread> pool;
    for (int j = 0; j < cfg.jobs; ++j) {
      pool.emplace_back([&] {
        try {
          detail::Worker w(plan, run);
          for (std::size_t i = next++; i < count && !run.stop; i = next++) explore(w, i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          run.stop = true;
        }
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  for (std::size_t i = 0; i < count; ++i) {
    for (auto& s : results[i]) {
      if (outcome.solutions.size() < cfg.limit) outcome.solutions.push_back(std::move(s));
    }
    if (!completed[i]) outcome.frontier.push_back(subtrees[i]);
  }
  outcome.nodes = run.nodes.load();
  if (outcome.nodes > cfg.node_budget) outcome.nodes = cfg.node_budget;
  outcome.prunes = run.prunes.load();
  if (run.budget_hit) {
    outcome.status = SearchStatus::BudgetExhausted;
  } else if (run.limit_hit) {
    outcome.status = SearchStatus::LimitReached;
  } else {
    outcome.status = SearchStatus::Exhausted;
  }
  outcome.exhausted = outcome.status == SearchStatus::Exhausted;
  if (outcome.status != SearchStatus::BudgetExhausted) outcome.frontier.clear();
  outcome.elapsed = std::chrono::steady_clock::now() - start;
  return outcome;
}

enum class Existence { Nonexistent, Exists, Inconclusive };

inline std::string_view to_string(Existence e) {
  switch (e) {
    case Existence::Nonexistent: return "NONEXISTENT";
    case Existence::Exists: return "EXISTS";
    case Existence::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

struct NonexistenceResult {
  Existence verdict = Existence::Inconclusive;
  std::optional<PBTDesign> witness;
  SearchOutcome outcome;
};

// Full search with the proven reductions only; "nonexistent" requires an
// exhausted traversal with no solution.
inline NonexistenceResult prove_nonexistence(int n, std::uint64_t node_budget,
                                             std::optional<std::chrono::milliseconds> time_budget = std::nullopt) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.mode = SearchMode::Full;
  cfg.symmetry_break = true;
  cfg.limit = 1;
  cfg.node_budget = node_budget;
  cfg.time_budget = time_budget;
  NonexistenceResult res;
  res.outcome = search_pbtd(cfg);
  if (!res.outcome.solutions.empty()) {
    res.verdict = Existence::Exists;
    res.witness = res.outcome.solutions.front();
  } else if (res.outcome.exhausted) {
    res.verdict = Existence::Nonexistent;
  }
  return res;
}

// Right halves completing a fixed left half; solutions are the assembled designs.
inline SearchOutcome search_mate(const HowellGrid& left, SearchConfig cfg) {
  cfg.n = left.s();
  cfg.mode = SearchMode::Mate;
  cfg.fixed_left = left;
  return search_pbtd(cfg);
}

enum class ReplayScope { Full, Mate };

struct ReplayReport {
  std::size_t placements = 0;
  std::size_t rejected = 0;  // placement refused by the local checks
  std::size_t prunes = 0;    // forward check failed after placement

  bool clean() const noexcept { return rejected == 0 && prunes == 0; }
};

// Feeds a known design through the propagator in search cell order (center,
// then left columns, then right columns, each top to bottom). In Mate scope
// the left half and center are fixed first and only right cells are replayed.
inline ReplayReport replay_design(const PBTDesign& t, ReplayScope scope) {
  const int n = t.n();
  Propagator prop(n);
  ReplayReport rep;
  std::vector<std::pair<int, int>> order;
  for (int r = 0; r < n; ++r) order.emplace_back(r, n - 1);
  for (int c = 0; c < n - 1; ++c)
    for (int r = 0; r < n; ++r) order.emplace_back(r, c);
  std::size_t fixed = 0;
  if (scope == ReplayScope::Mate) {
    for (const auto& [r, c] : order) prop.place(r, c, t(r, c));
    fixed = order.size();
  }
  for (int c = n; c < 2 * n - 1; ++c)
    for (int r = 0; r < n; ++r) order.emplace_back(r, c);
  for (std::size_t k = fixed; k < order.size(); ++k) {
    auto [r, c] = order[k];
    ++rep.placements;
    if (!prop.can_place(r, c, t(r, c))) {
      ++rep.rejected;
      continue;
    }
    prop.place(r, c, t(r, c));
    if (!prop.feasible()) ++rep.prunes;
  }
  return rep;
}

}  // namespace pbtd
