#pragma once

// Test-only oracles. These deliberately avoid the library's verifier and
// propagator so they can check them.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pbtd/pbtd.hpp"

namespace pbtd::testing {

using RawGrid = std::vector<std::vector<std::pair<int, int>>>;

inline RawGrid raw(const PBTDesign& t) {
  RawGrid g(static_cast<std::size_t>(t.rows()));
  for (int r = 0; r < t.rows(); ++r)
    for (int c = 0; c < t.cols(); ++c) g[static_cast<std::size_t>(r)].emplace_back(t(r, c).lo(), t(r, c).hi());
  return g;
}

// Direct transcription of the four conditions plus pair distinctness.
inline bool naive_is_pbtd(const RawGrid& g, int n) {
  const int v = 2 * n;
  const int cols = 2 * n - 1;
  std::set<std::pair<int, int>> seen;
  for (const auto& row : g) {
    for (auto [a, b] : row) {
      if (a == b || a < 0 || b < 0 || a >= v || b >= v) return false;
      if (!seen.insert({std::min(a, b), std::max(a, b)}).second) return false;
    }
  }
  for (int c = 0; c < cols; ++c) {
    for (int e = 0; e < v; ++e) {
      int k = 0;
      for (int r = 0; r < n; ++r) k += (g[r][c].first == e) + (g[r][c].second == e);
      if (k != 1) return false;
    }
  }
  for (int r = 0; r < n; ++r) {
    for (int e = 0; e < v; ++e) {
      int all = 0;
      int first = 0;
      int last = 0;
      for (int c = 0; c < cols; ++c) {
        int hit = (g[r][c].first == e) + (g[r][c].second == e);
        all += hit;
        if (c < n) first += hit;
        if (c >= n - 1) last += hit;
      }
      if (all > 2 || first == 0 || last == 0) return false;
    }
  }
  return true;
}

// Counts PBTD(n) by placing every arrangement of all pairs into the cells.
inline std::size_t brute_force_count(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 2 * n; ++a)
    for (int b = a + 1; b < 2 * n; ++b) pairs.emplace_back(a, b);
  std::sort(pairs.begin(), pairs.end());
  const int cols = 2 * n - 1;
  std::size_t count = 0;
  do {
    RawGrid g(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < cols; ++c) g[r].push_back(pairs[static_cast<std::size_t>(r * cols + c)]);
    count += naive_is_pbtd(g, n);
  } while (std::next_permutation(pairs.begin(), pairs.end()));
  return count;
}

// All ways to write a perfect matching of `elements` (from the allowed pairs)
// into the n rows of one column.
inline void row_assigned_matchings(const std::vector<int>& elements, const std::set<std::pair<int, int>>& allowed,
                                   std::vector<std::vector<std::pair<int, int>>>& out) {
  std::vector<std::pair<int, int>> matching;
  std::function<void(std::vector<int>)> rec = [&](std::vector<int> rest) {
    if (rest.empty()) {
      auto m = matching;
      std::sort(m.begin(), m.end());
      do out.push_back(m);
      while (std::next_permutation(m.begin(), m.end()));
      return;
    }
    int a = rest.front();
    for (std::size_t i = 1; i < rest.size(); ++i) {
      std::pair<int, int> p{a, rest[i]};
      if (!allowed.count(p)) continue;
      std::vector<int> next;
      for (std::size_t j = 1; j < rest.size(); ++j)
        if (j != i) next.push_back(rest[j]);
      matching.push_back(p);
      rec(next);
      matching.pop_back();
    }
  };
  rec(elements);
}

// No element more than twice in any row, ignoring empty cells.
inline bool rows_within_cap(const RawGrid& g, int v) {
  for (const auto& row : g) {
    std::vector<int> k(static_cast<std::size_t>(v), 0);
    for (auto [a, b] : row) {
      if (a < 0) continue;
      if (++k[static_cast<std::size_t>(a)] > 2 || ++k[static_cast<std::size_t>(b)] > 2) return false;
    }
  }
  return true;
}

// Counts completions of the columns listed in `open_cols`, given fixed columns
// in `base`, by choosing each open column as a row-assigned perfect matching
// over unused pairs. Partial grids are only cut on the at-most-twice row rule;
// the full check runs on complete grids.
inline std::size_t column_matching_count(RawGrid base, int n, const std::vector<int>& open_cols) {
  const int v = 2 * n;
  std::set<std::pair<int, int>> unused;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) unused.insert({a, b});
  for (const auto& row : base)
    for (auto p : row)
      if (p.first >= 0) unused.erase(p);
  std::vector<int> elements(static_cast<std::size_t>(v));
  std::iota(elements.begin(), elements.end(), 0);
  std::size_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == open_cols.size()) {
      count += naive_is_pbtd(base, n);
      return;
    }
    std::vector<std::vector<std::pair<int, int>>> options;
    row_assigned_matchings(elements, unused, options);
    const int c = open_cols[k];
    for (const auto& m : options) {
      for (int r = 0; r < n; ++r) {
        base[r][c] = m[static_cast<std::size_t>(r)];
        unused.erase(m[static_cast<std::size_t>(r)]);
      }
      if (rows_within_cap(base, v)) rec(k + 1);
      for (int r = 0; r < n; ++r) unused.insert(m[static_cast<std::size_t>(r)]);
    }
    for (int r = 0; r < n; ++r) base[r][c] = {-1, -1};
  };
  rec(0);
  return count;
}

// Center-fixed PBTD(n) count via the column-matching oracle.
inline std::size_t center_fixed_count(int n) {
  RawGrid base(static_cast<std::size_t>(n), std::vector<std::pair<int, int>>(static_cast<std::size_t>(2 * n - 1), {-1, -1}));
  std::vector<int> open;
  for (int c = 0; c < 2 * n - 1; ++c) {
    if (c == n - 1) {
      for (int r = 0; r < n; ++r) base[r][c] = {2 * r, 2 * r + 1};
    } else {
      open.push_back(c);
    }
  }
  return column_matching_count(base, n, open);
}

// Random pair different from `avoid`.
inline UnorderedPair random_other_pair(std::mt19937& rng, int v, const UnorderedPair& avoid) {
  std::uniform_int_distribution<int> pick(0, pair_count(v) - 1);
  while (true) {
    UnorderedPair p = UnorderedPair::from_index(pick(rng));
    if (p != avoid) return p;
  }
}

inline PBTDesign mutate_cell(const PBTDesign& t, std::mt19937& rng) {
  std::uniform_int_distribution<int> row(0, t.rows() - 1);
  std::uniform_int_distribution<int> col(0, t.cols() - 1);
  PairGrid g = t.cells();
  int r = row(rng);
  int c = col(rng);
  g(r, c) = random_other_pair(rng, t.elements(), *g(r, c));
  return PBTDesign(t.n(), std::move(g));
}

inline Permutation random_permutation(std::mt19937& rng, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

inline IsomorphismOp random_op(std::mt19937& rng, int n) {
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0: return ElementPerm{random_permutation(rng, 2 * n)};
    case 1: return RowPerm{random_permutation(rng, n)};
    case 2: return LeftColPerm{random_permutation(rng, n - 1)};
    case 3: return RightColPerm{random_permutation(rng, n - 1)};
    default: return SwapHalves{};
  }
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"f1", "f2", "f3"};
  return names;
}

}  // namespace pbtd::testing
