#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbtd/design.hpp"

namespace pbtd {

enum class Condition {
  C0_DistinctPairs,     // all C(2n,2) pairs distinct
  C1_ColumnExact,       // each element exactly once per column
  C2_RowAtMostTwo,      // each element at most twice per row
  C3_FirstHalfCovers,   // first n columns of a row hold all 2n elements
  C4_LastHalfCovers,    // last n columns of a row hold all 2n elements
  H1_CellWellFormed,
  H2_RowColumnExact,
  H3_DistinctPairs,
  SharedColumnMismatch,
  ExcessOverlap,
  CoverageGap,
};

inline std::string_view condition_id(Condition c) {
  switch (c) {
    case Condition::C0_DistinctPairs: return "C0";
    case Condition::C1_ColumnExact: return "C1";
    case Condition::C2_RowAtMostTwo: return "C2";
    case Condition::C3_FirstHalfCovers: return "C3";
    case Condition::C4_LastHalfCovers: return "C4";
    case Condition::H1_CellWellFormed: return "H1";
    case Condition::H2_RowColumnExact: return "H2";
    case Condition::H3_DistinctPairs: return "H3";
    case Condition::SharedColumnMismatch: return "SharedColumnMismatch";
    case Condition::ExcessOverlap: return "ExcessOverlap";
    case Condition::CoverageGap: return "CoverageGap";
  }
  return "?";
}

// Coordinates are zero-based; -1 marks "not applicable".
struct Violation {
  Condition condition;
  int row = -1;
  int column = -1;
  int element = -1;
  std::optional<UnorderedPair> pair;
  std::string note;

  bool operator==(const Violation&) const = default;
};

struct VerificationReport {
  std::string subject;               // "pbtd", "howell", "almost-disjoint", ...
  std::size_t pairs_expected = 0;    // C(2n,2) where applicable
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
  bool has(Condition c) const {
    for (const auto& v : violations)
      if (v.condition == c) return true;
    return false;
  }
  std::size_t count(Condition c) const {
    std::size_t k = 0;
    for (const auto& v : violations) k += v.condition == c;
    return k;
  }

  bool operator==(const VerificationReport&) const = default;
};

namespace detail {

inline void report_duplicates(const PairGrid& g, Condition cond, VerificationReport& rep) {
  std::map<UnorderedPair, std::pair<int, int>> first_seen;
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      const Cell& cell = g(r, c);
      if (!cell) continue;
      auto [it, inserted] = first_seen.emplace(*cell, std::pair{r, c});
      if (!inserted) {
        rep.violations.push_back({cond, r, c, -1, *cell,
                                  "pair repeats the one at row " + std::to_string(it->second.first) + ", column " +
                                      std::to_string(it->second.second)});
      }
    }
  }
}

// Elements of columns [first, last) in row r, counted with multiplicity.
inline std::vector<int> row_counts(const PairGrid& g, int r, int first, int last, int elements) {
  std::vector<int> counts(static_cast<std::size_t>(elements), 0);
  for (int c = first; c < last; ++c) {
    if (const Cell& cell = g(r, c)) {
      if (cell->lo() < elements) ++counts[static_cast<std::size_t>(cell->lo())];
      if (cell->hi() < elements) ++counts[static_cast<std::size_t>(cell->hi())];
    }
  }
  return counts;
}

inline void report_missing(const std::vector<int>& counts, Condition cond, int row, const char* where,
                           VerificationReport& rep) {
  for (std::size_t e = 0; e < counts.size(); ++e) {
    if (counts[e] == 0) {
      rep.violations.push_back({cond, row, -1, static_cast<int>(e), std::nullopt,
                                std::string("element missing from ") + where + " of row"});
    }
  }
}

}  // namespace detail

// Checks conditions C0-C4 on an arbitrary grid that is meant to be a PBTD(n).
inline VerificationReport verify_pbtd(const PairGrid& g, int n) {
  if (n < 1 || g.rows() != n || g.cols() != 2 * n - 1) {
    throw Error(ErrorKind::Shape, "grid is " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                                      ", PBTD(" + std::to_string(n) + ") needs " + std::to_string(n) + "x" +
                                      std::to_string(2 * n - 1));
  }
  const int v = 2 * n;
  VerificationReport rep;
  rep.subject = "pbtd";
  rep.pairs_expected = static_cast<std::size_t>(pair_count(v));
  for (const Cell& cell : g.data()) {
    if (!cell) throw Error(ErrorKind::Shape, "empty cell in PBTD form");
    if (cell->hi() >= v) throw Error(ErrorKind::Range, "element outside V in cell " + to_string(*cell));
  }

  detail::report_duplicates(g, Condition::C0_DistinctPairs, rep);

  for (int c = 0; c < g.cols(); ++c) {
    std::vector<int> counts(static_cast<std::size_t>(v), 0);
    for (int r = 0; r < n; ++r) {
      ++counts[static_cast<std::size_t>(g(r, c)->lo())];
      ++counts[static_cast<std::size_t>(g(r, c)->hi())];
    }
    for (int e = 0; e < v; ++e) {
      int k = counts[static_cast<std::size_t>(e)];
      if (k != 1) {
        rep.violations.push_back({Condition::C1_ColumnExact, -1, c, e, std::nullopt,
                                  "element occurs " + std::to_string(k) + " times in column"});
      }
    }
  }

  for (int r = 0; r < n; ++r) {
    auto whole = detail::row_counts(g, r, 0, g.cols(), v);
    for (int e = 0; e < v; ++e) {
      int k = whole[static_cast<std::size_t>(e)];
      if (k > 2) {
        rep.violations.push_back({Condition::C2_RowAtMostTwo, r, -1, e, std::nullopt,
                                  "element occurs " + std::to_string(k) + " times in row"});
      }
    }
    detail::report_missing(detail::row_counts(g, r, 0, n, v), Condition::C3_FirstHalfCovers, r, "first n columns", rep);
    detail::report_missing(detail::row_counts(g, r, n - 1, g.cols(), v), Condition::C4_LastHalfCovers, r,
                           "last n columns", rep);
  }
  return rep;
}

inline VerificationReport verify_pbtd(const PBTDesign& t) { return verify_pbtd(t.cells(), t.n()); }

// Exactly-once reading of "each element occurs in each row and column".
inline VerificationReport verify_howell(const PairGrid& g, int v) {
  if (g.rows() != g.cols()) throw Error(ErrorKind::Shape, "Howell grid must be square");
  VerificationReport rep;
  rep.subject = "howell";
  const int s = g.rows();
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) {
      const Cell& cell = g(r, c);
      if (cell && cell->hi() >= v) {
        rep.violations.push_back({Condition::H1_CellWellFormed, r, c, cell->hi(), *cell, "element outside V"});
      }
    }
  }
  for (int r = 0; r < s; ++r) {
    auto counts = detail::row_counts(g, r, 0, s, v);
    for (int e = 0; e < v; ++e) {
      int k = counts[static_cast<std::size_t>(e)];
      if (k != 1) {
        rep.violations.push_back({Condition::H2_RowColumnExact, r, -1, e, std::nullopt,
                                  "element occurs " + std::to_string(k) + " times in row"});
      }
    }
  }
  for (int c = 0; c < s; ++c) {
    std::vector<int> counts(static_cast<std::size_t>(v), 0);
    for (int r = 0; r < s; ++r) {
      if (const Cell& cell = g(r, c)) {
        if (cell->lo() < v) ++counts[static_cast<std::size_t>(cell->lo())];
        if (cell->hi() < v) ++counts[static_cast<std::size_t>(cell->hi())];
      }
    }
    for (int e = 0; e < v; ++e) {
      int k = counts[static_cast<std::size_t>(e)];
      if (k != 1) {
        rep.violations.push_back({Condition::H2_RowColumnExact, -1, c, e, std::nullopt,
                                  "element occurs " + std::to_string(k) + " times in column"});
      }
    }
  }
  detail::report_duplicates(g, Condition::H3_DistinctPairs, rep);
  return rep;
}

inline VerificationReport verify_howell(const HowellGrid& h) { return verify_howell(h.cells(), h.v()); }

// Almost disjoint: the pair sets meet exactly in the shared last column and
// together cover every pair of V.
inline VerificationReport check_almost_disjoint(const HowellGrid& h1, const HowellGrid& h2) {
  const int n = h1.s();
  if (h2.s() != n || h1.v() != 2 * n || h2.v() != 2 * n) {
    throw Error(ErrorKind::Shape, "almost disjoint check needs two H(n, 2n) of equal side");
  }
  VerificationReport rep;
  rep.subject = "almost-disjoint";
  rep.pairs_expected = static_cast<std::size_t>(pair_count(2 * n));

  std::set<UnorderedPair> shared;
  for (int r = 0; r < n; ++r) {
    if (h1(r, n - 1) != h2(r, n - 1)) {
      rep.violations.push_back({Condition::SharedColumnMismatch, r, n - 1, -1, h2(r, n - 1),
                                "last columns differ (" + (h1(r, n - 1) ? to_string(*h1(r, n - 1)) : "-") + " vs " +
                                    (h2(r, n - 1) ? to_string(*h2(r, n - 1)) : "-") + ")"});
    } else if (h1(r, n - 1)) {
      shared.insert(*h1(r, n - 1));
    }
  }

  auto p1 = pair_set(h1.cells());
  auto p2 = pair_set(h2.cells());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const Cell& cell = h2(r, c);
      if (cell && p1.count(*cell) && !shared.count(*cell)) {
        rep.violations.push_back({Condition::ExcessOverlap, r, c, -1, *cell, "pair of the second grid also in the first"});
      }
    }
  }
  for (int hi = 1; hi < 2 * n; ++hi) {
    for (int lo = 0; lo < hi; ++lo) {
      UnorderedPair p(lo, hi);
      if (!p1.count(p) && !p2.count(p)) {
        rep.violations.push_back({Condition::CoverageGap, -1, -1, -1, p, "pair covered by neither grid"});
      }
    }
  }
  return rep;
}

// Both routes to validity reported side by side: the direct PBTD conditions and
// the Howell-pair route (two Howell halves plus almost disjointness).
struct SplitEquivalenceReport {
  VerificationReport pbtd_route;
  VerificationReport howell_route;

  bool valid() const noexcept { return pbtd_route.valid() && howell_route.valid(); }
  bool routes_agree() const noexcept { return pbtd_route.valid() == howell_route.valid(); }
};

inline VerificationReport verify_via_howell_pair(const PBTDesign& t) {
  VerificationReport rep;
  rep.subject = "howell-pair";
  rep.pairs_expected = static_cast<std::size_t>(pair_count(t.elements()));
  auto left = left_howell(t);
  auto right = right_howell(t);
  auto append = [&rep](const VerificationReport& r, const char* tag) {
    for (auto v : r.violations) {
      v.note = std::string(tag) + ": " + v.note;
      rep.violations.push_back(std::move(v));
    }
  };
  append(verify_howell(left), "left half");
  append(verify_howell(right), "right half");
  append(check_almost_disjoint(left, right), "pair");
  return rep;
}

inline SplitEquivalenceReport check_split_equivalence(const PBTDesign& t) {
  return {verify_pbtd(t), verify_via_howell_pair(t)};
}

}  // namespace pbtd
