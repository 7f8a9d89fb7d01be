#pragma once

#include <set>
#include <string>
#include <vector>

#include "pbtd/error.hpp"
#include "pbtd/grid.hpp"
#include "pbtd/pair.hpp"
#include "pbtd/permutation.hpp"

namespace pbtd {

using PairGrid = Grid<Cell>;

// A fully occupied n x (2n-1) array of pairs over {0, ..., 2n-1}. Construction
// checks only shape, occupancy and element range; the design conditions are
// the verifier's job.
class PBTDesign {
 public:
  PBTDesign() = default;

  PBTDesign(int n, PairGrid cells) : n_(n), cells_(std::move(cells)) {
    if (n < 1 || n > kMaxSide) throw Error(ErrorKind::Shape, "side " + std::to_string(n) + " outside [1, 32]");
    if (cells_.rows() != n || cells_.cols() != 2 * n - 1) {
      throw Error(ErrorKind::Shape, "expected " + std::to_string(n) + "x" + std::to_string(2 * n - 1) + " cells, got " +
                                        std::to_string(cells_.rows()) + "x" + std::to_string(cells_.cols()));
    }
    for (int r = 0; r < rows(); ++r) {
      for (int c = 0; c < cols(); ++c) {
        const Cell& cell = cells_(r, c);
        if (!cell) throw Error(ErrorKind::Shape, "empty cell in PBTD form");
        if (cell->hi() >= elements()) throw Error(ErrorKind::Range, "element outside V in cell " + to_string(*cell));
      }
    }
  }

  int n() const noexcept { return n_; }
  int rows() const noexcept { return n_; }
  int cols() const noexcept { return 2 * n_ - 1; }
  int elements() const noexcept { return 2 * n_; }
  // Zero-based index of the middle column.
  int center() const noexcept { return n_ - 1; }

  const UnorderedPair& operator()(int r, int c) const { return *cells_(r, c); }
  const PairGrid& cells() const noexcept { return cells_; }

  bool operator==(const PBTDesign&) const = default;

 private:
  int n_ = 0;
  PairGrid cells_;
};

// An s x s array whose cells are empty or hold a pair over {0, ..., v-1}.
class HowellGrid {
 public:
  HowellGrid() = default;

  HowellGrid(int v, PairGrid cells) : v_(v), cells_(std::move(cells)) {
    if (cells_.rows() != cells_.cols()) {
      throw Error(ErrorKind::Shape, "Howell grid must be square, got " + std::to_string(cells_.rows()) + "x" +
                                        std::to_string(cells_.cols()));
    }
    if (v < 2 || v > 64) throw Error(ErrorKind::Shape, "universe size " + std::to_string(v) + " outside [2, 64]");
  }

  int s() const noexcept { return cells_.rows(); }
  int v() const noexcept { return v_; }
  const Cell& operator()(int r, int c) const { return cells_(r, c); }
  const PairGrid& cells() const noexcept { return cells_; }

  bool operator==(const HowellGrid&) const = default;

 private:
  int v_ = 0;
  PairGrid cells_;
};

struct SplitDesign {
  PairGrid left;    // columns 0 .. n-2
  PairGrid center;  // column n-1
  PairGrid right;   // columns n .. 2n-2
};

inline SplitDesign split(const PBTDesign& t) {
  const int n = t.n();
  return {t.cells().column_range(0, n - 1), t.cells().column_range(n - 1, 1), t.cells().column_range(n, n - 1)};
}

inline PairGrid join(const SplitDesign& parts) {
  return concat_columns<Cell>({&parts.left, &parts.center, &parts.right});
}

// (T^L | T^C) as an n x n Howell grid.
inline HowellGrid left_howell(const PBTDesign& t) {
  auto s = split(t);
  return HowellGrid(t.elements(), concat_columns<Cell>({&s.left, &s.center}));
}

// (T^R | T^C) as an n x n Howell grid.
inline HowellGrid right_howell(const PBTDesign& t) {
  auto s = split(t);
  return HowellGrid(t.elements(), concat_columns<Cell>({&s.right, &s.center}));
}

inline std::set<UnorderedPair> pair_set(const PairGrid& g) {
  std::set<UnorderedPair> out;
  for (const Cell& c : g.data())
    if (c) out.insert(*c);
  return out;
}

inline std::size_t occupied_cells(const PairGrid& g) {
  std::size_t k = 0;
  for (const Cell& c : g.data()) k += c.has_value();
  return k;
}

inline UnorderedPair apply(const Permutation& p, const UnorderedPair& pair) {
  return UnorderedPair(p(pair.lo()), p(pair.hi()));
}

// Relabels every element; the permutation must cover every element present.
inline PairGrid apply_element_permutation(const PairGrid& g, const Permutation& p) {
  PairGrid out(g.rows(), g.cols());
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      const Cell& cell = g(r, c);
      if (!cell) continue;
      if (cell->hi() >= p.degree()) throw Error(ErrorKind::DomainMismatch, "permutation degree too small for grid");
      out(r, c) = apply(p, *cell);
    }
  }
  return out;
}

inline PBTDesign apply_element_permutation(const PBTDesign& t, const Permutation& p) {
  if (p.degree() != t.elements()) {
    throw Error(ErrorKind::DomainMismatch, "element permutation of degree " + std::to_string(p.degree()) +
                                               " applied to PBTD(" + std::to_string(t.n()) + ")");
  }
  return PBTDesign(t.n(), apply_element_permutation(t.cells(), p));
}

inline HowellGrid apply_element_permutation(const HowellGrid& h, const Permutation& p) {
  if (p.degree() != h.v()) throw Error(ErrorKind::DomainMismatch, "element permutation degree differs from v");
  return HowellGrid(h.v(), apply_element_permutation(h.cells(), p));
}

// Rebuilds the design whose left half and center come from h1 and whose right
// half is h2's first n-1 columns in direct order.
inline PBTDesign assemble_from_howell_pair(const HowellGrid& h1, const HowellGrid& h2) {
  const int n = h1.s();
  if (h2.s() != n || h1.v() != 2 * n || h2.v() != 2 * n) {
    throw Error(ErrorKind::Shape, "almost disjoint pair must be two H(n, 2n) of equal side");
  }
  for (int r = 0; r < n; ++r) {
    if (h1(r, n - 1) != h2(r, n - 1)) {
      throw Error(ErrorKind::SharedColumnMismatch, "last columns differ in row " + std::to_string(r));
    }
  }
  auto p1 = pair_set(h1.cells());
  auto p2 = pair_set(h2.cells());
  std::size_t common = 0;
  for (const auto& p : p1) common += p2.count(p);
  const auto total = static_cast<std::size_t>(pair_count(2 * n));
  if (common != static_cast<std::size_t>(n) || p1.size() + p2.size() - common != total ||
      occupied_cells(h1.cells()) != p1.size() || occupied_cells(h2.cells()) != p2.size()) {
    throw Error(ErrorKind::AlmostDisjointViolation,
                "pair sets share " + std::to_string(common) + " pairs and cover " +
                    std::to_string(p1.size() + p2.size() - common) + " of " + std::to_string(total));
  }
  SplitDesign parts{h1.cells().column_range(0, n - 1), h1.cells().column_range(n - 1, 1),
                    h2.cells().column_range(0, n - 1)};
  return PBTDesign(n, join(parts));
}

}  // namespace pbtd
