#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pbtd/design.hpp"

namespace pbtd {

// Relabel every element: pair {a,b} becomes {p(a), p(b)}. Degree 2n.
struct ElementPerm {
  Permutation p;
  bool operator==(const ElementPerm&) const = default;
};
// Old row r becomes new row p(r). Degree n.
struct RowPerm {
  Permutation p;
  bool operator==(const RowPerm&) const = default;
};
// Old left column c becomes new left column p(c). Degree n-1.
struct LeftColPerm {
  Permutation p;
  bool operator==(const LeftColPerm&) const = default;
};
// Old right column c (0-based within the right half) becomes right column p(c). Degree n-1.
struct RightColPerm {
  Permutation p;
  bool operator==(const RightColPerm&) const = default;
};
// (T^L T^C T^R) -> (T^R T^C T^L).
struct SwapHalves {
  bool operator==(const SwapHalves&) const = default;
};

using IsomorphismOp = std::variant<ElementPerm, RowPerm, LeftColPerm, RightColPerm, SwapHalves>;

inline std::string describe(const IsomorphismOp& op) {
  struct {
    std::string operator()(const ElementPerm& o) const { return "element " + o.p.to_cycle_string(); }
    std::string operator()(const RowPerm& o) const { return "rows " + o.p.to_cycle_string(); }
    std::string operator()(const LeftColPerm& o) const { return "left-columns " + o.p.to_cycle_string(); }
    std::string operator()(const RightColPerm& o) const { return "right-columns " + o.p.to_cycle_string(); }
    std::string operator()(const SwapHalves&) const { return "swap-halves"; }
  } visitor;
  return std::visit(visitor, op);
}

inline PBTDesign apply_iso(const PBTDesign& t, const IsomorphismOp& op) {
  const int n = t.n();
  const PairGrid& g = t.cells();
  auto require = [](const Permutation& p, int degree, const char* what) {
    if (p.degree() != degree) {
      throw Error(ErrorKind::DomainMismatch, std::string(what) + " permutation needs degree " + std::to_string(degree) +
                                                 ", got " + std::to_string(p.degree()));
    }
  };
  PairGrid out = g;
  if (const auto* e = std::get_if<ElementPerm>(&op)) {
    require(e->p, 2 * n, "element");
    out = apply_element_permutation(g, e->p);
  } else if (const auto* rp = std::get_if<RowPerm>(&op)) {
    require(rp->p, n, "row");
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < t.cols(); ++c) out(rp->p(r), c) = g(r, c);
  } else if (const auto* lp = std::get_if<LeftColPerm>(&op)) {
    require(lp->p, n - 1, "left column");
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n - 1; ++c) out(r, lp->p(c)) = g(r, c);
  } else if (const auto* rc = std::get_if<RightColPerm>(&op)) {
    require(rc->p, n - 1, "right column");
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n - 1; ++c) out(r, n + rc->p(c)) = g(r, n + c);
  } else {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n - 1; ++c) {
        out(r, c) = g(r, n + c);
        out(r, n + c) = g(r, c);
      }
    }
  }
  return PBTDesign(n, std::move(out));
}

inline PBTDesign apply_iso(PBTDesign t, const std::vector<IsomorphismOp>& ops) {
  for (const auto& op : ops) t = apply_iso(t, op);
  return t;
}

// Center matching {0,1},{2,3},... placed top to bottom in the middle column.
inline bool has_canonical_center(const PairGrid& g, int n) {
  for (int r = 0; r < n; ++r)
    if (g(r, n - 1) != Cell(UnorderedPair(2 * r, 2 * r + 1))) return false;
  return true;
}

inline bool has_canonical_center(const PBTDesign& t) { return has_canonical_center(t.cells(), t.n()); }

struct NormalizedDesign {
  PBTDesign design;
  Permutation relabel;  // old label -> new label
};

// Relabels elements so the middle column reads {0,1},{2,3},... top to bottom;
// the smaller element of each center pair goes to the even label.
inline NormalizedDesign normalize_center(const PBTDesign& t) {
  const int n = t.n();
  std::vector<int> images(static_cast<std::size_t>(2 * n), -1);
  for (int r = 0; r < n; ++r) {
    const UnorderedPair& p = t(r, n - 1);
    for (int e : {p.lo(), p.hi()}) {
      if (images[static_cast<std::size_t>(e)] != -1) {
        throw Error(ErrorKind::InvalidCenter, "middle column repeats element " + std::to_string(e));
      }
    }
    images[static_cast<std::size_t>(p.lo())] = 2 * r;
    images[static_cast<std::size_t>(p.hi())] = 2 * r + 1;
  }
  Permutation relabel(std::move(images));
  return {apply_element_permutation(t, relabel), relabel};
}

// Block of an element: the row whose center cell contains it.
inline std::vector<int> center_blocks(const PBTDesign& t) {
  std::vector<int> block(static_cast<std::size_t>(t.elements()), -1);
  for (int r = 0; r < t.n(); ++r) {
    block[static_cast<std::size_t>(t(r, t.center()).lo())] = r;
    block[static_cast<std::size_t>(t(r, t.center()).hi())] = r;
  }
  return block;
}

// Cycle type of the multigraph on center blocks induced by a set of cells:
// each cell {a,b} is an edge between block(a) and block(b). Sorted component
// sizes (edge counts), with self-loops counted as size-1 components.
inline std::vector<int> block_cycle_type(const std::vector<UnorderedPair>& cells, const std::vector<int>& block,
                                         int blocks) {
  std::vector<int> parent(static_cast<std::size_t>(blocks));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::vector<int> edges(static_cast<std::size_t>(blocks), 0);
  for (const auto& p : cells) {
    int a = block[static_cast<std::size_t>(p.lo())];
    int b = block[static_cast<std::size_t>(p.hi())];
    if (a < 0 || b < 0) continue;
    parent[static_cast<std::size_t>(find(a))] = find(b);
  }
  for (const auto& p : cells) {
    int a = block[static_cast<std::size_t>(p.lo())];
    if (a >= 0 && block[static_cast<std::size_t>(p.hi())] >= 0) ++edges[static_cast<std::size_t>(find(a))];
  }
  std::vector<int> type;
  for (int b = 0; b < blocks; ++b)
    if (find(b) == b && edges[static_cast<std::size_t>(b)] > 0) type.push_back(edges[static_cast<std::size_t>(b)]);
  std::sort(type.begin(), type.end());
  return type;
}

// Per-row invariant: (cycle type of the left cells, cycle type of the right
// cells) on the center blocks. Unchanged by element, row and column
// permutations; swapping halves exchanges the two components.
struct RowSignature {
  std::vector<int> left;
  std::vector<int> right;
  auto operator<=>(const RowSignature&) const = default;
};

inline std::vector<RowSignature> row_signatures(const PBTDesign& t) {
  const int n = t.n();
  auto block = center_blocks(t);
  std::vector<RowSignature> out;
  for (int r = 0; r < n; ++r) {
    std::vector<UnorderedPair> left;
    std::vector<UnorderedPair> right;
    for (int c = 0; c < n - 1; ++c) {
      left.push_back(t(r, c));
      right.push_back(t(r, n + c));
    }
    out.push_back({block_cycle_type(left, block, n), block_cycle_type(right, block, n)});
  }
  return out;
}

// Sorted multiset of row signatures with each row's halves put in a fixed
// order; invariant under all five operations.
inline std::vector<RowSignature> design_signature(const PBTDesign& t) {
  auto sigs = row_signatures(t);
  for (auto& s : sigs)
    if (s.right < s.left) std::swap(s.left, s.right);
  std::sort(sigs.begin(), sigs.end());
  return sigs;
}

enum class IsoVerdict { Yes, No, Inconclusive };

struct IsomorphismResult {
  IsoVerdict verdict = IsoVerdict::Inconclusive;
  std::vector<IsomorphismOp> witness;  // apply_iso(a, witness) == b when Yes
  std::uint64_t nodes = 0;
};

namespace detail {

using Column = std::vector<UnorderedPair>;

inline std::vector<Column> half_columns(const PBTDesign& t, int first) {
  std::vector<Column> cols;
  for (int c = 0; c < t.n() - 1; ++c) {
    Column col;
    for (int r = 0; r < t.n(); ++r) col.push_back(t(r, first + c));
    cols.push_back(std::move(col));
  }
  return cols;
}

// Column permutation p with a[c] == b[p(c)], if the column multisets agree.
inline std::optional<Permutation> match_columns(const std::vector<Column>& a, const std::vector<Column>& b) {
  const std::size_t m = a.size();
  std::vector<int> ia(m);
  std::vector<int> ib(m);
  std::iota(ia.begin(), ia.end(), 0);
  std::iota(ib.begin(), ib.end(), 0);
  auto by = [](const std::vector<Column>& v) {
    return [&v](int x, int y) { return v[static_cast<std::size_t>(x)] < v[static_cast<std::size_t>(y)]; };
  };
  std::sort(ia.begin(), ia.end(), by(a));
  std::sort(ib.begin(), ib.end(), by(b));
  std::vector<int> images(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (a[static_cast<std::size_t>(ia[k])] != b[static_cast<std::size_t>(ib[k])]) return std::nullopt;
    images[static_cast<std::size_t>(ia[k])] = ib[k];
  }
  return Permutation(std::move(images));
}

}  // namespace detail

// Searches the operation group for a witness mapping a onto b. Both designs
// are center-normalized first, so an element relabeling maps center block r
// to block rho(r) (possibly swapping the two elements) and rows follow rho.
// For each choice of halves and image column of left column 0, placing one
// block forces its partners' blocks along column 0; only unresolved blocks
// are branched on. Row signatures prune block images.
inline IsomorphismResult are_isomorphic(const PBTDesign& a, const PBTDesign& b, std::uint64_t node_budget) {
  IsomorphismResult result;
  if (a.n() != b.n()) throw Error(ErrorKind::DomainMismatch, "designs of different side");
  const int n = a.n();
  if (design_signature(a) != design_signature(b)) {
    result.verdict = IsoVerdict::No;
    return result;
  }
  auto na = normalize_center(a);
  auto nb = normalize_center(b);
  auto b_sigs = row_signatures(nb.design);
  auto b_left = detail::half_columns(nb.design, 0);
  auto b_right = detail::half_columns(nb.design, n);
  const auto v = static_cast<std::size_t>(2 * n);
  const auto un = static_cast<std::size_t>(n);
  bool budget_hit = false;

  // Row and partner of every element in one column.
  auto locate = [&](const PBTDesign& t, int col, std::vector<int>& row, std::vector<int>& partner) {
    row.assign(v, -1);
    partner.assign(v, -1);
    for (int r = 0; r < n; ++r) {
      const UnorderedPair& p = t(r, col);
      row[static_cast<std::size_t>(p.lo())] = r;
      row[static_cast<std::size_t>(p.hi())] = r;
      partner[static_cast<std::size_t>(p.lo())] = p.hi();
      partner[static_cast<std::size_t>(p.hi())] = p.lo();
    }
  };

  for (bool swap : {false, true}) {
    if (n < 2) break;
    PBTDesign a1 = swap ? apply_iso(na.design, SwapHalves{}) : na.design;
    auto a_sigs = row_signatures(a1);
    std::vector<int> a_row, a_partner, b_row, b_partner;
    locate(a1, 0, a_row, a_partner);

    for (int j = 0; j < n - 1; ++j) {
      locate(nb.design, j, b_row, b_partner);
      std::vector<int> rho(un, -1), rho_inv(un, -1), flip(un, -1);

      // Assignments are logged so a branch can be undone.
      std::vector<std::pair<int, int>> trail;  // (kind, block): 0 = rho, 1 = flip
      auto set_rho = [&](int blk, int t) {
        if (rho[static_cast<std::size_t>(blk)] >= 0) return rho[static_cast<std::size_t>(blk)] == t;
        if (rho_inv[static_cast<std::size_t>(t)] >= 0) return false;
        if (a_sigs[static_cast<std::size_t>(blk)] != b_sigs[static_cast<std::size_t>(t)]) return false;
        rho[static_cast<std::size_t>(blk)] = t;
        rho_inv[static_cast<std::size_t>(t)] = blk;
        trail.emplace_back(0, blk);
        return true;
      };
      auto set_flip = [&](int blk, int f, std::vector<int>& queue) {
        if (flip[static_cast<std::size_t>(blk)] >= 0) return flip[static_cast<std::size_t>(blk)] == f;
        flip[static_cast<std::size_t>(blk)] = f;
        trail.emplace_back(1, blk);
        queue.push_back(2 * blk);
        queue.push_back(2 * blk + 1);
        return true;
      };
      auto image = [&](int e) {
        int blk = e / 2;
        return 2 * rho[static_cast<std::size_t>(blk)] + ((e & 1) ^ flip[static_cast<std::size_t>(blk)]);
      };
      auto propagate = [&](std::vector<int> queue) {
        while (!queue.empty()) {
          int e = queue.back();
          queue.pop_back();
          int e2 = image(e);
          int y = a_partner[static_cast<std::size_t>(e)];
          int z = b_partner[static_cast<std::size_t>(e2)];
          if (!set_rho(a_row[static_cast<std::size_t>(e)], b_row[static_cast<std::size_t>(e2)])) return false;
          if (!set_rho(y / 2, z / 2)) return false;
          if (!set_flip(y / 2, (y & 1) ^ (z & 1), queue)) return false;
        }
        return true;
      };
      auto undo_to = [&](std::size_t mark) {
        while (trail.size() > mark) {
          auto [kind, blk] = trail.back();
          trail.pop_back();
          if (kind == 0) {
            rho_inv[static_cast<std::size_t>(rho[static_cast<std::size_t>(blk)])] = -1;
            rho[static_cast<std::size_t>(blk)] = -1;
          } else {
            flip[static_cast<std::size_t>(blk)] = -1;
          }
        }
      };

      auto finish = [&]() -> bool {
        std::vector<int> images(v);
        for (std::size_t e = 0; e < v; ++e) images[e] = image(static_cast<int>(e));
        Permutation elem(std::move(images));
        Permutation rows(rho);
        PBTDesign c = apply_iso(apply_iso(a1, ElementPerm{elem}), RowPerm{rows});
        auto lp = detail::match_columns(detail::half_columns(c, 0), b_left);
        if (!lp) return false;
        auto rp = detail::match_columns(detail::half_columns(c, n), b_right);
        if (!rp) return false;
        result.witness.clear();
        result.witness.emplace_back(ElementPerm{na.relabel});
        if (swap) result.witness.emplace_back(SwapHalves{});
        result.witness.emplace_back(ElementPerm{elem});
        result.witness.emplace_back(RowPerm{rows});
        result.witness.emplace_back(LeftColPerm{*lp});
        result.witness.emplace_back(RightColPerm{*rp});
        result.witness.emplace_back(ElementPerm{nb.relabel.inverse()});
        return true;
      };

      auto branch = [&](auto&& self) -> bool {
        if (++result.nodes > node_budget) {
          budget_hit = true;
          return false;
        }
        int pick = -1;
        for (int blk = 0; blk < n && pick < 0; ++blk)
          if (rho[static_cast<std::size_t>(blk)] >= 0 && flip[static_cast<std::size_t>(blk)] < 0) pick = blk;
        for (int blk = 0; blk < n && pick < 0; ++blk)
          if (rho[static_cast<std::size_t>(blk)] < 0) pick = blk;
        if (pick < 0) return finish();
        const bool placed = rho[static_cast<std::size_t>(pick)] >= 0;
        for (int t = 0; t < n; ++t) {
          if (placed && t != rho[static_cast<std::size_t>(pick)]) continue;
          for (int f = 0; f < 2; ++f) {
            const std::size_t mark = trail.size();
            std::vector<int> queue;
            if (set_rho(pick, t) && set_flip(pick, f, queue) && propagate(std::move(queue)) && self(self)) return true;
            undo_to(mark);
            if (budget_hit) return false;
          }
        }
        return false;
      };
      if (branch(branch)) {
        result.verdict = IsoVerdict::Yes;
        return result;
      }
      if (budget_hit) break;
    }
    if (budget_hit) break;
  }
  if (n == 1 && !budget_hit) {
    result.nodes = 1;
    result.witness = {ElementPerm{na.relabel}, ElementPerm{nb.relabel.inverse()}};
    result.verdict = IsoVerdict::Yes;
    return result;
  }
  result.verdict = budget_hit ? IsoVerdict::Inconclusive : IsoVerdict::No;
  return result;
}

}  // namespace pbtd
