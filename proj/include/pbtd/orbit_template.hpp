#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pbtd/design.hpp"

namespace pbtd {

// One slot of an orbit template: either a free generator cell or the image of a
// generator under pi^exponent.
struct Slot {
  enum class Kind { Free, Image };
  Kind kind = Kind::Free;
  int generator = 0;
  int exponent = 0;

  static Slot free(int g) { return {Kind::Free, g, 0}; }
  static Slot image(int g, int k) { return {Kind::Image, g, k}; }

  bool operator==(const Slot&) const = default;
};

using GeneratorAssignment = std::map<int, UnorderedPair>;

// A grid of slots over a fixed permutation pi of the element set. Every
// generator has exactly one Free slot; Image exponents are stored reduced
// modulo the order of pi (a reduced exponent of 0 is the plain copy).
class OrbitTemplate {
 public:
  OrbitTemplate() = default;

  OrbitTemplate(Permutation pi, Grid<Slot> slots) : pi_(std::move(pi)), slots_(std::move(slots)) {
    order_ = pi_.degree() == 0 ? 1 : pi_.order();
    std::map<int, int> free_count;
    for (int r = 0; r < slots_.rows(); ++r)
      for (int c = 0; c < slots_.cols(); ++c)
        if (slots_(r, c).kind == Slot::Kind::Free) ++free_count[slots_(r, c).generator];
    for (const auto& [g, k] : free_count) {
      if (k != 1) throw Error(ErrorKind::InvalidTemplate, "generator g" + std::to_string(g) + " has " +
                                                              std::to_string(k) + " free slots");
    }
    for (int r = 0; r < slots_.rows(); ++r) {
      for (int c = 0; c < slots_.cols(); ++c) {
        Slot& s = slots_(r, c);
        if (s.generator < 0) throw Error(ErrorKind::InvalidTemplate, "negative generator id");
        if (s.kind == Slot::Kind::Image) {
          if (!free_count.count(s.generator)) {
            throw Error(ErrorKind::InvalidTemplate, "image slot references unknown generator g" +
                                                        std::to_string(s.generator));
          }
          auto m = static_cast<std::int64_t>(order_);
          s.exponent = static_cast<int>(((s.exponent % m) + m) % m);
        }
      }
    }
    for (const auto& [g, k] : free_count) generators_.push_back(g);
  }

  const Permutation& pi() const noexcept { return pi_; }
  std::uint64_t order() const noexcept { return order_; }
  const Grid<Slot>& slots() const noexcept { return slots_; }
  int rows() const noexcept { return slots_.rows(); }
  int cols() const noexcept { return slots_.cols(); }
  int elements() const noexcept { return pi_.degree(); }
  const std::vector<int>& generators() const noexcept { return generators_; }

  std::size_t free_slot_count() const { return generators_.size(); }
  std::size_t image_slot_count() const { return slots_.size() - generators_.size(); }

  // Same slots, different permutation.
  OrbitTemplate with_permutation(Permutation pi) const { return OrbitTemplate(std::move(pi), slots_); }

  bool operator==(const OrbitTemplate&) const = default;

 private:
  Permutation pi_;
  std::uint64_t order_ = 1;
  Grid<Slot> slots_;
  std::vector<int> generators_;
};

// pi = (0,1)(2,3)...(2n-2,2n-1) on an n x (n-1) half: columns 0, 2, 4, ... are
// free and each following column is the pointwise image of its left neighbour.
inline OrbitTemplate sigma_template(int n) {
  if (n < 1) throw Error(ErrorKind::Shape, "side must be positive");
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) images[static_cast<std::size_t>(i)] = i ^ 1;
  Grid<Slot> slots(n, n - 1);
  int next = 0;
  for (int c = 0; c < n - 1; c += 2) {
    for (int r = 0; r < n; ++r) {
      int g = next++;
      slots(r, c) = Slot::free(g);
      if (c + 1 < n - 1) slots(r, c + 1) = Slot::image(g, 1);
    }
  }
  return OrbitTemplate(Permutation(std::move(images)), std::move(slots));
}

struct TemplatePair {
  OrbitTemplate left;
  OrbitTemplate right;
};

// The tau layouts for side 7, tau = (0,2,4)(1,3,5)(8,10,12)(9,11,13).
// Left: rows 0 and 4 free, rows 1-2 and 5-6 are tau and tau^2 images with the
// columns rotated by 2 and 4; row 3 frees its first two cells and repeats them
// under tau and tau^2. Right: same row pattern, with the rotation acting
// inside the two blocks of three columns; row 3 is the orbit of its cells in
// columns 0 and 3.
inline TemplatePair tau_templates_n7() {
  const Permutation tau = Permutation::from_cycles(14, "(0,2,4)(1,3,5)(8,10,12)(9,11,13)");

  Grid<Slot> left(7, 6);
  auto left_block = [&left](int top, int base) {
    for (int c = 0; c < 6; ++c) {
      left(top, c) = Slot::free(base + c);
      left(top + 1, c) = Slot::image(base + (c + 4) % 6, 1);
      left(top + 2, c) = Slot::image(base + (c + 2) % 6, 2);
    }
  };
  left_block(0, 0);
  left_block(4, 8);
  left(3, 0) = Slot::free(6);
  left(3, 1) = Slot::free(7);
  left(3, 2) = Slot::image(6, 1);
  left(3, 3) = Slot::image(7, 1);
  left(3, 4) = Slot::image(6, 2);
  left(3, 5) = Slot::image(7, 2);

  Grid<Slot> right(7, 6);
  // Row below a free row: column j takes tau of free column shift1[j]; two rows
  // below: tau^2 of free column shift2[j].
  constexpr int shift1[6] = {2, 0, 1, 5, 3, 4};
  constexpr int shift2[6] = {1, 2, 0, 4, 5, 3};
  auto right_block = [&](int top, int base) {
    for (int c = 0; c < 6; ++c) {
      right(top, c) = Slot::free(base + c);
      right(top + 1, c) = Slot::image(base + shift1[c], 1);
      right(top + 2, c) = Slot::image(base + shift2[c], 2);
    }
  };
  right_block(0, 0);
  right_block(4, 8);
  right(3, 0) = Slot::free(6);
  right(3, 1) = Slot::image(6, 1);
  right(3, 2) = Slot::image(6, 2);
  right(3, 3) = Slot::free(7);
  right(3, 4) = Slot::image(7, 1);
  right(3, 5) = Slot::image(7, 2);

  return {OrbitTemplate(tau, std::move(left)), OrbitTemplate(tau, std::move(right))};
}

// Every slot its own free generator, pi = identity.
inline OrbitTemplate free_template(int rows, int cols, int elements) {
  Grid<Slot> slots(rows, cols);
  int g = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) slots(r, c) = Slot::free(g++);
  return OrbitTemplate(Permutation::identity(elements), std::move(slots));
}

inline PairGrid expand_template(const OrbitTemplate& tmpl, const GeneratorAssignment& assignment) {
  PairGrid out(tmpl.rows(), tmpl.cols());
  std::map<int, Permutation> powers;
  for (int r = 0; r < tmpl.rows(); ++r) {
    for (int c = 0; c < tmpl.cols(); ++c) {
      const Slot& s = tmpl.slots()(r, c);
      auto it = assignment.find(s.generator);
      if (it == assignment.end()) {
        throw Error(ErrorKind::MissingGenerator, "no pair assigned to generator g" + std::to_string(s.generator));
      }
      if (it->second.hi() >= tmpl.elements()) throw Error(ErrorKind::DomainMismatch, "generator pair outside V");
      if (s.kind == Slot::Kind::Free || s.exponent == 0) {
        out(r, c) = it->second;
      } else {
        auto [pw, _] = powers.try_emplace(s.exponent, tmpl.pi().pow(s.exponent));
        out(r, c) = apply(pw->second, it->second);
      }
    }
  }
  return out;
}

// Reads each generator from its free slot; nullopt if the grid is not fully
// occupied or shapes differ.
inline std::optional<GeneratorAssignment> extract_generators(const PairGrid& g, const OrbitTemplate& tmpl) {
  if (g.rows() != tmpl.rows() || g.cols() != tmpl.cols()) return std::nullopt;
  GeneratorAssignment out;
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      const Slot& s = tmpl.slots()(r, c);
      if (!g(r, c)) return std::nullopt;
      if (g(r, c)->hi() >= tmpl.elements()) return std::nullopt;
      if (s.kind == Slot::Kind::Free) out.emplace(s.generator, *g(r, c));
    }
  }
  return out;
}

inline bool matches_template(const PairGrid& g, const OrbitTemplate& tmpl) {
  if (g.rows() != tmpl.rows() || g.cols() != tmpl.cols()) {
    throw Error(ErrorKind::Shape, "grid and template shapes differ");
  }
  auto assignment = extract_generators(g, tmpl);
  return assignment && expand_template(tmpl, *assignment) == g;
}

}  // namespace pbtd
