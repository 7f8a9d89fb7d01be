#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "pbtd/error.hpp"

namespace pbtd {

// Largest supported side. Element sets are stored as 64-bit masks, so 2n <= 64.
inline constexpr int kMaxSide = 32;

using ElementMask = std::uint64_t;

constexpr ElementMask element_bit(int e) { return ElementMask{1} << e; }

constexpr ElementMask universe_mask(int elements) {
  return elements >= 64 ? ~ElementMask{0} : (element_bit(elements) - 1);
}

// A 2-subset {lo, hi} of the element universe, always stored with lo < hi.
class UnorderedPair {
 public:
  constexpr UnorderedPair() = default;
  constexpr UnorderedPair(int a, int b) : lo_(a < b ? a : b), hi_(a < b ? b : a) {
    if (a == b || a < 0 || b < 0) {
      throw Error(ErrorKind::Range, "degenerate pair {" + std::to_string(a) + ", " + std::to_string(b) + "}");
    }
  }

  constexpr int lo() const noexcept { return lo_; }
  constexpr int hi() const noexcept { return hi_; }
  constexpr bool contains(int e) const noexcept { return e == lo_ || e == hi_; }
  constexpr ElementMask mask() const noexcept { return element_bit(lo_) | element_bit(hi_); }

  // Position in the colexicographic enumeration of all pairs: {0,1},{0,2},{1,2},{0,3},...
  constexpr int index() const noexcept { return hi_ * (hi_ - 1) / 2 + lo_; }

  static constexpr UnorderedPair from_index(int index) {
    int hi = 1;
    while ((hi + 1) * hi / 2 <= index) ++hi;
    return UnorderedPair(index - hi * (hi - 1) / 2, hi);
  }

  constexpr auto operator<=>(const UnorderedPair&) const = default;

 private:
  int lo_ = 0;
  int hi_ = 1;
};

constexpr int pair_count(int elements) { return elements * (elements - 1) / 2; }

inline std::string to_string(const UnorderedPair& p) {
  return std::to_string(p.lo()) + "," + std::to_string(p.hi());
}

inline std::ostream& operator<<(std::ostream& os, const UnorderedPair& p) { return os << to_string(p); }

// A grid cell: a pair, or empty (Howell form only).
using Cell = std::optional<UnorderedPair>;

}  // namespace pbtd
