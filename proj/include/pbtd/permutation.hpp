#pragma once

#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "pbtd/error.hpp"

namespace pbtd {

// Bijection on {0, ..., degree-1}, stored as its image table.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)]) {
        throw Error(ErrorKind::InvalidPermutation, "image table is not a bijection");
      }
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  static Permutation identity(int degree) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
  }

  // Builds a permutation from disjoint cycles, e.g. "(0,1)(2,3)"; "()" is the identity.
  static Permutation from_cycles(int degree, std::string_view text) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    std::vector<bool> moved(static_cast<std::size_t>(degree), false);
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') throw Error(ErrorKind::InvalidPermutation, "expected '(' in cycle notation");
      ++i;
      std::vector<int> cycle;
      while (true) {
        skip_ws();
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw Error(ErrorKind::InvalidPermutation, "expected a point in cycle notation");
        int point = std::stoi(std::string(text.substr(start, i - start)));
        if (point >= degree) throw Error(ErrorKind::InvalidPermutation, "cycle point out of range");
        cycle.push_back(point);
        skip_ws();
        if (i < text.size() && text[i] == ',') ++i;
      }
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        auto p = static_cast<std::size_t>(cycle[k]);
        if (moved[p]) throw Error(ErrorKind::InvalidPermutation, "cycles are not disjoint");
        moved[p] = true;
        images[p] = cycle[(k + 1) % cycle.size()];
      }
      skip_ws();
    }
    return Permutation(std::move(images));
  }

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>((*this)(i))] = i;
    return Permutation(std::move(inv));
  }

  // Exponent may be negative.
  Permutation pow(std::int64_t k) const {
    Permutation base = k < 0 ? inverse() : *this;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    Permutation result = identity(degree());
    while (e > 0) {
      if (e & 1U) result = result * base;
      base = base * base;
      e >>= 1U;
    }
    return result;
  }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
      std::vector<int> cycle;
      for (int x = i; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
        seen[static_cast<std::size_t>(x)] = true;
        cycle.push_back(x);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  // Least common multiple of the cycle lengths.
  std::uint64_t order() const {
    std::uint64_t result = 1;
    for (const auto& c : cycles()) result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
    return result;
  }

  std::string to_cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& c : cs) {
      out += '(';
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(c[k]);
      }
      out += ')';
    }
    return out;
  }

  // (a * b)(x) = a(b(x)): apply b first.
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw Error(ErrorKind::DomainMismatch, "composing permutations of different degree");
    std::vector<int> out(a.images_.size());
    for (int i = 0; i < a.degree(); ++i) out[static_cast<std::size_t>(i)] = a(b(i));
    return Permutation(std::move(out));
  }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace pbtd
