#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "pbtd/error.hpp"

namespace pbtd {

// Dense row-major rectangular array.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, const T& fill = T{}) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw Error(ErrorKind::Shape, "negative grid dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill);
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(int r, int c) { return data_[index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[index(r, c)]; }

  T& at(int r, int c) {
    check(r, c);
    return data_[index(r, c)];
  }
  const T& at(int r, int c) const {
    check(r, c);
    return data_[index(r, c)];
  }

  // Columns [first, first + count) as a new grid.
  Grid column_range(int first, int count) const {
    if (first < 0 || count < 0 || first + count > cols_) throw Error(ErrorKind::Shape, "column range out of bounds");
    Grid out(rows_, count);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
    return out;
  }

  const std::vector<T>& data() const noexcept { return data_; }

  bool operator==(const Grid&) const = default;

 private:
  std::size_t index(int r, int c) const noexcept {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  void check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw Error(ErrorKind::Shape, "grid index out of bounds");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

// Horizontal concatenation; all parts must have the same row count.
template <typename T>
Grid<T> concat_columns(const std::vector<const Grid<T>*>& parts) {
  int rows = -1;
  int cols = 0;
  for (const auto* p : parts) {
    if (p->cols() == 0) continue;
    if (rows >= 0 && p->rows() != rows) throw Error(ErrorKind::Shape, "row count mismatch in concatenation");
    rows = p->rows();
    cols += p->cols();
  }
  if (rows < 0) {
    for (const auto* p : parts) rows = std::max(rows, p->rows());
  }
  Grid<T> out(rows < 0 ? 0 : rows, cols);
  int offset = 0;
  for (const auto* p : parts) {
    for (int r = 0; r < p->rows() && p->cols() > 0; ++r)
      for (int c = 0; c < p->cols(); ++c) out(r, offset + c) = (*p)(r, c);
    offset += p->cols();
  }
  return out;
}

}  // namespace pbtd
