#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "starpi/rational.hpp"

namespace starpi {

using RatVec = std::vector<Rational>;

// A row space held in reduced echelon form. Pivots sit at the leftmost
// nonzero column of each row, are normalized to 1, and are the only nonzero
// entries of their column; rows are kept sorted by pivot column. Since the
// reduced echelon basis of a space is unique, the stored rows never depend on
// insertion order.
class RowSpace {
 public:
  explicit RowSpace(size_t width) : width_(width) {}

  size_t width() const { return width_; }
  size_t rank() const { return rows_.size(); }
  const std::vector<RatVec>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  // Residual of v after eliminating along the stored rows.
  RatVec reduce(RatVec v) const {
    check_width(v);
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Rational c = v[pivots_[r]];
      if (c == 0) continue;
      for (size_t k = pivots_[r]; k < width_; ++k)
        if (rows_[r][k] != 0) v[k] -= c * rows_[r][k];
    }
    return v;
  }

  bool contains(const RatVec& v) const {
    RatVec res = reduce(v);
    for (const auto& x : res)
      if (x != 0) return false;
    return true;
  }

  // Returns true when the row enlarged the space.
  bool insert(RatVec row) {
    row = reduce(std::move(row));
    size_t p = 0;
    while (p < width_ && row[p] == 0) ++p;
    if (p == width_) return false;

    const Rational inv = 1 / row[p];
    for (size_t k = p; k < width_; ++k)
      if (row[k] != 0) row[k] *= inv;

    for (size_t r = 0; r < rows_.size(); ++r) {
      const Rational c = rows_[r][p];
      if (c == 0) continue;
      for (size_t k = p; k < width_; ++k)
        if (row[k] != 0) rows_[r][k] -= c * row[k];
    }

    size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + at, std::move(row));
    pivots_.insert(pivots_.begin() + at, p);
    return true;
  }

 private:
  void check_width(const RatVec& v) const {
    if (v.size() != width_) throw std::invalid_argument("vector width mismatch");
  }

  size_t width_;
  std::vector<RatVec> rows_;
  std::vector<size_t> pivots_;
};

inline size_t exact_rank(const std::vector<RatVec>& rows, size_t width) {
  RowSpace space(width);
  for (const auto& r : rows) space.insert(r);
  return space.rank();
}

inline bool in_span(const std::vector<RatVec>& rows, const RatVec& v) {
  RowSpace space(v.size());
  for (const auto& r : rows) space.insert(r);
  return space.contains(v);
}

// Basis of { x : r . x = 0 for every row r }, one vector per free column in
// ascending column order.
inline std::vector<RatVec> nullspace(const std::vector<RatVec>& rows, size_t width) {
  RowSpace space(width);
  for (const auto& r : rows) space.insert(r);

  std::vector<bool> is_pivot(width, false);
  for (size_t p : space.pivots()) is_pivot[p] = true;

  std::vector<RatVec> basis;
  for (size_t f = 0; f < width; ++f) {
    if (is_pivot[f]) continue;
    RatVec x(width, Rational(0));
    x[f] = 1;
    for (size_t r = 0; r < space.rank(); ++r) x[space.pivots()[r]] = -space.rows()[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace starpi
