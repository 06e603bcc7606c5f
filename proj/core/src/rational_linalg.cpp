#include "linftrees/rational_linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace linftrees {

RatMatrix::RatMatrix(std::size_t r, std::size_t c, std::vector<Rational> e)
    : rows(r), cols(c), entries(std::move(e)) {
  if (entries.size() != rows * cols) {
    throw std::invalid_argument("RatMatrix: entry count does not match shape");
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  RatVector out(cols);
  for (std::size_t c = 0; c < cols; ++c) out[c] = at(r, c);
  return out;
}

RatMatrix RatMatrix::columns(const std::vector<std::size_t>& column_set) const {
  for (std::size_t c : column_set) {
    if (c >= cols) throw std::out_of_range("RatMatrix::columns: index out of range");
  }
  std::set<std::size_t> uniq(column_set.begin(), column_set.end());
  RatMatrix out(rows, uniq.size());
  std::size_t j = 0;
  for (std::size_t c : uniq) {
    for (std::size_t r = 0; r < rows; ++r) out.at(r, j) = at(r, c);
    ++j;
  }
  return out;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows == o.rows && cols == o.cols && entries == o.entries;
}

RrefResult rref(const RatMatrix& m) {
  RrefResult res{m, {}};
  RatMatrix& a = res.matrix;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols && pivot_row < a.rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows && a.at(sel, col).is_zero()) ++sel;
    if (sel == a.rows) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
    }
    const Rational inv = Rational(1) / a.at(pivot_row, col);
    for (std::size_t c = col; c < a.cols; ++c) a.at(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == pivot_row || a.at(r, col).is_zero()) continue;
      const Rational factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols; ++c) {
        a.at(r, c) -= factor * a.at(pivot_row, c);
      }
    }
    res.pivot_columns.push_back(col);
    ++pivot_row;
  }
  return res;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivot_columns.size(); }

std::size_t rank_of_columns(const RatMatrix& m, const std::vector<std::size_t>& column_set) {
  if (column_set.empty()) return 0;
  return rank(m.columns(column_set));
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : r.pivot_columns) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVector v(m.cols);
    v[free_col] = 1;
    for (std::size_t i = 0; i < r.pivot_columns.size(); ++i) {
      v[r.pivot_columns[i]] = -r.matrix.at(i, free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& x) {
  if (x.size() != m.cols) throw std::invalid_argument("mat_vec: dimension mismatch");
  RatVector out(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < m.cols; ++c) acc += m.at(r, c) * x[c];
    out[r] = acc;
  }
  return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace linftrees
