#pragma once

#include <cstddef>
#include <vector>

#include "linftrees/rational.hpp"

namespace linftrees {

/// Dense row-major matrix of exact rationals.
struct RatMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> entries;

  RatMatrix() = default;
  RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
  RatMatrix(std::size_t r, std::size_t c, std::vector<Rational> e);

  static RatMatrix identity(std::size_t n);

  Rational& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  RatVector row(std::size_t r) const;
  RatMatrix columns(const std::vector<std::size_t>& column_set) const;

  bool operator==(const RatMatrix& o) const;
};

struct RrefResult {
  RatMatrix matrix;
  std::vector<std::size_t> pivot_columns;  // left to right
};

/// Unique reduced row echelon form.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Rank of the submatrix formed by the given columns. Throws std::out_of_range
/// on a bad index; duplicates in the set are ignored.
std::size_t rank_of_columns(const RatMatrix& m, const std::vector<std::size_t>& column_set);

/// Basis of the null space {x : Mx = 0}. Empty iff M has full column rank.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

RatVector mat_vec(const RatMatrix& m, const RatVector& x);
Rational dot(const RatVector& a, const RatVector& b);

}  // namespace linftrees
