#pragma once

#include <cstddef>
#include <vector>

#include "linftrees/rational_linalg.hpp"
#include "linftrees/sign_vector.hpp"

namespace linftrees {

/// Linear subspace L of R^m, held as a basis of L (rows) together with a basis
/// of the orthogonal complement computed at construction.
class LinearSubspace {
 public:
  /// Rows must be linearly independent (throws std::invalid_argument).
  static LinearSubspace from_basis(RatMatrix basis_rows, std::size_t ambient_dim);
  /// L = {x : Vx = 0} for the given full-row-rank V.
  static LinearSubspace from_kernel_of(const RatMatrix& v);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows; }
  const RatMatrix& basis() const { return basis_; }
  const RatMatrix& dual_basis() const { return dual_basis_; }

  /// A point of L from coefficients against the basis rows.
  RatVector combination(const RatVector& coefficients) const;

 private:
  LinearSubspace() = default;
  std::size_t ambient_ = 0;
  RatMatrix basis_;       // dim x ambient
  RatMatrix dual_basis_;  // (ambient - dim) x ambient
};

/// Exact l-infinity distance from x to L.
Rational linf_distance(const RatVector& x, const LinearSubspace& l);

/// Sign vector of the minimal face of the distance cube around x that contains
/// every closest point of L. Entry i is + iff min y_i over the closest set is
/// x_i + r, - iff max y_i is x_i - r, else 0.
SignVector type_of(const RatVector& x, const LinearSubspace& l);

/// Rank of supp(sigma) in the column matroid of a basis matrix of L.
std::size_t sign_rank(const SignVector& sigma, const LinearSubspace& l);

/// dim(L) - sign_rank(type(x)); 0 when x lies in L.
std::size_t closest_set_dim(const RatVector& x, const LinearSubspace& l);

/// True iff sigma is the sign vector of some functional vanishing on L.
bool is_covector(const SignVector& sigma, const LinearSubspace& l);

/// All covectors of L including the zero vector, in a fixed total order.
/// Brute force over 3^m candidates; guarded at ambient_dim <= 12.
std::vector<SignVector> enumerate_covectors(const LinearSubspace& l);

/// True iff every dim(L)-subset of basis columns has full rank, which holds
/// iff the closest point in L is unique for every x.
bool is_uniform(const LinearSubspace& l);

/// A point of type sigma: shift + sum of cone_weights[k] * (-u(tau_k)) over
/// the covectors tau >= sigma in enumeration order. All weights must be
/// positive and match that count. For the zero sigma the cone part is empty
/// and the result is the shift itself (a point of L). shift_coefficients are
/// taken against the basis rows; pass {} for the origin.
RatVector type_cone_sample(const SignVector& sigma, const LinearSubspace& l,
                           const RatVector& cone_weights,
                           const RatVector& shift_coefficients = {});

/// The covectors tau with sigma <= tau, in enumeration order.
std::vector<SignVector> covectors_above(const SignVector& sigma, const LinearSubspace& l);

}  // namespace linftrees
