#include "linftrees/oriented_matroid.hpp"

#include <algorithm>
#include <stdexcept>

#include "linftrees/errors.hpp"
#include "linftrees/linear_program.hpp"

namespace linftrees {

LinearSubspace LinearSubspace::from_basis(RatMatrix basis_rows, std::size_t ambient_dim) {
  if (basis_rows.rows > 0 && basis_rows.cols != ambient_dim) {
    throw std::invalid_argument("LinearSubspace: basis width does not match ambient dimension");
  }
  basis_rows.cols = ambient_dim;
  if (basis_rows.entries.size() != basis_rows.rows * ambient_dim) {
    basis_rows.entries.resize(basis_rows.rows * ambient_dim);
  }
  if (rank(basis_rows) != basis_rows.rows) {
    throw std::invalid_argument("LinearSubspace: basis rows are linearly dependent");
  }

  LinearSubspace l;
  l.ambient_ = ambient_dim;
  l.basis_ = std::move(basis_rows);
  const auto kernel = kernel_basis(l.basis_.rows == 0 ? RatMatrix(0, ambient_dim) : l.basis_);
  l.dual_basis_ = RatMatrix(kernel.size(), ambient_dim);
  for (std::size_t r = 0; r < kernel.size(); ++r) {
    for (std::size_t c = 0; c < ambient_dim; ++c) l.dual_basis_.at(r, c) = kernel[r][c];
  }
  return l;
}

LinearSubspace LinearSubspace::from_kernel_of(const RatMatrix& v) {
  const auto kernel = kernel_basis(v);
  RatMatrix basis(kernel.size(), v.cols);
  for (std::size_t r = 0; r < kernel.size(); ++r) {
    for (std::size_t c = 0; c < v.cols; ++c) basis.at(r, c) = kernel[r][c];
  }
  return from_basis(std::move(basis), v.cols);
}

RatVector LinearSubspace::combination(const RatVector& coefficients) const {
  if (coefficients.size() != dim()) {
    throw std::invalid_argument("LinearSubspace::combination: coefficient count != dim");
  }
  RatVector x(ambient_);
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = 0; c < ambient_; ++c) x[c] += coefficients[r] * basis_.at(r, c);
  }
  return x;
}

namespace {

// Membership constraints for C(x, L) = {y in L : |y - x|_inf <= r} in the
// ambient variables y.
std::vector<LinearConstraint> closest_set_constraints(const RatVector& x, const LinearSubspace& l,
                                                      const Rational& r) {
  const std::size_t m = l.ambient_dim();
  std::vector<LinearConstraint> cs;
  for (std::size_t k = 0; k < l.dual_basis().rows; ++k) {
    LinearConstraint c;
    c.coeffs = l.dual_basis().row(k);
    c.rel = Relation::Equal;
    c.rhs = 0;
    cs.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < m; ++i) {
    LinearConstraint up;
    up.coeffs.assign(m, Rational(0));
    up.coeffs[i] = 1;
    up.rel = Relation::LessEq;
    up.rhs = x[i] + r;
    cs.push_back(std::move(up));
    LinearConstraint lo;
    lo.coeffs.assign(m, Rational(0));
    lo.coeffs[i] = -1;
    lo.rel = Relation::LessEq;
    lo.rhs = r - x[i];
    cs.push_back(std::move(lo));
  }
  return cs;
}

Rational optimize_coordinate(const RatVector& x, const LinearSubspace& l, const Rational& r,
                             std::size_t coord, Sense sense) {
  LPProblem p;
  p.ambient_dim = l.ambient_dim();
  p.constraints = closest_set_constraints(x, l, r);
  p.objective.assign(p.ambient_dim, Rational(0));
  p.objective[coord] = 1;
  p.sense = sense;
  const LPOutcome out = solve(p);
  if (out.status != LPStatus::Optimal) {
    throw std::logic_error("optimize_coordinate: closest set should be a nonempty polytope");
  }
  return out.value;
}

}  // namespace

Rational linf_distance(const RatVector& x, const LinearSubspace& l) {
  const std::size_t m = l.ambient_dim();
  if (x.size() != m) throw std::invalid_argument("linf_distance: dimension mismatch");

  // Variables (y, eps); minimize eps subject to y in L and |y_i - x_i| <= eps.
  LPProblem p;
  p.ambient_dim = m + 1;
  p.sense = Sense::Minimize;
  p.objective.assign(m + 1, Rational(0));
  p.objective[m] = 1;
  for (std::size_t k = 0; k < l.dual_basis().rows; ++k) {
    LinearConstraint c;
    c.coeffs = l.dual_basis().row(k);
    c.coeffs.push_back(Rational(0));
    c.rel = Relation::Equal;
    c.rhs = 0;
    p.constraints.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < m; ++i) {
    LinearConstraint up;  // y_i - eps <= x_i
    up.coeffs.assign(m + 1, Rational(0));
    up.coeffs[i] = 1;
    up.coeffs[m] = -1;
    up.rhs = x[i];
    p.constraints.push_back(std::move(up));
    LinearConstraint lo;  // -y_i - eps <= -x_i
    lo.coeffs.assign(m + 1, Rational(0));
    lo.coeffs[i] = -1;
    lo.coeffs[m] = -1;
    lo.rhs = -x[i];
    p.constraints.push_back(std::move(lo));
  }
  const LPOutcome out = solve(p);
  if (out.status != LPStatus::Optimal) {
    throw std::logic_error("linf_distance: projection LP should always be solvable");
  }
  return out.value;
}

SignVector type_of(const RatVector& x, const LinearSubspace& l) {
  const std::size_t m = l.ambient_dim();
  if (x.size() != m) throw std::invalid_argument("type_of: dimension mismatch");
  const Rational r = linf_distance(x, l);
  SignVector sigma(m);
  if (r.is_zero()) return sigma;  // x in L, the closest set is {x}
  for (std::size_t i = 0; i < m; ++i) {
    if (optimize_coordinate(x, l, r, i, Sense::Minimize) == x[i] + r) {
      sigma.set(i, Sign::Plus);
    } else if (optimize_coordinate(x, l, r, i, Sense::Maximize) == x[i] - r) {
      sigma.set(i, Sign::Minus);
    }
  }
  return sigma;
}

std::size_t sign_rank(const SignVector& sigma, const LinearSubspace& l) {
  if (sigma.size() != l.ambient_dim()) {
    throw std::invalid_argument("sign_rank: dimension mismatch");
  }
  return rank_of_columns(l.basis(), sigma.support());
}

std::size_t closest_set_dim(const RatVector& x, const LinearSubspace& l) {
  const Rational r = linf_distance(x, l);
  if (r.is_zero()) return 0;
  return l.dim() - sign_rank(type_of(x, l), l);
}

bool is_covector(const SignVector& sigma, const LinearSubspace& l) {
  const std::size_t m = l.ambient_dim();
  if (sigma.size() != m) throw std::invalid_argument("is_covector: dimension mismatch");
  if (sigma.is_zero()) return true;

  // c = z^T V for z free; require c_i >= 1 (+), c_i <= -1 (-), c_i = 0 (0).
  const RatMatrix& v = l.dual_basis();
  const std::size_t k = v.rows;
  if (k == 0) return false;  // L = R^m admits only the zero functional
  std::vector<LinearConstraint> cs;
  for (std::size_t i = 0; i < m; ++i) {
    RatVector col(k);
    for (std::size_t r = 0; r < k; ++r) col[r] = v.at(r, i);
    LinearConstraint c;
    switch (sigma[i]) {
      case Sign::Plus:
        c.coeffs = col;
        for (auto& e : c.coeffs) e = -e;
        c.rhs = -1;  // c_i >= 1
        break;
      case Sign::Minus:
        c.coeffs = col;
        c.rhs = -1;  // c_i <= -1
        break;
      case Sign::Zero:
        c.coeffs = col;
        c.rel = Relation::Equal;
        c.rhs = 0;
        break;
    }
    cs.push_back(std::move(c));
  }
  LPProblem p;
  p.ambient_dim = k;
  p.constraints = std::move(cs);
  p.objective.assign(k, Rational(0));
  return solve(p).status == LPStatus::Optimal;
}

std::vector<SignVector> enumerate_covectors(const LinearSubspace& l) {
  const std::size_t m = l.ambient_dim();
  if (m > 12) throw GuardViolation("enumerate_covectors: ambient dimension above 12");
  std::vector<SignVector> out;
  SignVector sigma(m);
  // Odometer over {0,+,-}^m.
  std::vector<int> digits(m, 0);
  const Sign alphabet[3] = {Sign::Zero, Sign::Plus, Sign::Minus};
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) sigma.set(i, alphabet[digits[i]]);
    if (is_covector(sigma, l)) out.push_back(sigma);
    std::size_t pos = 0;
    while (pos < m && digits[pos] == 2) digits[pos++] = 0;
    if (pos == m) break;
    ++digits[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_uniform(const LinearSubspace& l) {
  const std::size_t d = l.dim();
  const std::size_t m = l.ambient_dim();
  if (d == 0 || d == m) return true;

  std::vector<std::size_t> subset(d);
  for (std::size_t i = 0; i < d; ++i) subset[i] = i;
  for (;;) {
    if (rank_of_columns(l.basis(), subset) != d) return false;
    // next combination
    std::size_t i = d;
    while (i > 0 && subset[i - 1] == m - d + (i - 1)) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < d; ++j) subset[j] = subset[j - 1] + 1;
  }
  return true;
}

std::vector<SignVector> covectors_above(const SignVector& sigma, const LinearSubspace& l) {
  std::vector<SignVector> out;
  for (const SignVector& tau : enumerate_covectors(l)) {
    if (sigma.below_or_equal(tau)) out.push_back(tau);
  }
  return out;
}

RatVector type_cone_sample(const SignVector& sigma, const LinearSubspace& l,
                           const RatVector& cone_weights, const RatVector& shift_coefficients) {
  const std::size_t m = l.ambient_dim();
  if (sigma.size() != m) throw std::invalid_argument("type_cone_sample: dimension mismatch");
  if (!is_covector(sigma, l)) {
    throw std::invalid_argument("type_cone_sample: sigma is not a covector of L");
  }
  RatVector x(m);
  if (!shift_coefficients.empty()) {
    x = l.combination(shift_coefficients);
  }
  if (sigma.is_zero()) {
    if (!cone_weights.empty()) {
      throw std::invalid_argument("type_cone_sample: zero sigma takes no cone weights");
    }
    return x;
  }
  const std::vector<SignVector> gens = covectors_above(sigma, l);
  if (cone_weights.size() != gens.size()) {
    throw std::invalid_argument("type_cone_sample: need one weight per covector above sigma (" +
                                std::to_string(gens.size()) + ")");
  }
  for (const Rational& w : cone_weights) {
    if (w.sign() <= 0) throw std::invalid_argument("type_cone_sample: weights must be positive");
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const RatVector u = u_vector(gens[k]);
    for (std::size_t i = 0; i < m; ++i) x[i] -= cone_weights[k] * u[i];
  }
  return x;
}

}  // namespace linftrees
