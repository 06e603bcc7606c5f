#include "linftrees/linear_program.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "linftrees/rational_linalg.hpp"

namespace linftrees {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau for min c·z s.t. Az = b, z >= 0, b >= 0. Columns are split
// variables (x = u - v), then slacks, then artificials.
class Tableau {
 public:
  Tableau(std::size_t n_rows, std::size_t n_cols)
      : rows_(n_rows), cols_(n_cols), a_(n_rows, n_cols), b_(n_rows), basis_(n_rows, kNone) {}

  Rational& a(std::size_t r, std::size_t c) { return a_.at(r, c); }
  Rational& b(std::size_t r) { return b_[r]; }
  const Rational& a(std::size_t r, std::size_t c) const { return a_.at(r, c); }
  const Rational& b(std::size_t r) const { return b_[r]; }
  std::size_t rows() const { return rows_; }
  std::size_t basis(std::size_t r) const { return basis_[r]; }
  void set_basis(std::size_t r, std::size_t col) { basis_[r] = col; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = Rational(1) / a_.at(pr, pc);
    for (std::size_t c = 0; c < cols_; ++c) a_.at(pr, c) *= inv;
    b_[pr] *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr || a_.at(r, pc).is_zero()) continue;
      const Rational f = a_.at(r, pc);
      for (std::size_t c = 0; c < cols_; ++c) a_.at(r, c) -= f * a_.at(pr, c);
      b_[r] -= f * b_[pr];
    }
    basis_[pr] = pc;
  }

  // Bland: entering = lowest-index column (< col_limit) with negative reduced
  // cost; leaving = min-ratio row, ties by lowest basis column index.
  // Returns Optimal or Unbounded. cost/cost0 hold the running objective row.
  LPStatus iterate(RatVector& cost, Rational& cost0, std::size_t col_limit) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t c = 0; c < col_limit; ++c) {
        if (cost[c].sign() < 0) {
          enter = c;
          break;
        }
      }
      if (enter == kNone) return LPStatus::Optimal;

      std::size_t leave = kNone;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (a_.at(r, enter).sign() <= 0) continue;
        Rational ratio = b_[r] / a_.at(r, enter);
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == kNone) return LPStatus::Unbounded;

      // Fold the objective row update into the pivot.
      pivot(leave, enter);
      const Rational f = cost[enter];
      if (!f.is_zero()) {
        for (std::size_t c = 0; c < cols_; ++c) cost[c] -= f * a_.at(leave, c);
        cost0 -= f * b_[leave];
      }
    }
  }

 private:
  std::size_t rows_, cols_;
  RatMatrix a_;
  RatVector b_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LPOutcome solve(const LPProblem& p) {
  if (p.objective.size() != p.ambient_dim) {
    throw std::invalid_argument("solve: objective dimension mismatch");
  }
  for (const auto& c : p.constraints) {
    if (c.coeffs.size() != p.ambient_dim) {
      throw std::invalid_argument("solve: constraint dimension mismatch");
    }
    if (c.rel == Relation::StrictLess) {
      throw std::invalid_argument("solve: strict constraints are not allowed here");
    }
  }

  const std::size_t n = p.ambient_dim;
  const std::size_t m = p.constraints.size();
  std::size_t n_slack = 0;
  for (const auto& c : p.constraints) {
    if (c.rel == Relation::LessEq) ++n_slack;
  }
  const std::size_t n_struct = 2 * n + n_slack;
  const std::size_t n_total = n_struct + m;  // worst case: artificial per row

  Tableau t(m, n_total);
  std::size_t slack_idx = 0;
  std::vector<std::size_t> art_cols;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = p.constraints[r];
    const bool flip = c.rhs.sign() < 0;
    const Rational s = flip ? Rational(-1) : Rational(1);
    for (std::size_t j = 0; j < n; ++j) {
      t.a(r, j) = s * c.coeffs[j];
      t.a(r, n + j) = -s * c.coeffs[j];
    }
    Rational slack_coeff;
    if (c.rel == Relation::LessEq) {
      slack_coeff = s;
      t.a(r, 2 * n + slack_idx) = slack_coeff;
    }
    t.b(r) = s * c.rhs;

    if (c.rel == Relation::LessEq && !flip) {
      t.set_basis(r, 2 * n + slack_idx);
    } else {
      const std::size_t art = n_struct + art_cols.size();
      t.a(r, art) = 1;
      t.set_basis(r, art);
      art_cols.push_back(art);
    }
    if (c.rel == Relation::LessEq) ++slack_idx;
  }

  // Phase 1: minimize the sum of artificials.
  if (!art_cols.empty()) {
    RatVector cost(n_total);
    Rational cost0;
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis(r) >= n_struct) {
        for (std::size_t c = 0; c < n_total; ++c) cost[c] -= t.a(r, c);
        cost0 -= t.b(r);
      }
    }
    for (std::size_t c : art_cols) cost[c] += 1;
    const LPStatus st = t.iterate(cost, cost0, n_struct);
    (void)st;  // phase 1 is bounded below by 0
    if ((-cost0).sign() > 0) return {LPStatus::Infeasible, Rational(), {}};

    // Drive leftover artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis(r) < n_struct) continue;
      std::size_t pc = kNone;
      for (std::size_t c = 0; c < n_struct; ++c) {
        if (!t.a(r, c).is_zero()) {
          pc = c;
          break;
        }
      }
      if (pc == kNone) continue;  // redundant row, stays at zero level
      t.pivot(r, pc);
    }
  }

  // Phase 2.
  RatVector obj(n_total);
  const Rational sense = p.sense == Sense::Maximize ? Rational(-1) : Rational(1);
  for (std::size_t j = 0; j < n; ++j) {
    obj[j] = sense * p.objective[j];
    obj[n + j] = -sense * p.objective[j];
  }
  RatVector cost = obj;
  Rational cost0;
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t bc = t.basis(r);
    if (bc >= n_total || obj[bc].is_zero()) continue;
    const Rational f = obj[bc];
    for (std::size_t c = 0; c < n_total; ++c) cost[c] -= f * t.a(r, c);
    cost0 -= f * t.b(r);
  }
  // Basic artificials sit at level zero and must not re-enter: restrict
  // entering columns to the structural block.
  const LPStatus st = t.iterate(cost, cost0, n_struct);
  if (st == LPStatus::Unbounded) return {LPStatus::Unbounded, Rational(), {}};

  RatVector x(n);
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t bc = t.basis(r);
    if (bc < n) {
      x[bc] += t.b(r);
    } else if (bc < 2 * n) {
      x[bc - n] -= t.b(r);
    }
  }
  return {LPStatus::Optimal, dot(p.objective, x), std::move(x)};
}

StrictFeasibility strictly_feasible(std::size_t ambient_dim,
                                    const std::vector<LinearConstraint>& constraints) {
  LPProblem p;
  p.ambient_dim = ambient_dim + 1;  // extra slack variable t, maximized
  p.sense = Sense::Maximize;
  p.objective.assign(p.ambient_dim, Rational(0));
  p.objective[ambient_dim] = 1;

  for (const auto& c : constraints) {
    if (c.coeffs.size() != ambient_dim) {
      throw std::invalid_argument("strictly_feasible: constraint dimension mismatch");
    }
    LinearConstraint e;
    e.coeffs = c.coeffs;
    e.coeffs.push_back(c.rel == Relation::StrictLess ? Rational(1) : Rational(0));
    e.rel = c.rel == Relation::StrictLess ? Relation::LessEq : c.rel;
    e.rhs = c.rhs;
    p.constraints.push_back(std::move(e));
  }
  {
    LinearConstraint cap;  // homogeneous systems would otherwise be unbounded
    cap.coeffs.assign(p.ambient_dim, Rational(0));
    cap.coeffs[ambient_dim] = 1;
    cap.rel = Relation::LessEq;
    cap.rhs = 1;
    p.constraints.push_back(std::move(cap));
  }

  const LPOutcome out = solve(p);
  if (out.status != LPStatus::Optimal || out.value.sign() <= 0) return {false, {}};
  RatVector witness(out.witness.begin(), out.witness.begin() + ambient_dim);
  return {true, std::move(witness)};
}

std::optional<std::size_t> polyhedron_dimension(std::size_t ambient_dim,
                                                const std::vector<LinearConstraint>& constraints) {
  for (const auto& c : constraints) {
    if (c.rel == Relation::StrictLess) {
      throw std::invalid_argument("polyhedron_dimension: strict constraints not allowed");
    }
  }
  LPProblem feas;
  feas.ambient_dim = ambient_dim;
  feas.constraints = constraints;
  feas.objective.assign(ambient_dim, Rational(0));
  if (solve(feas).status == LPStatus::Infeasible) return std::nullopt;

  std::vector<RatVector> equality_normals;
  for (const auto& c : constraints) {
    if (c.rel == Relation::Equal) equality_normals.push_back(c.coeffs);
  }
  for (const auto& c : constraints) {
    if (c.rel != Relation::LessEq) continue;
    // a·x <= b holds with equality on the whole set iff min a·x equals b
    LPProblem p;
    p.ambient_dim = ambient_dim;
    p.constraints = constraints;
    p.objective = c.coeffs;
    p.sense = Sense::Minimize;
    const LPOutcome out = solve(p);
    if (out.status == LPStatus::Optimal && out.value == c.rhs) {
      equality_normals.push_back(c.coeffs);
    }
  }
  if (equality_normals.empty()) return ambient_dim;

  RatMatrix normals(equality_normals.size(), ambient_dim);
  for (std::size_t r = 0; r < equality_normals.size(); ++r) {
    for (std::size_t c = 0; c < ambient_dim; ++c) normals.at(r, c) = equality_normals[r][c];
  }
  return ambient_dim - rank(normals);
}

}  // namespace linftrees
