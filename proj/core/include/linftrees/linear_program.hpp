#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "linftrees/rational.hpp"

namespace linftrees {

enum class Relation { LessEq, Equal, StrictLess };

/// coeffs · x  {<=, =, <}  rhs over free (sign-unrestricted) variables.
struct LinearConstraint {
  RatVector coeffs;
  Relation rel = Relation::LessEq;
  Rational rhs;
};

enum class Sense { Minimize, Maximize };
enum class LPStatus { Optimal, Unbounded, Infeasible };

struct LPProblem {
  std::size_t ambient_dim = 0;
  std::vector<LinearConstraint> constraints;  // LessEq / Equal only
  RatVector objective;
  Sense sense = Sense::Minimize;
};

struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  Rational value;      // objective at witness, when Optimal
  RatVector witness;   // feasible point, when Optimal
};

/// Exact two-phase simplex with Bland's anti-cycling rule. Deterministic.
LPOutcome solve(const LPProblem& p);

struct StrictFeasibility {
  bool feasible = false;
  RatVector witness;  // satisfies every strict constraint strictly, when feasible
};

/// Decides whether some point satisfies all LessEq/Equal constraints and all
/// StrictLess constraints strictly. Each strict row a·x < b is relaxed to
/// a·x + t <= b; the system is strictly feasible iff max t (capped at 1) is
/// positive.
StrictFeasibility strictly_feasible(std::size_t ambient_dim,
                                    const std::vector<LinearConstraint>& constraints);

/// Dimension of the affine hull of the feasible set of a non-strict system,
/// or nullopt when the set is empty. An inequality a·x <= b is an implicit
/// equality iff max a·x over the set equals b; the dimension is ambient_dim
/// minus the rank of all equality normals.
std::optional<std::size_t> polyhedron_dimension(std::size_t ambient_dim,
                                                const std::vector<LinearConstraint>& constraints);

}  // namespace linftrees
