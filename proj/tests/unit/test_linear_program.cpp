#include "doctest.h"

#include "linftrees/linear_program.hpp"
#include "oracles.hpp"

using namespace linftrees;

namespace {

LinearConstraint row(RatVector coeffs, Relation rel, Rational rhs) {
  return LinearConstraint{std::move(coeffs), rel, std::move(rhs)};
}

bool satisfies(const RatVector& x, const std::vector<LinearConstraint>& cs) {
  for (const auto& c : cs) {
    const Rational lhs = dot(c.coeffs, x);
    switch (c.rel) {
      case Relation::LessEq:
        if (lhs > c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::StrictLess:
        if (!(lhs < c.rhs)) return false;
        break;
    }
  }
  return true;
}

// |x_i| <= bound for every variable
void add_box(std::vector<LinearConstraint>& cs, std::size_t n, long bound) {
  for (std::size_t i = 0; i < n; ++i) {
    RatVector up(n), lo(n);
    up[i] = 1;
    lo[i] = -1;
    cs.push_back(row(up, Relation::LessEq, Rational(bound)));
    cs.push_back(row(lo, Relation::LessEq, Rational(bound)));
  }
}

}  // namespace

TEST_SUITE_BEGIN("linear_program");

TEST_CASE("one-variable fixed outcomes") {
  LPProblem p;
  p.ambient_dim = 1;
  p.objective = {Rational(1)};
  p.sense = Sense::Maximize;

  p.constraints = {row({Rational(1)}, Relation::LessEq, 3)};
  auto out = solve(p);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.value == Rational(3));
  CHECK(out.witness == RatVector{Rational(3)});

  p.constraints = {row({Rational(-1)}, Relation::LessEq, 0)};
  CHECK(solve(p).status == LPStatus::Unbounded);

  p.constraints = {row({Rational(1)}, Relation::LessEq, 0),
                   row({Rational(-1)}, Relation::LessEq, -1)};
  CHECK(solve(p).status == LPStatus::Infeasible);
}

TEST_CASE("degenerate and equality-heavy systems") {
  LPProblem p;  // min x + y s.t. x + y = 2, x - y = 0
  p.ambient_dim = 2;
  p.objective = {Rational(1), Rational(1)};
  p.sense = Sense::Minimize;
  p.constraints = {row({Rational(1), Rational(1)}, Relation::Equal, 2),
                   row({Rational(1), Rational(-1)}, Relation::Equal, 0)};
  const auto out = solve(p);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.witness == RatVector{Rational(1), Rational(1)});

  // redundant duplicated equality must not confuse phase 1
  p.constraints.push_back(row({Rational(2), Rational(2)}, Relation::Equal, 4));
  CHECK(solve(p).status == LPStatus::Optimal);

  CHECK_THROWS_AS(solve(LPProblem{1, {row({Rational(1)}, Relation::StrictLess, 1)}, {Rational(1)},
                                  Sense::Maximize}),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve(LPProblem{2, {row({Rational(1)}, Relation::LessEq, 1)},
                                  {Rational(1), Rational(0)}, Sense::Maximize}),
                  std::invalid_argument);
}

TEST_CASE("witnesses are exactly feasible on seeded random solvable LPs") {
  oracles::Rng rng(7);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 1 + rng.integer(0, 2);
    std::vector<LinearConstraint> cs;
    const RatVector x0 = rng.vector(n, -3, 3);
    for (int k = rng.integer(1, 4); k > 0; --k) {
      RatVector a = rng.vector(n, -3, 3, 1);
      cs.push_back(row(a, Relation::LessEq, dot(a, x0) + Rational(rng.integer(0, 5))));
    }
    add_box(cs, n, 50);
    LPProblem p{n, cs, rng.vector(n, -3, 3, 1), rng.integer(0, 1) ? Sense::Maximize
                                                                  : Sense::Minimize};
    const auto out = solve(p);
    REQUIRE(out.status == LPStatus::Optimal);
    CHECK(satisfies(out.witness, cs));
    CHECK(out.value == dot(p.objective, out.witness));
  }
}

TEST_CASE("strong duality on seeded random bounded LPs") {
  // primal: max c.x s.t. Ax <= b (box included); dual: min b.y, A^T y = c, y >= 0
  oracles::Rng rng(11);
  for (int it = 0; it < 25; ++it) {
    const std::size_t n = 1 + rng.integer(0, 2);
    std::vector<LinearConstraint> cs;
    const RatVector x0 = rng.vector(n, -2, 2);
    for (int k = rng.integer(1, 3); k > 0; --k) {
      RatVector a = rng.vector(n, -3, 3, 1);
      cs.push_back(row(a, Relation::LessEq, dot(a, x0) + Rational(rng.integer(0, 4))));
    }
    add_box(cs, n, 20);
    const RatVector c = rng.vector(n, -3, 3, 1);
    const auto primal = solve(LPProblem{n, cs, c, Sense::Maximize});
    REQUIRE(primal.status == LPStatus::Optimal);

    const std::size_t m = cs.size();
    std::vector<LinearConstraint> dual_cs;
    for (std::size_t j = 0; j < n; ++j) {
      RatVector col(m);
      for (std::size_t i = 0; i < m; ++i) col[i] = cs[i].coeffs[j];
      dual_cs.push_back(row(col, Relation::Equal, c[j]));
    }
    for (std::size_t i = 0; i < m; ++i) {
      RatVector e(m);
      e[i] = -1;
      dual_cs.push_back(row(e, Relation::LessEq, 0));
    }
    RatVector b(m);
    for (std::size_t i = 0; i < m; ++i) b[i] = cs[i].rhs;
    const auto dual = solve(LPProblem{m, dual_cs, b, Sense::Minimize});
    REQUIRE(dual.status == LPStatus::Optimal);
    CHECK(primal.value == dual.value);
  }
}

TEST_CASE("strict feasibility via slack maximization") {
  // {x < 1, x >= 0}
  auto r1 = strictly_feasible(
      1, {row({Rational(1)}, Relation::StrictLess, 1), row({Rational(-1)}, Relation::LessEq, 0)});
  REQUIRE(r1.feasible);
  CHECK(r1.witness[0] < Rational(1));
  CHECK(r1.witness[0] >= Rational(0));

  // {x < 0, x >= 0}
  CHECK_FALSE(strictly_feasible(1, {row({Rational(1)}, Relation::StrictLess, 0),
                                    row({Rational(-1)}, Relation::LessEq, 0)})
                  .feasible);

  // no strict rows: plain feasibility
  CHECK(strictly_feasible(1, {row({Rational(1)}, Relation::LessEq, 1)}).feasible);
  CHECK_FALSE(strictly_feasible(1, {row({Rational(1)}, Relation::LessEq, 0),
                                    row({Rational(-1)}, Relation::LessEq, -1)})
                  .feasible);
}

TEST_CASE("exact-topology system around (2,4,6,8,10,12) is strictly feasible") {
  // caterpillar heights h1 < h2 < h3 inside the radius-3 bands of
  // (2,4,6,8,10,12); (5,7,9) is a strict witness
  std::vector<LinearConstraint> cs;
  const long delta[6] = {2, 4, 6, 8, 10, 12};
  const int lca[6] = {0, 1, 2, 1, 2, 2};  // pair order AB,AC,AD,BC,BD,CD
  for (int p = 0; p < 6; ++p) {
    RatVector up(3), lo(3);
    up[lca[p]] = 1;
    lo[lca[p]] = -1;
    cs.push_back(row(up, Relation::LessEq, Rational(delta[p] + 3)));
    cs.push_back(row(lo, Relation::LessEq, Rational(3 - delta[p])));
  }
  cs.push_back(row({Rational(1), Rational(-1), Rational(0)}, Relation::StrictLess, 0));
  cs.push_back(row({Rational(0), Rational(1), Rational(-1)}, Relation::StrictLess, 0));
  const auto r = strictly_feasible(3, cs);
  REQUIRE(r.feasible);
  CHECK(satisfies(r.witness, cs));
  CHECK(r.witness[2] == Rational(9));  // root band pins to 9 exactly
}

TEST_CASE("polyhedron dimension fixed cases") {
  std::vector<LinearConstraint> cube;
  add_box(cube, 3, 1);
  CHECK(polyhedron_dimension(3, cube) == 3);

  CHECK(polyhedron_dimension(2, {row({Rational(1), Rational(0)}, Relation::Equal, 0)}) == 1);

  // C(x, L) for x = (0,0,-1), L = {(t,t,0)}: a segment
  std::vector<LinearConstraint> cs = {
      row({Rational(1), Rational(-1), Rational(0)}, Relation::Equal, 0),
      row({Rational(0), Rational(0), Rational(1)}, Relation::Equal, 0)};
  const long x[3] = {0, 0, -1};
  for (int i = 0; i < 3; ++i) {
    RatVector up(3), lo(3);
    up[i] = 1;
    lo[i] = -1;
    cs.push_back(row(up, Relation::LessEq, Rational(x[i] + 1)));
    cs.push_back(row(lo, Relation::LessEq, Rational(1 - x[i])));
  }
  CHECK(polyhedron_dimension(3, cs) == 1);

  CHECK(polyhedron_dimension(1, {row({Rational(1)}, Relation::LessEq, 0),
                                 row({Rational(-1)}, Relation::LessEq, -1)}) == std::nullopt);
  CHECK_THROWS_AS(polyhedron_dimension(1, {row({Rational(1)}, Relation::StrictLess, 1)}),
                  std::invalid_argument);
}

TEST_CASE("polyhedron dimension matches vertex enumeration on seeded systems") {
  oracles::Rng rng(13);
  for (int it = 0; it < 30; ++it) {
    const std::size_t n = 1 + rng.integer(0, 2);
    std::vector<LinearConstraint> cs;
    const RatVector x0 = rng.vector(n, -2, 2, 2);
    for (int k = rng.integer(0, 4); k > 0; --k) {
      RatVector a = rng.vector(n, -2, 2, 1);
      const bool eq = rng.integer(0, 4) == 0;
      cs.push_back(row(a, eq ? Relation::Equal : Relation::LessEq,
                       dot(a, x0) + (eq ? Rational(0) : Rational(rng.integer(0, 3)))));
    }
    add_box(cs, n, 6);
    const auto fast = polyhedron_dimension(n, cs);
    const auto oracle = oracles::dimension_by_vertices(n, cs);
    REQUIRE(fast.has_value());
    REQUIRE(oracle.has_value());
    CHECK(*fast == *oracle);
  }
}

TEST_CASE("strictly feasible implies the closed system is feasible") {
  oracles::Rng rng(17);
  for (int it = 0; it < 30; ++it) {
    const std::size_t n = 1 + rng.integer(0, 2);
    std::vector<LinearConstraint> cs;
    for (int k = rng.integer(1, 5); k > 0; --k) {
      RatVector a = rng.vector(n, -2, 2, 1);
      cs.push_back(row(a, rng.integer(0, 1) ? Relation::StrictLess : Relation::LessEq,
                       rng.rational(-4, 4, 2)));
    }
    if (!strictly_feasible(n, cs).feasible) continue;
    std::vector<LinearConstraint> closed;
    for (auto c : cs) {
      if (c.rel == Relation::StrictLess) c.rel = Relation::LessEq;
      closed.push_back(std::move(c));
    }
    LPProblem p{n, closed, RatVector(n, Rational(0)), Sense::Minimize};
    CHECK(solve(p).status == LPStatus::Optimal);
  }
}

TEST_SUITE_END();
