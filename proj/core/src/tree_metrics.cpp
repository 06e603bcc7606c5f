#include "linftrees/tree_metrics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "linftrees/errors.hpp"

namespace linftrees {

namespace {

Rational dist_at(const DissimilarityMap& d, std::size_t a, std::size_t b) {
  return a == b ? Rational(0) : d.at(a, b);
}

bool four_point_holds(const DissimilarityMap& d, std::size_t w, std::size_t x, std::size_t y,
                      std::size_t z) {
  const Rational s1 = dist_at(d, w, x) + dist_at(d, y, z);
  const Rational s2 = dist_at(d, w, y) + dist_at(d, x, z);
  const Rational s3 = dist_at(d, w, z) + dist_at(d, x, y);
  return s1 <= max(s2, s3);
}

}  // namespace

bool four_point_check(const DissimilarityMap& d) {
  const std::size_t n = d.n();
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (!four_point_holds(d, w, x, y, z)) return false;
        }
      }
    }
  }
  return true;
}

bool distinct_four_point_check(const DissimilarityMap& d) {
  const std::size_t n = d.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          // over distinct elements, all orderings reduce to: the max of the
          // three pair sums is attained at least twice
          const Rational s1 = d.at(i, j) + d.at(k, l);
          const Rational s2 = d.at(i, k) + d.at(j, l);
          const Rational s3 = d.at(i, l) + d.at(j, k);
          const Rational m = max(s1, max(s2, s3));
          int hits = 0;
          if (s1 == m) ++hits;
          if (s2 == m) ++hits;
          if (s3 == m) ++hits;
          if (hits < 2) return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Maps t's leaves onto delta's label indexing; throws on label mismatch.
std::vector<std::size_t> leaf_permutation(const DissimilarityMap& delta,
                                          const UnrootedTopology& t) {
  std::vector<std::size_t> perm(t.leaf_count());
  for (std::size_t i = 0; i < t.leaf_count(); ++i) {
    perm[i] = delta.label_index(t.labels()[i]);
  }
  return perm;
}

// Constraints on (w, eps): |delta_ij - path sum| <= eps plus the mode's edge
// bounds. Variables are the edges of t followed by eps.
std::vector<LinearConstraint> fit_constraints(const DissimilarityMap& delta,
                                              const UnrootedTopology& t, FitMode mode) {
  const std::size_t n = t.leaf_count();
  const std::size_t n_edges = t.edges().size();
  const auto paths = t.pair_edge_paths();
  const auto perm = leaf_permutation(delta, t);
  std::vector<LinearConstraint> cs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& path = paths[DissimilarityMap::pair_index(n, i, j)];
      const Rational d = delta.at(perm[i], perm[j]);
      LinearConstraint up;  // path sum - eps <= d
      up.coeffs.assign(n_edges + 1, Rational(0));
      for (std::size_t e : path) up.coeffs[e] = 1;
      up.coeffs[n_edges] = -1;
      up.rhs = d;
      cs.push_back(std::move(up));
      LinearConstraint lo;  // -path sum - eps <= -d
      lo.coeffs.assign(n_edges + 1, Rational(0));
      for (std::size_t e : path) lo.coeffs[e] = -1;
      lo.coeffs[n_edges] = -1;
      lo.rhs = -d;
      cs.push_back(std::move(lo));
    }
  }
  for (std::size_t e = 0; e < n_edges; ++e) {
    if (mode == FitMode::Grassmannian && !t.edge_is_internal(e)) continue;
    LinearConstraint nn;  // -w_e <= 0
    nn.coeffs.assign(n_edges + 1, Rational(0));
    nn.coeffs[e] = -1;
    nn.rhs = 0;
    cs.push_back(std::move(nn));
  }
  return cs;
}

Rational fit_distance(const DissimilarityMap& delta, const UnrootedTopology& t, FitMode mode) {
  const std::size_t n_edges = t.edges().size();
  LPProblem p;
  p.ambient_dim = n_edges + 1;
  p.constraints = fit_constraints(delta, t, mode);
  p.objective.assign(n_edges + 1, Rational(0));
  p.objective[n_edges] = 1;
  p.sense = Sense::Minimize;
  const LPOutcome out = solve(p);
  if (out.status != LPStatus::Optimal) {
    throw std::logic_error("fit_topology: the fit LP is always solvable");
  }
  return out.value;
}

// The achieving polyhedron in edge-weight space: substitute eps = distance.
std::vector<LinearConstraint> achieving_polyhedron(const DissimilarityMap& delta,
                                                   const UnrootedTopology& t, FitMode mode,
                                                   const Rational& distance) {
  const std::size_t n_edges = t.edges().size();
  std::vector<LinearConstraint> cs;
  for (LinearConstraint c : fit_constraints(delta, t, mode)) {
    const Rational eps_coeff = c.coeffs[n_edges];
    c.coeffs.resize(n_edges);
    c.rhs -= eps_coeff * distance;
    cs.push_back(std::move(c));
  }
  return cs;
}

void check_tree_guard(const DissimilarityMap& delta, const char* what) {
  if (delta.n() < 4 || delta.n() > 6) {
    throw GuardViolation(std::string(what) + " supports 4 <= n <= 6, got n = " +
                         std::to_string(delta.n()));
  }
}

}  // namespace

TopologyFit fit_topology(const DissimilarityMap& delta, const UnrootedTopology& t, FitMode mode) {
  TopologyFit fit{t, fit_distance(delta, t, mode), {}, 0};
  fit.polyhedron = achieving_polyhedron(delta, t, mode, fit.distance);
  const auto dim = polyhedron_dimension(t.edges().size(), fit.polyhedron);
  if (!dim) throw std::logic_error("fit_topology: achieving polyhedron cannot be empty");
  fit.dimension = *dim;
  return fit;
}

TreeDistanceResult distance_to_tree_metrics(const DissimilarityMap& delta, FitMode mode) {
  check_tree_guard(delta, "distance_to_tree_metrics");
  TreeDistanceResult res;
  bool first = true;
  for (const UnrootedTopology& t : enumerate_unrooted_binary(delta.labels())) {
    const Rational d = fit_distance(delta, t, mode);
    if (first || d < res.distance) res.distance = d;
    first = false;
    res.table.push_back({t, d});
  }
  return res;
}

ComponentReport closest_tree_components(const DissimilarityMap& delta, FitMode mode) {
  check_tree_guard(delta, "closest_tree_components");
  const TreeDistanceResult sweep = distance_to_tree_metrics(delta, mode);
  ComponentReport report;
  report.distance = sweep.distance;
  for (const auto& [t, d] : sweep.table) {
    if (d == sweep.distance) report.attaining.push_back(fit_topology(delta, t, mode));
  }

  const std::size_t k = report.attaining.size();
  const std::size_t n = delta.n();
  std::vector<std::size_t> uf(k);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) -> std::size_t {
    return uf[a] == a ? a : uf[a] = find(uf[a]);
  };

  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      // Two attaining polyhedra meet iff some metric is realized by both
      // topologies within the distance ball: joint LP over (w_a, w_b) with
      // equal path sums on every pair.
      const auto& ta = report.attaining[a].topology;
      const auto& tb = report.attaining[b].topology;
      const std::size_t ea = ta.edges().size(), eb = tb.edges().size();
      std::vector<LinearConstraint> joint;
      for (const LinearConstraint& c : report.attaining[a].polyhedron) {
        LinearConstraint e = c;
        e.coeffs.resize(ea + eb, Rational(0));
        joint.push_back(std::move(e));
      }
      for (const LinearConstraint& c : report.attaining[b].polyhedron) {
        LinearConstraint e;
        e.coeffs.assign(ea + eb, Rational(0));
        for (std::size_t x = 0; x < eb; ++x) e.coeffs[ea + x] = c.coeffs[x];
        e.rel = c.rel;
        e.rhs = c.rhs;
        joint.push_back(std::move(e));
      }
      const auto paths_a = ta.pair_edge_paths();
      const auto paths_b = tb.pair_edge_paths();
      const auto perm_a = leaf_permutation(delta, ta);
      const auto perm_b = leaf_permutation(delta, tb);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          LinearConstraint eq;
          eq.coeffs.assign(ea + eb, Rational(0));
          eq.rel = Relation::Equal;
          eq.rhs = 0;
          // locate the pair in each topology's own leaf order
          std::size_t ia = 0, ja = 0, ib = 0, jb = 0;
          for (std::size_t x = 0; x < n; ++x) {
            if (perm_a[x] == i) ia = x;
            if (perm_a[x] == j) ja = x;
            if (perm_b[x] == i) ib = x;
            if (perm_b[x] == j) jb = x;
          }
          for (std::size_t e : paths_a[DissimilarityMap::pair_index(n, std::min(ia, ja),
                                                                    std::max(ia, ja))]) {
            eq.coeffs[e] += 1;
          }
          for (std::size_t e : paths_b[DissimilarityMap::pair_index(n, std::min(ib, jb),
                                                                    std::max(ib, jb))]) {
            eq.coeffs[ea + e] -= 1;
          }
          joint.push_back(std::move(eq));
        }
      }
      LPProblem p;
      p.ambient_dim = ea + eb;
      p.constraints = std::move(joint);
      p.objective.assign(ea + eb, Rational(0));
      if (solve(p).status == LPStatus::Optimal) {
        report.adjacency.push_back({a, b});
        uf[find(a)] = find(b);
      }
    }
  }

  report.component_of.resize(k);
  std::vector<std::size_t> roots;
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t r = find(a);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      it = roots.end() - 1;
    }
    report.component_of[a] = static_cast<std::size_t>(it - roots.begin());
  }
  report.component_count = roots.size();
  return report;
}

RatMatrix quartet_equality_matrix(const UnrootedTopology& t) {
  const std::size_t n = t.leaf_count();
  const auto list = quartet_index_list(t);
  RatMatrix m(list.size(), n * (n - 1) / 2);
  for (std::size_t r = 0; r < list.size(); ++r) {
    const auto [i, j, k, l] = list[r];
    m.at(r, DissimilarityMap::pair_index(n, std::min(i, k), std::max(i, k))) += 1;
    m.at(r, DissimilarityMap::pair_index(n, std::min(j, l), std::max(j, l))) += 1;
    m.at(r, DissimilarityMap::pair_index(n, std::min(i, l), std::max(i, l))) -= 1;
    m.at(r, DissimilarityMap::pair_index(n, std::min(j, k), std::max(j, k))) -= 1;
  }
  return m;
}

LinearSubspace topology_affine_hull(const UnrootedTopology& t) {
  return LinearSubspace::from_kernel_of(quartet_equality_matrix(t));
}

DissimilarityMap construct_tree_dim_witness(const UnrootedTopology& t, const DissimilarityMap& z,
                                            const std::string& leaf_i, const std::string& leaf_j,
                                            const std::string& leaf_k, const std::string& leaf_l,
                                            const Rational& eps) {
  if (!t.is_binary()) {
    throw std::invalid_argument("construct_tree_dim_witness: topology must be binary");
  }
  if (eps.sign() <= 0) {
    throw std::invalid_argument("construct_tree_dim_witness: eps must be positive");
  }
  const std::size_t i = z.label_index(leaf_i);
  const std::size_t j = z.label_index(leaf_j);
  const std::size_t k = z.label_index(leaf_k);
  const std::size_t l = z.label_index(leaf_l);

  // quartet ij|kl must be induced by t (checked against t's own leaf indexing)
  bool induced = false;
  const auto perm = leaf_permutation(z, t);
  for (const auto& q : quartet_index_list(t)) {
    const std::size_t qi = perm[q[0]], qj = perm[q[1]], qk = perm[q[2]], ql = perm[q[3]];
    if ((std::min(qi, qj) == std::min(i, j) && std::max(qi, qj) == std::max(i, j) &&
         std::min(qk, ql) == std::min(k, l) && std::max(qk, ql) == std::max(k, l)) ||
        (std::min(qi, qj) == std::min(k, l) && std::max(qi, qj) == std::max(k, l) &&
         std::min(qk, ql) == std::min(i, j) && std::max(qk, ql) == std::max(i, j))) {
      induced = true;
      break;
    }
  }
  if (!induced) {
    throw std::invalid_argument("construct_tree_dim_witness: quartet is not induced by t");
  }
  if (!(fit_distance(z, t, FitMode::TreeMetric) == Rational(0))) {
    throw std::invalid_argument("construct_tree_dim_witness: z is not a tree metric on t");
  }

  DissimilarityMap delta = z;
  delta.at(i, k) += eps;
  delta.at(j, l) += eps;
  delta.at(i, l) -= eps;
  delta.at(j, k) -= eps;

  const std::size_t n = z.n();
  const ComponentReport report = closest_tree_components(delta, FitMode::TreeMetric);
  if (report.attaining.size() != 1 || !(report.attaining[0].topology == t)) {
    throw std::invalid_argument(
        "construct_tree_dim_witness: eps too large, the minimum is not attained on t alone");
  }
  if (report.attaining[0].dimension != 2 * n - 6) {
    throw std::invalid_argument(
        "construct_tree_dim_witness: eps too large, dimension is not 2n - 6");
  }
  return delta;
}

}  // namespace linftrees
