#include "linftrees/ultrametrics.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>

#include "linftrees/errors.hpp"

namespace linftrees {

bool is_ultrametric(const DissimilarityMap& d) {
  const std::size_t n = d.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Rational& a = d.at(i, j);
        const Rational& b = d.at(i, k);
        const Rational& c = d.at(j, k);
        if (a > max(b, c) || b > max(a, c) || c > max(a, b)) return false;
      }
    }
  }
  return true;
}

DissimilarityMap subdominant(const DissimilarityMap& delta) {
  const std::size_t n = delta.n();
  DissimilarityMap u = delta;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j == k) continue;
        const Rational via = max(u.at(i, k), u.at(k, j));
        if (via < u.at(i, j)) u.at(i, j) = via;
      }
    }
  }
  return u;
}

Rational distance_to_ultrametrics(const DissimilarityMap& delta) {
  if (delta.n() <= 2) return 0;
  return linf_gap(delta, subdominant(delta)) / Rational(2);
}

DissimilarityMap canonical_closest(const DissimilarityMap& delta) {
  return subdominant(delta).shifted(distance_to_ultrametrics(delta));
}

bool in_closest_set(const DissimilarityMap& delta, const DissimilarityMap& u) {
  if (!is_ultrametric(u)) return false;
  return linf_gap(delta, u) == distance_to_ultrametrics(delta);
}

std::vector<LinearConstraint> equidistant_ball_constraints(const FlatRootedView& view,
                                                           const DissimilarityMap& delta,
                                                           const Rational& radius,
                                                           bool strict_order) {
  const std::size_t n = view.n_leaves;
  const std::size_t vars = view.n_internal;
  std::vector<LinearConstraint> cs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int v = view.lca[i][j];
      LinearConstraint up;  // h_v <= delta_ij + r
      up.coeffs.assign(vars, Rational(0));
      up.coeffs[v] = 1;
      up.rhs = delta.at(i, j) + radius;
      cs.push_back(std::move(up));
      LinearConstraint lo;  // -h_v <= -(delta_ij - r)
      lo.coeffs.assign(vars, Rational(0));
      lo.coeffs[v] = -1;
      lo.rhs = radius - delta.at(i, j);
      cs.push_back(std::move(lo));
    }
  }
  for (std::size_t v = 1; v < vars; ++v) {
    LinearConstraint order;  // h_v < h_parent (or <= when closed)
    order.coeffs.assign(vars, Rational(0));
    order.coeffs[v] = 1;
    order.coeffs[view.parent[v]] = -1;
    order.rel = strict_order ? Relation::StrictLess : Relation::LessEq;
    order.rhs = 0;
    cs.push_back(std::move(order));
  }
  return cs;
}

namespace {

void check_top_guard(const DissimilarityMap& delta, const char* what) {
  if (delta.n() > 6) {
    throw GuardViolation(std::string(what) + " supports n <= 6, got n = " +
                         std::to_string(delta.n()));
  }
}

// Per-vertex interval [max(delta_ij - r), min(delta_ij + r)] over the pairs
// whose lca is that vertex. An empty interval refutes membership before any
// LP runs.
bool vertex_boxes_nonempty(const FlatRootedView& view, const DissimilarityMap& delta,
                           const Rational& radius) {
  const std::size_t n = view.n_leaves;
  std::vector<std::optional<std::pair<Rational, Rational>>> box(view.n_internal);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int v = view.lca[i][j];
      const Rational lo = delta.at(i, j) - radius;
      const Rational hi = delta.at(i, j) + radius;
      if (!box[v]) {
        box[v] = {lo, hi};
      } else {
        box[v]->first = max(box[v]->first, lo);
        box[v]->second = min(box[v]->second, hi);
      }
    }
  }
  for (const auto& b : box) {
    if (b && b->first > b->second) return false;
  }
  return true;
}

}  // namespace

std::vector<RootedTopology> top_set(const DissimilarityMap& delta) {
  check_top_guard(delta, "top_set");
  const Rational r = distance_to_ultrametrics(delta);
  std::vector<RootedTopology> out;
  for (const RootedTopology& t : enumerate_rooted(delta.labels(), /*binary_only=*/false)) {
    const FlatRootedView view = flatten(t, delta.labels());
    if (!vertex_boxes_nonempty(view, delta, r)) continue;
    const auto cs = equidistant_ball_constraints(view, delta, r, /*strict_order=*/true);
    if (strictly_feasible(view.n_internal, cs).feasible) out.push_back(t);
  }
  return out;  // enumerate_rooted is already canonically ordered
}

std::string district_label(const std::vector<RootedTopology>& topologies) {
  std::vector<std::string> parts;
  parts.reserve(topologies.size());
  for (const auto& t : topologies) parts.push_back(t.str());
  std::sort(parts.begin(), parts.end());
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  out += '}';
  return out;
}

std::string district(const DissimilarityMap& delta) { return district_label(top_set(delta)); }

std::size_t closest_set_dimension(const DissimilarityMap& delta) {
  check_top_guard(delta, "closest_set_dimension");
  const Rational r = distance_to_ultrametrics(delta);
  std::size_t best = 0;
  bool any = false;
  for (const RootedTopology& t : enumerate_rooted(delta.labels(), /*binary_only=*/true)) {
    const FlatRootedView view = flatten(t, delta.labels());
    if (!vertex_boxes_nonempty(view, delta, r)) continue;
    const auto cs = equidistant_ball_constraints(view, delta, r, /*strict_order=*/false);
    const auto dim = polyhedron_dimension(view.n_internal, cs);
    if (dim) {
      any = true;
      best = std::max(best, *dim);
    }
  }
  if (!any) {
    throw std::logic_error("closest_set_dimension: no binary cone met the ball");
  }
  return best;
}

std::vector<DissimilarityMap> census_points(const CensusOptions& options) {
  // Six distinct primes, all larger than any coefficient in the fan's
  // defining inequalities, one per coordinate: two jittered coordinates can
  // never be equal and no small integer relation can vanish on a sample.
  static const long kPrimes[6] = {101, 103, 107, 109, 113, 127};
  if (options.box_hi < options.box_lo) {
    throw std::invalid_argument("district_census: box upper bound below lower bound");
  }
  std::mt19937_64 rng(options.seed);
  const std::vector<std::string> labels{"1", "2", "3", "4"};
  std::vector<DissimilarityMap> points;
  points.reserve(options.sample_count);
  const bool degenerate = options.box_hi == options.box_lo;
  const std::uint64_t span = degenerate ? 1 : static_cast<std::uint64_t>(options.box_hi - options.box_lo);
  for (std::size_t s = 0; s < options.sample_count; ++s) {
    RatVector values(6);
    for (std::size_t c = 0; c < 6; ++c) {
      const long base = options.box_lo + static_cast<long>(rng() % span);
      if (degenerate) {
        values[c] = Rational(options.box_lo);
        continue;
      }
      const long num = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(kPrimes[c] - 1));
      values[c] = Rational(base) + Rational(num, kPrimes[c]);
    }
    points.emplace_back(labels, std::move(values));
  }
  return points;
}

std::map<std::string, std::size_t> district_census(const CensusOptions& options) {
  std::map<std::string, std::size_t> counts;
  for (const DissimilarityMap& p : census_points(options)) {
    ++counts[district(p)];
  }
  return counts;
}

namespace {

// Heights 5, 10, 15, ... by level: an internal vertex whose children are all
// leaves sits at 5, its parent one level up, and so on.
struct HeightedTree {
  RatVector heights;  // per internal id of flatten(t, t.labels())
};

RatVector canonical_heights(const RootedTopology& t) {
  const FlatRootedView view = flatten(t, t.labels());
  RatVector heights(view.n_internal);
  // level = 1 + max level over internal children (computed bottom-up; ids are
  // preorder so children have larger ids).
  std::vector<int> level(view.n_internal, 1);
  for (std::size_t v = view.n_internal; v-- > 0;) {
    for (int c : view.children[v]) level[v] = std::max(level[v], level[c] + 1);
  }
  for (std::size_t v = 0; v < view.n_internal; ++v) heights[v] = Rational(5 * level[v]);
  return heights;
}

int smallest_leaf_in(const RootedTopology::Node& node) {
  if (node.is_leaf()) return node.leaf;
  int best = -1;
  for (const auto& c : node.children) {
    const int s = smallest_leaf_in(c);
    if (best < 0 || s < best) best = s;
  }
  return best;
}

}  // namespace

DissimilarityMap polytomy_witness_base(const RootedTopology& t) {
  return induced_ultrametric(EquidistantRepresentation(t, canonical_heights(t)));
}

DissimilarityMap construct_polytomy_witness(const RootedTopology& t, const Rational& eps) {
  if (t.is_star()) {
    throw std::invalid_argument("construct_polytomy_witness: the star tree has no resolved triple");
  }
  const DissimilarityMap u = polytomy_witness_base(t);
  const auto& labels = t.labels();

  // v: a non-root internal vertex, polytomies preferred; (i,j) the smallest
  // leaves of its last two children, k the smallest leaf outside v's subtree.
  const RootedTopology::Node* chosen = nullptr;
  bool chosen_polytomy = false;
  std::function<void(const RootedTopology::Node&, bool)> scan =
      [&](const RootedTopology::Node& node, bool is_root) {
        if (node.is_leaf()) return;
        if (!is_root) {
          const bool poly = node.children.size() >= 3;
          if (!chosen || (poly && !chosen_polytomy)) {
            chosen = &node;
            chosen_polytomy = poly;
          }
        }
        for (const auto& c : node.children) scan(c, false);
      };
  scan(t.root(), true);
  if (!chosen) {
    throw std::invalid_argument("construct_polytomy_witness: no non-root internal vertex");
  }

  const auto& kids = chosen->children;
  const std::size_t leaf_i = smallest_leaf_in(kids[kids.size() - 1]);
  const std::size_t leaf_j = smallest_leaf_in(kids[kids.size() - 2]);
  std::vector<bool> inside(labels.size(), false);
  std::function<void(const RootedTopology::Node&)> mark = [&](const RootedTopology::Node& n) {
    if (n.is_leaf()) {
      inside[n.leaf] = true;
      return;
    }
    for (const auto& c : n.children) mark(c);
  };
  mark(*chosen);
  std::size_t leaf_k = labels.size();
  for (std::size_t l = 0; l < labels.size(); ++l) {
    if (!inside[l]) {
      leaf_k = l;
      break;
    }
  }

  const Rational gap = u.at(leaf_i, leaf_k) - u.at(leaf_i, leaf_j);
  if (!(Rational(0) < eps && eps < gap)) {
    throw std::invalid_argument("construct_polytomy_witness: eps must lie in (0, " + gap.str() +
                                ")");
  }
  DissimilarityMap delta = u;
  delta.at(leaf_i, leaf_k) += eps;
  delta.at(leaf_j, leaf_k) -= eps;
  return delta;
}

DissimilarityMap construct_dim_witness(const RootedTopology& t, const DissimilarityMap& u,
                                       const std::string& leaf_i, const std::string& leaf_j,
                                       const std::string& leaf_k, const Rational& eps) {
  if (!t.is_binary()) {
    throw std::invalid_argument("construct_dim_witness: topology must be binary");
  }
  if (!is_ultrametric(u) || !(topology_of_ultrametric(u).topology == t)) {
    throw std::invalid_argument("construct_dim_witness: u must be an ultrametric of topology t");
  }
  const bool single = [&] {
    for (const auto& l : t.labels()) {
      if (l.size() != 1) return false;
    }
    return true;
  }();
  std::vector<std::string> pair{leaf_i, leaf_j};
  std::sort(pair.begin(), pair.end());
  const std::string triple = "(" + leaf_k + (single ? "" : ",") + "(" + pair[0] +
                             (single ? "" : ",") + pair[1] + "))";
  if (!triples(t).count(triple)) {
    throw std::invalid_argument("construct_dim_witness: triple " + triple +
                                " is not compatible with the topology");
  }
  if (eps.sign() <= 0) {
    throw std::invalid_argument("construct_dim_witness: eps must be positive");
  }

  const std::size_t i = u.label_index(leaf_i);
  const std::size_t j = u.label_index(leaf_j);
  const std::size_t k = u.label_index(leaf_k);
  DissimilarityMap delta = u;
  delta.at(i, k) += eps;
  delta.at(j, k) -= eps;

  const std::size_t n = u.n();
  const auto top = top_set(delta);
  if (top.size() != 1 || !(top[0] == t)) {
    throw std::invalid_argument(
        "construct_dim_witness: eps too large, closest set leaves the topology");
  }
  if (closest_set_dimension(delta) != n - 2) {
    throw std::invalid_argument(
        "construct_dim_witness: eps too large, closest set dimension is not n - 2");
  }
  return delta;
}

}  // namespace linftrees
