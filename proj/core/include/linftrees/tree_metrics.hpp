#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linftrees/dissimilarity.hpp"
#include "linftrees/linear_program.hpp"
#include "linftrees/oriented_matroid.hpp"
#include "linftrees/topology.hpp"

namespace linftrees {

/// Four-point condition over every quadruple, repeats allowed (degenerate
/// quadruples encode the triangle inequalities).
bool four_point_check(const DissimilarityMap& d);

/// Four-point condition over distinct quadruples only (tropical Grassmannian
/// membership: tree metrics with unconstrained leaf edges).
bool distinct_four_point_check(const DissimilarityMap& d);

enum class FitMode { TreeMetric, Grassmannian };

struct TopologyFit {
  UnrootedTopology topology;
  Rational distance;
  std::vector<LinearConstraint> polyhedron;  // edge-weight space at that distance
  std::size_t dimension = 0;
};

/// Exact minimal l-infinity error over the closed edge-weight cone of t:
/// minimize eps s.t. |delta_ij - sum of w_e over the (i,j) path| <= eps with
/// w_e >= 0 on every edge (TreeMetric) or internal edges only (Grassmannian).
/// Also returns the achieving polyhedron and its affine-hull dimension.
TopologyFit fit_topology(const DissimilarityMap& delta, const UnrootedTopology& t, FitMode mode);

struct TreeDistanceResult {
  Rational distance;
  std::vector<std::pair<UnrootedTopology, Rational>> table;  // one row per binary topology
};

/// Minimum of the per-topology distances over all binary unrooted topologies.
/// Guard: 4 <= n <= 6.
TreeDistanceResult distance_to_tree_metrics(const DissimilarityMap& delta, FitMode mode);

struct ComponentReport {
  Rational distance;
  std::vector<TopologyFit> attaining;
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;  // indices into attaining
  std::vector<std::size_t> component_of;
  std::size_t component_count = 0;
};

/// Topologies attaining the minimum, their polyhedron dimensions, and the
/// intersection graph: two attaining polyhedra are adjacent iff they share a
/// metric (joint LP feasible). Guard: 4 <= n <= 6.
ComponentReport closest_tree_components(const DissimilarityMap& delta, FitMode mode);

/// Rows x_ik + x_jl - x_il - x_jk = 0 over the induced quartets ij|kl of t;
/// the kernel is the affine hull of t's cone, a subspace of dimension 2n - 3.
RatMatrix quartet_equality_matrix(const UnrootedTopology& t);

LinearSubspace topology_affine_hull(const UnrootedTopology& t);

/// delta = z + eps(e_ik + e_jl - e_il - e_jk) for an induced quartet ij|kl of
/// binary t and a tree metric z on t. Verifies that the closest tree-metric
/// set has dimension 2n - 6 and sits on t alone; throws when eps is too large.
DissimilarityMap construct_tree_dim_witness(const UnrootedTopology& t, const DissimilarityMap& z,
                                            const std::string& leaf_i, const std::string& leaf_j,
                                            const std::string& leaf_k, const std::string& leaf_l,
                                            const Rational& eps);

}  // namespace linftrees
