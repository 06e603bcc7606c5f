#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "linftrees/dissimilarity.hpp"
#include "linftrees/linear_program.hpp"
#include "linftrees/topology.hpp"

namespace linftrees {

/// Three-point condition over all triples.
bool is_ultrametric(const DissimilarityMap& d);

/// Coordinate-wise maximal ultrametric below delta: minimax path weights in
/// the complete graph weighted by delta (single-linkage heights).
DissimilarityMap subdominant(const DissimilarityMap& delta);

/// Exact l-infinity distance to the set of ultrametrics: half the gap between
/// delta and its subdominant. Zero when n <= 2.
Rational distance_to_ultrametrics(const DissimilarityMap& delta);

/// Subdominant shifted up by the distance; an l-infinity-closest ultrametric.
DissimilarityMap canonical_closest(const DissimilarityMap& delta);

/// True iff u is an ultrametric at exactly the minimal distance from delta.
bool in_closest_set(const DissimilarityMap& delta, const DissimilarityMap& u);

/// Constraint system of {heights h : |delta_ij - h(lca(i,j))| <= radius} plus
/// the parent-above-child ordering of internal vertices, in height space.
/// Strict ordering for exact-topology membership, closed for metric queries.
std::vector<LinearConstraint> equidistant_ball_constraints(const FlatRootedView& view,
                                                           const DissimilarityMap& delta,
                                                           const Rational& radius,
                                                           bool strict_order);

/// Exact set of topologies realized by closest ultrametrics, canonically
/// ordered. Guard: n <= 6.
std::vector<RootedTopology> top_set(const DissimilarityMap& delta);

/// "{(123),(2(13)),(3(12))}": sorted canonical topology strings.
std::string district_label(const std::vector<RootedTopology>& topologies);

std::string district(const DissimilarityMap& delta);

/// Dimension of the closest set as a polyhedral complex: max over binary
/// topologies of the affine-hull dimension of (closed cone) ∩ (distance
/// ball). Guard: n <= 6.
std::size_t closest_set_dimension(const DissimilarityMap& delta);

inline constexpr std::uint64_t kDefaultCensusSeed = 1729;

struct CensusOptions {
  std::size_t sample_count = 50000;
  std::uint64_t seed = kDefaultCensusSeed;
  long box_lo = 0;
  long box_hi = 100;
};

/// District labels of pseudo-random 4-leaf points with counts; deterministic
/// given the seed. Integer coordinates are jittered by fractions with six
/// distinct large prime denominators, so no sample ever satisfies a small
/// integer linear relation: every sample lands in a full-dimensional cone.
std::map<std::string, std::size_t> district_census(const CensusOptions& options);

/// The sample points the census classifies, in order (exposed for tests).
std::vector<DissimilarityMap> census_points(const CensusOptions& options);

/// Perturbation delta = u + eps(e_ik - e_jk) of the canonical equidistant
/// ultrametric u of t (internal vertex at level L has height 5L), chosen so
/// that Top(delta) keeps t together with the resolutions of its polytomy.
/// t must not be the star tree and eps must lie in (0, u_ik - u_ij).
DissimilarityMap construct_polytomy_witness(const RootedTopology& t, const Rational& eps);

/// Canonical ultrametric used by construct_polytomy_witness (exposed for
/// tests and reports).
DissimilarityMap polytomy_witness_base(const RootedTopology& t);

/// delta = u + eps(e_ik - e_jk) for a triple (k(ij)) compatible with binary
/// t = topology of u. Verifies that the closest set has dimension n - 2 and
/// that every closest ultrametric keeps topology t; throws when eps is too
/// large for that to hold.
DissimilarityMap construct_dim_witness(const RootedTopology& t, const DissimilarityMap& u,
                                       const std::string& leaf_i, const std::string& leaf_j,
                                       const std::string& leaf_k, const Rational& eps);

}  // namespace linftrees
