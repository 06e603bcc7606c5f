#pragma once

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "linftrees/dissimilarity.hpp"
#include "linftrees/rational.hpp"

namespace linftrees {

/// Rooted leaf-labeled tree shape, polytomies allowed. Held in canonical form:
/// children of every internal vertex are ordered leaves-first by label, then
/// subtrees by their serialization, so equal shapes print identically, e.g.
/// "(D(C(AB)))" or "(4(3(12)))".
class RootedTopology {
 public:
  struct Node {
    int leaf = -1;               // >= 0: index into labels(); -1: internal
    std::vector<Node> children;  // empty iff leaf

    bool is_leaf() const { return leaf >= 0; }
  };

  RootedTopology() = default;
  RootedTopology(std::vector<std::string> labels, Node root);

  /// Accepts the nested-parenthesis notation. Single-character labels may be
  /// juxtaposed ("(123)"); multi-character labels need commas ("(X1,(X2,X3))").
  static RootedTopology parse(const std::string& text);

  const std::vector<std::string>& labels() const { return labels_; }
  const Node& root() const { return root_; }
  std::size_t leaf_count() const { return labels_.size(); }

  std::string str() const { return serial_; }
  bool is_binary() const;
  bool is_star() const;  // single internal vertex

  RootedTopology relabeled(const std::vector<std::string>& new_labels) const;

  bool operator==(const RootedTopology& o) const { return serial_ == o.serial_; }
  bool operator!=(const RootedTopology& o) const { return serial_ != o.serial_; }
  bool operator<(const RootedTopology& o) const { return serial_ < o.serial_; }

 private:
  std::vector<std::string> labels_;
  Node root_;
  std::string serial_;
};

/// Index-oriented view of a rooted topology against an externally fixed leaf
/// order (usually the label order of a DissimilarityMap).
struct FlatRootedView {
  std::size_t n_leaves = 0;
  std::size_t n_internal = 0;
  std::vector<int> parent;                 // internal id -> parent id, -1 for root 0
  std::vector<int> depth;                  // internal id -> depth from root
  std::vector<std::vector<int>> children;  // internal id -> child internal ids
  std::vector<std::vector<int>> lca;       // n x n, lca[i][j] = internal id (i != j)
};

FlatRootedView flatten(const RootedTopology& t, const std::vector<std::string>& leaf_order);

/// Equidistant vertex-weighted tree: heights indexed by the DFS-preorder
/// internal ids of flatten(topology, topology.labels()). Every internal child
/// sits strictly below its parent; leaf heights are implicitly zero, so leaf
/// edge weights may be nonpositive and heights may be negative.
struct EquidistantRepresentation {
  RootedTopology topology;
  RatVector heights;

  EquidistantRepresentation(RootedTopology t, RatVector h);
};

/// Unique equidistant representation of an ultrametric (single-linkage
/// dendrogram; simultaneous equal-height merges create polytomies). Throws
/// std::domain_error when the three-point condition fails.
EquidistantRepresentation topology_of_ultrametric(const DissimilarityMap& u);

DissimilarityMap induced_ultrametric(const EquidistantRepresentation& rep);

std::string to_newick(const EquidistantRepresentation& rep);

/// All rooted topologies (binary only, or all with polytomies) on the given
/// labels, duplicate-free in canonical order. Guard: 2 <= n <= 7.
std::vector<RootedTopology> enumerate_rooted(const std::vector<std::string>& labels,
                                             bool binary_only);

/// All binary refinements of t; {t} iff t is binary.
std::vector<RootedTopology> resolutions(const RootedTopology& t);

/// Resolved rooted triples "(k(ij))", canonically ordered.
std::set<std::string> triples(const RootedTopology& t);

/// Unrooted leaf-labeled tree, internal vertices of degree >= 3. Identity is
/// the nontrivial split set.
class UnrootedTopology {
 public:
  UnrootedTopology() = default;
  /// Vertices 0..n-1 are the leaves (indexing labels), the rest internal.
  UnrootedTopology(std::vector<std::string> labels, std::size_t vertex_count,
                   std::vector<std::pair<int, int>> edges);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t leaf_count() const { return labels_.size(); }
  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool is_binary() const;

  /// Leaf-index bitmask of the canonical side of each nontrivial split.
  std::vector<std::uint32_t> split_masks() const;
  /// "13|2456" style: smaller side first, ties by smallest member label.
  std::vector<std::string> split_strings() const;

  /// True iff the edge at this index is internal (both ends internal vertices).
  bool edge_is_internal(std::size_t e) const;

  /// Edge indices on the leaf-to-leaf path, per pair in lexicographic order.
  std::vector<std::vector<std::size_t>> pair_edge_paths() const;

  std::string str() const;

  bool operator==(const UnrootedTopology& o) const { return str() == o.str(); }
  bool operator<(const UnrootedTopology& o) const { return str() < o.str(); }

 private:
  std::vector<std::string> labels_;
  std::size_t vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// Exactly (2n-5)!! trees, canonical order. Guard: 4 <= n <= 7.
std::vector<UnrootedTopology> enumerate_unrooted_binary(const std::vector<std::string>& labels);

UnrootedTopology unroot(const RootedTopology& t);

/// Induced quartets ij|kl as index quadruples (i<j, k<l, i<k).
std::vector<std::array<std::size_t, 4>> quartet_index_list(const UnrootedTopology& t);

std::set<std::string> quartets(const UnrootedTopology& t);
std::set<std::string> quartets(const RootedTopology& t);

}  // namespace linftrees
