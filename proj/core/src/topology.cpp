#include "linftrees/topology.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "linftrees/errors.hpp"
#include "linftrees/ultrametrics.hpp"

namespace linftrees {

namespace {

using Node = RootedTopology::Node;

bool labels_single_char(const std::vector<std::string>& labels) {
  for (const auto& l : labels) {
    if (l.size() != 1) return false;
  }
  return true;
}

std::string join_labels(const std::vector<std::string>& parts, bool single) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i && !single) out += ',';
    out += parts[i];
  }
  return out;
}

std::string serialize(const Node& node, const std::vector<std::string>& labels, bool single) {
  if (node.is_leaf()) return labels[node.leaf];
  std::string out = "(";
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i && !single) out += ',';
    out += serialize(node.children[i], labels, single);
  }
  out += ')';
  return out;
}

// Children ordered leaves-first by label, then subtrees by serialization.
// Sibling serials are distinct (labels are unique), so the order is total.
void canonicalize(Node& node, const std::vector<std::string>& labels, bool single) {
  for (Node& c : node.children) canonicalize(c, labels, single);
  std::sort(node.children.begin(), node.children.end(), [&](const Node& a, const Node& b) {
    if (a.is_leaf() != b.is_leaf()) return a.is_leaf();
    return serialize(a, labels, single) < serialize(b, labels, single);
  });
}

void validate_node(const Node& node, std::vector<int>& leaf_seen) {
  if (node.is_leaf()) {
    if (static_cast<std::size_t>(node.leaf) >= leaf_seen.size()) {
      throw std::invalid_argument("RootedTopology: leaf index out of range");
    }
    if (leaf_seen[node.leaf]++) {
      throw std::invalid_argument("RootedTopology: leaf used twice");
    }
    if (!node.children.empty()) {
      throw std::invalid_argument("RootedTopology: leaf with children");
    }
    return;
  }
  if (node.children.size() < 2) {
    throw std::invalid_argument("RootedTopology: internal vertex with fewer than 2 children");
  }
  for (const Node& c : node.children) validate_node(c, leaf_seen);
}

}  // namespace

RootedTopology::RootedTopology(std::vector<std::string> labels, Node root)
    : labels_(std::move(labels)), root_(std::move(root)) {
  if (labels_.empty()) throw std::invalid_argument("RootedTopology: no labels");
  if (labels_.size() == 1 && !root_.is_leaf()) {
    throw std::invalid_argument("RootedTopology: single label requires a leaf root");
  }
  std::vector<int> seen(labels_.size(), 0);
  validate_node(root_, seen);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw std::invalid_argument("RootedTopology: label '" + labels_[i] + "' unused");
    }
  }
  const bool single = labels_single_char(labels_);
  canonicalize(root_, labels_, single);
  serial_ = serialize(root_, labels_, single);
}

RootedTopology RootedTopology::parse(const std::string& text) {
  // Tokenize into '(', ')' and label atoms. Without commas, alphanumeric runs
  // are split into one-character labels ("(123)" has three leaves).
  const bool comma_mode = text.find(',') != std::string::npos;
  std::vector<std::string> tokens;
  std::string atom;
  auto flush = [&] {
    if (atom.empty()) return;
    if (comma_mode) {
      tokens.push_back(atom);
    } else {
      for (char c : atom) tokens.push_back(std::string(1, c));
    }
    atom.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == '(' || c == ')' || c == ',') {
      flush();
      if (c != ',') tokens.push_back(std::string(1, c));
    } else {
      atom.push_back(c);
    }
  }
  flush();
  if (tokens.empty()) throw ParseError("empty topology string");

  struct Parsed {
    std::string label;  // empty for internal
    std::vector<Parsed> children;
  };
  std::size_t pos = 0;
  std::function<Parsed()> parse_node = [&]() -> Parsed {
    if (pos >= tokens.size()) throw ParseError("topology string ends unexpectedly");
    if (tokens[pos] == ")") throw ParseError("unexpected ')' in topology string");
    if (tokens[pos] != "(") {
      Parsed leaf;
      leaf.label = tokens[pos++];
      return leaf;
    }
    ++pos;  // '('
    Parsed internal;
    while (pos < tokens.size() && tokens[pos] != ")") {
      internal.children.push_back(parse_node());
    }
    if (pos >= tokens.size()) throw ParseError("missing ')' in topology string");
    ++pos;  // ')'
    if (internal.children.size() == 1) {
      throw ParseError("internal vertex with a single child in topology string");
    }
    if (internal.children.empty()) throw ParseError("empty parentheses in topology string");
    return internal;
  };
  Parsed top = parse_node();
  if (pos != tokens.size()) throw ParseError("trailing tokens after topology string");

  std::vector<std::string> labels;
  std::function<void(const Parsed&)> collect = [&](const Parsed& p) {
    if (p.children.empty()) {
      labels.push_back(p.label);
      return;
    }
    for (const auto& c : p.children) collect(c);
  };
  collect(top);
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw ParseError("duplicate leaf label in topology string");
  }
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);

  std::function<Node(const Parsed&)> build = [&](const Parsed& p) -> Node {
    Node n;
    if (p.children.empty()) {
      n.leaf = index[p.label];
      return n;
    }
    for (const auto& c : p.children) n.children.push_back(build(c));
    return n;
  };
  return RootedTopology(std::move(labels), build(top));
}

bool RootedTopology::is_binary() const {
  std::function<bool(const Node&)> rec = [&](const Node& n) -> bool {
    if (n.is_leaf()) return true;
    if (n.children.size() != 2) return false;
    return rec(n.children[0]) && rec(n.children[1]);
  };
  return rec(root_);
}

bool RootedTopology::is_star() const {
  for (const Node& c : root_.children) {
    if (!c.is_leaf()) return false;
  }
  return !root_.is_leaf();
}

RootedTopology RootedTopology::relabeled(const std::vector<std::string>& new_labels) const {
  if (new_labels.size() != labels_.size()) {
    throw std::invalid_argument("relabeled: label count mismatch");
  }
  return RootedTopology(new_labels, root_);
}

FlatRootedView flatten(const RootedTopology& t, const std::vector<std::string>& leaf_order) {
  if (leaf_order.size() != t.labels().size()) {
    throw std::invalid_argument("flatten: leaf order size mismatch");
  }
  std::map<std::string, int> external;
  for (std::size_t i = 0; i < leaf_order.size(); ++i) external[leaf_order[i]] = static_cast<int>(i);
  for (const auto& l : t.labels()) {
    if (!external.count(l)) throw std::invalid_argument("flatten: label '" + l + "' missing");
  }

  FlatRootedView v;
  v.n_leaves = leaf_order.size();
  v.lca.assign(v.n_leaves, std::vector<int>(v.n_leaves, -1));

  // DFS preorder over internal vertices; returns external leaf indices below.
  std::function<std::vector<int>(const Node&, int, int)> rec =
      [&](const Node& node, int parent, int depth) -> std::vector<int> {
    if (node.is_leaf()) return {external[t.labels()[node.leaf]]};
    const int id = static_cast<int>(v.n_internal++);
    v.parent.push_back(parent);
    v.depth.push_back(depth);
    v.children.emplace_back();
    if (parent >= 0) v.children[parent].push_back(id);

    std::vector<std::vector<int>> groups;
    for (const Node& c : node.children) groups.push_back(rec(c, id, depth + 1));
    std::vector<int> all;
    for (std::size_t a = 0; a < groups.size(); ++a) {
      for (std::size_t b = a + 1; b < groups.size(); ++b) {
        for (int i : groups[a]) {
          for (int j : groups[b]) v.lca[i][j] = v.lca[j][i] = id;
        }
      }
      all.insert(all.end(), groups[a].begin(), groups[a].end());
    }
    return all;
  };
  if (t.root().is_leaf()) {
    throw std::invalid_argument("flatten: single-leaf topology has no internal vertices");
  }
  rec(t.root(), -1, 0);
  return v;
}

EquidistantRepresentation::EquidistantRepresentation(RootedTopology t, RatVector h)
    : topology(std::move(t)), heights(std::move(h)) {
  const FlatRootedView v = flatten(topology, topology.labels());
  if (heights.size() != v.n_internal) {
    throw std::invalid_argument("EquidistantRepresentation: one height per internal vertex");
  }
  for (std::size_t id = 0; id < v.n_internal; ++id) {
    if (v.parent[id] >= 0 && !(heights[id] < heights[v.parent[id]])) {
      throw std::invalid_argument(
          "EquidistantRepresentation: internal vertex not strictly below its parent");
    }
  }
}

namespace {

struct HNode {
  int leaf = -1;
  Rational height;
  std::vector<HNode> children;
};

std::string hnode_serial(const HNode& h, const std::vector<std::string>& labels, bool single) {
  if (h.leaf >= 0) return labels[h.leaf];
  std::string out = "(";
  for (std::size_t i = 0; i < h.children.size(); ++i) {
    if (i && !single) out += ',';
    out += hnode_serial(h.children[i], labels, single);
  }
  out += ')';
  return out;
}

void canonicalize_hnode(HNode& h, const std::vector<std::string>& labels, bool single) {
  for (HNode& c : h.children) canonicalize_hnode(c, labels, single);
  std::sort(h.children.begin(), h.children.end(), [&](const HNode& a, const HNode& b) {
    const bool la = a.leaf >= 0, lb = b.leaf >= 0;
    if (la != lb) return la;
    return hnode_serial(a, labels, single) < hnode_serial(b, labels, single);
  });
}

Node strip_hnode(const HNode& h) {
  Node n;
  n.leaf = h.leaf;
  for (const HNode& c : h.children) n.children.push_back(strip_hnode(c));
  return n;
}

void collect_heights(const HNode& h, RatVector& out) {
  if (h.leaf >= 0) return;
  out.push_back(h.height);
  for (const HNode& c : h.children) collect_heights(c, out);
}

}  // namespace

EquidistantRepresentation topology_of_ultrametric(const DissimilarityMap& u) {
  if (!is_ultrametric(u)) {
    throw std::domain_error("topology_of_ultrametric: three-point condition fails");
  }
  const std::size_t n = u.n();

  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int a) { return uf[a] == a ? a : uf[a] = find(uf[a]); };

  std::map<int, HNode> cluster;
  for (std::size_t i = 0; i < n; ++i) {
    HNode leaf;
    leaf.leaf = static_cast<int>(i);
    cluster[static_cast<int>(i)] = std::move(leaf);
  }

  std::set<Rational> values(u.values().begin(), u.values().end());
  for (const Rational& v : values) {
    std::set<int> touched;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (u.at(i, j) != v) continue;
        const int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
        if (a == b) continue;
        touched.insert(a);
        touched.insert(b);
        uf[a] = b;
      }
    }
    std::map<int, std::vector<int>> groups;  // new root -> merged old roots
    for (int old_root : touched) groups[find(old_root)].push_back(old_root);
    for (auto& [root, olds] : groups) {
      HNode merged;
      merged.height = v;
      for (int o : olds) merged.children.push_back(std::move(cluster.at(o)));
      for (int o : olds) cluster.erase(o);
      cluster[root] = std::move(merged);
    }
  }
  if (cluster.size() != 1) {
    throw std::logic_error("topology_of_ultrametric: dendrogram did not close");
  }

  HNode root = std::move(cluster.begin()->second);
  std::vector<std::string> labels = u.labels();
  const bool single = labels_single_char(labels);
  canonicalize_hnode(root, labels, single);
  RatVector heights;
  collect_heights(root, heights);
  return EquidistantRepresentation(RootedTopology(labels, strip_hnode(root)), std::move(heights));
}

DissimilarityMap induced_ultrametric(const EquidistantRepresentation& rep) {
  const auto& labels = rep.topology.labels();
  const FlatRootedView v = flatten(rep.topology, labels);
  const std::size_t n = labels.size();
  RatVector values(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      values[DissimilarityMap::pair_index(n, i, j)] = rep.heights[v.lca[i][j]];
    }
  }
  return DissimilarityMap(labels, std::move(values));
}

std::string to_newick(const EquidistantRepresentation& rep) {
  const auto& labels = rep.topology.labels();
  std::size_t next_internal = 0;
  std::function<std::string(const Node&, const Rational*)> rec =
      [&](const Node& node, const Rational* parent_height) -> std::string {
    if (node.is_leaf()) {
      return labels[node.leaf] + ":" + parent_height->str();
    }
    const Rational h = rep.heights[next_internal++];
    std::string out = "(";
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (i) out += ',';
      out += rec(node.children[i], &h);
    }
    out += ')';
    if (parent_height) out += ":" + (*parent_height - h).str();
    return out;
  };
  return rec(rep.topology.root(), nullptr) + ";";
}

namespace {

// Set partitions of `items` into at least two blocks (exactly two when
// binary); the first element stays in block 0, so each partition appears once.
void partitions_rec(const std::vector<int>& items, std::size_t pos,
                    std::vector<std::vector<int>>& blocks, bool binary,
                    const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (pos == items.size()) {
    if (blocks.size() >= 2) emit(blocks);
    return;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {  // indexed: recursion grows `blocks`
    blocks[b].push_back(items[pos]);
    partitions_rec(items, pos + 1, blocks, binary, emit);
    blocks[b].pop_back();
  }
  const std::size_t max_blocks = binary ? 2 : items.size();
  if (blocks.size() < max_blocks) {
    blocks.push_back({items[pos]});
    partitions_rec(items, pos + 1, blocks, binary, emit);
    blocks.pop_back();
  }
}

std::vector<Node> gen_rooted(const std::vector<int>& items, bool binary) {
  if (items.size() == 1) {
    Node leaf;
    leaf.leaf = items[0];
    return {leaf};
  }
  std::vector<Node> out;
  std::vector<std::vector<int>> blocks{{items[0]}};
  partitions_rec(items, 1, blocks, binary, [&](const std::vector<std::vector<int>>& part) {
    std::vector<std::vector<Node>> options;
    for (const auto& block : part) options.push_back(gen_rooted(block, binary));
    std::vector<std::size_t> pick(options.size(), 0);
    for (;;) {
      Node internal;
      for (std::size_t b = 0; b < options.size(); ++b) {
        internal.children.push_back(options[b][pick[b]]);
      }
      out.push_back(std::move(internal));
      std::size_t b = 0;
      while (b < options.size() && pick[b] + 1 == options[b].size()) pick[b++] = 0;
      if (b == options.size()) break;
      ++pick[b];
    }
  });
  return out;
}

}  // namespace

std::vector<RootedTopology> enumerate_rooted(const std::vector<std::string>& labels,
                                             bool binary_only) {
  const std::size_t n = labels.size();
  if (n < 2 || n > 7) {
    throw GuardViolation("enumerate_rooted supports 2 <= n <= 7, got n = " + std::to_string(n));
  }
  std::vector<int> items(n);
  std::iota(items.begin(), items.end(), 0);
  std::vector<RootedTopology> out;
  for (Node& root : gen_rooted(items, binary_only)) {
    out.emplace_back(labels, std::move(root));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Node> binary_shapes_over(const std::vector<Node>& atoms) {
  std::vector<int> idx(atoms.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Node> shapes = gen_rooted(idx, /*binary=*/true);
  std::function<Node(const Node&)> substitute = [&](const Node& shape) -> Node {
    if (shape.is_leaf()) return atoms[shape.leaf];
    Node n;
    for (const Node& c : shape.children) n.children.push_back(substitute(c));
    return n;
  };
  std::vector<Node> out;
  out.reserve(shapes.size());
  for (const Node& s : shapes) out.push_back(substitute(s));
  return out;
}

std::vector<Node> resolve_node(const Node& node) {
  if (node.is_leaf()) return {node};
  std::vector<std::vector<Node>> options;
  for (const Node& c : node.children) options.push_back(resolve_node(c));
  std::vector<Node> out;
  std::vector<std::size_t> pick(options.size(), 0);
  for (;;) {
    std::vector<Node> chosen;
    for (std::size_t b = 0; b < options.size(); ++b) chosen.push_back(options[b][pick[b]]);
    if (chosen.size() == 2) {
      Node n;
      n.children = std::move(chosen);
      out.push_back(std::move(n));
    } else {
      for (Node& s : binary_shapes_over(chosen)) out.push_back(std::move(s));
    }
    std::size_t b = 0;
    while (b < options.size() && pick[b] + 1 == options[b].size()) pick[b++] = 0;
    if (b == options.size()) break;
    ++pick[b];
  }
  return out;
}

}  // namespace

std::vector<RootedTopology> resolutions(const RootedTopology& t) {
  std::set<RootedTopology> out;
  for (Node& root : resolve_node(t.root())) {
    out.emplace(t.labels(), std::move(root));
  }
  return {out.begin(), out.end()};
}

std::set<std::string> triples(const RootedTopology& t) {
  const auto& labels = t.labels();
  const FlatRootedView v = flatten(t, labels);
  const bool single = labels_single_char(labels);
  std::set<std::string> out;
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const int ij = v.lca[i][j], ik = v.lca[i][k], jk = v.lca[j][k];
        std::size_t apex, a, b;
        if (ij == ik && ik == jk) continue;  // unresolved
        if (v.depth[ij] > v.depth[ik]) {
          apex = k; a = i; b = j;
        } else if (v.depth[ik] > v.depth[ij]) {
          apex = j; a = i; b = k;
        } else {
          apex = i; a = j; b = k;
        }
        std::vector<std::string> pair{labels[a], labels[b]};
        std::sort(pair.begin(), pair.end());
        out.insert("(" + labels[apex] + (single ? "" : ",") + "(" + join_labels(pair, single) +
                   "))");
      }
    }
  }
  return out;
}

UnrootedTopology::UnrootedTopology(std::vector<std::string> labels, std::size_t vertex_count,
                                   std::vector<std::pair<int, int>> edges)
    : labels_(std::move(labels)), vertex_count_(vertex_count), edges_(std::move(edges)) {
  const std::size_t n = labels_.size();
  if (n < 2) throw std::invalid_argument("UnrootedTopology: need at least 2 leaves");
  if (vertex_count_ < n) throw std::invalid_argument("UnrootedTopology: fewer vertices than leaves");
  if (edges_.size() + 1 != vertex_count_) {
    throw std::invalid_argument("UnrootedTopology: edge count must be vertex count - 1");
  }
  std::vector<std::size_t> degree(vertex_count_, 0);
  for (auto [a, b] : edges_) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= vertex_count_ ||
        static_cast<std::size_t>(b) >= vertex_count_ || a == b) {
      throw std::invalid_argument("UnrootedTopology: bad edge");
    }
    ++degree[a];
    ++degree[b];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] != 1) throw std::invalid_argument("UnrootedTopology: leaf degree must be 1");
  }
  for (std::size_t i = n; i < vertex_count_; ++i) {
    if (degree[i] < 3) {
      throw std::invalid_argument("UnrootedTopology: internal vertex degree must be >= 3");
    }
  }
  // connectivity
  std::vector<std::vector<int>> adj(vertex_count_);
  for (auto [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(vertex_count_, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        q.push(y);
      }
    }
  }
  if (count != vertex_count_) throw std::invalid_argument("UnrootedTopology: not connected");
}

bool UnrootedTopology::is_binary() const {
  std::vector<std::size_t> degree(vertex_count_, 0);
  for (auto [a, b] : edges_) {
    ++degree[a];
    ++degree[b];
  }
  for (std::size_t i = labels_.size(); i < vertex_count_; ++i) {
    if (degree[i] != 3) return false;
  }
  return true;
}

bool UnrootedTopology::edge_is_internal(std::size_t e) const {
  const auto [a, b] = edges_[e];
  const int n = static_cast<int>(labels_.size());
  return a >= n && b >= n;
}

namespace {

std::uint32_t side_mask(const UnrootedTopology& t, std::size_t cut_edge, int start) {
  std::vector<std::vector<int>> adj(t.vertex_count());
  for (std::size_t e = 0; e < t.edges().size(); ++e) {
    if (e == cut_edge) continue;
    const auto [a, b] = t.edges()[e];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::uint32_t mask = 0;
  std::vector<bool> seen(t.vertex_count(), false);
  std::queue<int> q;
  q.push(start);
  seen[start] = true;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    if (x < static_cast<int>(t.leaf_count())) mask |= 1u << x;
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        q.push(y);
      }
    }
  }
  return mask;
}

int popcount(std::uint32_t m) { return __builtin_popcount(m); }

}  // namespace

std::vector<std::uint32_t> UnrootedTopology::split_masks() const {
  const std::uint32_t full = (1u << leaf_count()) - 1;
  std::vector<std::uint32_t> masks;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (!edge_is_internal(e)) continue;
    std::uint32_t m = side_mask(*this, e, edges_[e].first);
    std::uint32_t other = full & ~m;
    // canonical side: smaller, ties to the side holding leaf 0
    if (popcount(other) < popcount(m) || (popcount(other) == popcount(m) && (other & 1u))) {
      m = other;
    }
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  return masks;
}

std::vector<std::string> UnrootedTopology::split_strings() const {
  const bool single = labels_single_char(labels_);
  const std::uint32_t full = (1u << leaf_count()) - 1;
  std::vector<std::string> out;
  for (std::uint32_t m : split_masks()) {
    std::vector<std::string> a, b;
    for (std::size_t i = 0; i < leaf_count(); ++i) {
      ((m >> i) & 1u ? a : b).push_back(labels_[i]);
    }
    (void)full;
    out.push_back(join_labels(a, single) + "|" + join_labels(b, single));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> UnrootedTopology::pair_edge_paths() const {
  const std::size_t n = leaf_count();
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(vertex_count_);  // (vertex, edge idx)
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    adj[edges_[e].first].push_back({edges_[e].second, e});
    adj[edges_[e].second].push_back({edges_[e].first, e});
  }
  std::vector<std::vector<std::size_t>> paths(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> prev_vertex(vertex_count_, -1);
    std::vector<std::size_t> prev_edge(vertex_count_, 0);
    std::queue<int> q;
    q.push(static_cast<int>(i));
    prev_vertex[i] = static_cast<int>(i);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (auto [y, e] : adj[x]) {
        if (prev_vertex[y] >= 0) continue;
        prev_vertex[y] = x;
        prev_edge[y] = e;
        q.push(y);
      }
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::size_t> path;
      int cur = static_cast<int>(j);
      while (cur != static_cast<int>(i)) {
        path.push_back(prev_edge[cur]);
        cur = prev_vertex[cur];
      }
      paths[DissimilarityMap::pair_index(n, i, j)] = std::move(path);
    }
  }
  return paths;
}

std::string UnrootedTopology::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ',';
    out += labels_[i];
  }
  out += "){";
  const auto splits = split_strings();
  for (std::size_t i = 0; i < splits.size(); ++i) {
    if (i) out += ',';
    out += splits[i];
  }
  out += '}';
  return out;
}

std::vector<UnrootedTopology> enumerate_unrooted_binary(const std::vector<std::string>& labels) {
  const std::size_t n = labels.size();
  if (n < 4 || n > 7) {
    throw GuardViolation("enumerate_unrooted_binary supports 4 <= n <= 7, got n = " +
                         std::to_string(n));
  }
  struct Partial {
    std::size_t vertex_count;
    std::vector<std::pair<int, int>> edges;
  };
  const int first_internal = static_cast<int>(n);
  std::vector<Partial> current{{n + 1,
                                {{0, first_internal}, {1, first_internal}, {2, first_internal}}}};
  for (int leaf = 3; leaf < static_cast<int>(n); ++leaf) {
    std::vector<Partial> next;
    for (const Partial& p : current) {
      for (std::size_t e = 0; e < p.edges.size(); ++e) {
        Partial q = p;
        const auto [a, b] = q.edges[e];
        const int w = static_cast<int>(q.vertex_count++);
        q.edges[e] = {a, w};
        q.edges.push_back({w, b});
        q.edges.push_back({leaf, w});
        next.push_back(std::move(q));
      }
    }
    current = std::move(next);
  }
  std::vector<UnrootedTopology> out;
  out.reserve(current.size());
  for (Partial& p : current) {
    out.emplace_back(labels, p.vertex_count, std::move(p.edges));
  }
  std::sort(out.begin(), out.end());
  return out;
}

UnrootedTopology unroot(const RootedTopology& t) {
  const std::size_t n = t.labels().size();
  if (n < 2) throw std::invalid_argument("unroot: need at least 2 leaves");

  std::vector<std::pair<int, int>> edges;
  std::size_t vertex_count = n;
  // Returns the vertex id representing the subtree root.
  std::function<int(const Node&)> rec = [&](const Node& node) -> int {
    if (node.is_leaf()) return node.leaf;
    const int id = static_cast<int>(vertex_count++);
    for (const Node& c : node.children) edges.push_back({rec(c), id});
    return id;
  };

  const Node& root = t.root();
  if (!root.is_leaf() && root.children.size() == 2) {
    const int a = rec(root.children[0]);
    const int b = rec(root.children[1]);
    edges.push_back({a, b});
  } else {
    rec(root);
  }
  return UnrootedTopology(t.labels(), vertex_count, std::move(edges));
}

std::vector<std::array<std::size_t, 4>> quartet_index_list(const UnrootedTopology& t) {
  const std::size_t n = t.leaf_count();
  const auto masks = t.split_masks();
  const std::uint32_t full = (1u << n) - 1;
  auto separates = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    const std::uint32_t ab = (1u << a) | (1u << b);
    const std::uint32_t cd = (1u << c) | (1u << d);
    for (std::uint32_t m : masks) {
      const std::uint32_t mm = m & (ab | cd);
      if (mm == ab || mm == cd) {
        // the other pair must sit fully outside m
        const std::uint32_t rest = (mm == ab) ? cd : ab;
        if ((m & rest) == 0 || ((full & ~m) & rest) == rest) return true;
      }
    }
    return false;
  };
  std::vector<std::array<std::size_t, 4>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          if (separates(i, j, k, l)) {
            out.push_back({i, j, k, l});
          } else if (separates(i, k, j, l)) {
            out.push_back({i, k, j, l});
          } else if (separates(i, l, j, k)) {
            out.push_back({i, l, j, k});
          }
        }
      }
    }
  }
  return out;
}

std::set<std::string> quartets(const UnrootedTopology& t) {
  const auto& labels = t.labels();
  const bool single = labels_single_char(labels);
  std::set<std::string> out;
  for (const auto& q : quartet_index_list(t)) {
    out.insert(join_labels({labels[q[0]], labels[q[1]]}, single) + "|" +
               join_labels({labels[q[2]], labels[q[3]]}, single));
  }
  return out;
}

std::set<std::string> quartets(const RootedTopology& t) { return quartets(unroot(t)); }

}  // namespace linftrees
