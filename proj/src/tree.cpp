#include "tangle/tree.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "tangle/error.hpp"

namespace tangle {

NodeId RootedBinaryTree::Builder::add_leaf(Label label) {
  if (!is_valid_label(label)) {
    throw InvalidArgument("invalid leaf label '" + label + "'");
  }
  nodes_.push_back(Node{kNoNode, kNoNode, kNoNode, std::move(label)});
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId RootedBinaryTree::Builder::add_internal(NodeId first, NodeId second) {
  const auto n = static_cast<NodeId>(nodes_.size());
  auto check = [&](NodeId c) {
    if (c < 0 || c >= n) throw InvalidArgument("child id out of range");
    if (nodes_[c].parent != kNoNode) throw InvalidArgument("vertex already has a parent");
  };
  check(first);
  check(second);
  if (first == second) throw InvalidArgument("both children are the same vertex");
  nodes_.push_back(Node{kNoNode, first, second, {}});
  nodes_[first].parent = n;
  nodes_[second].parent = n;
  return n;
}

RootedBinaryTree RootedBinaryTree::Builder::build(NodeId root) && {
  const auto n = static_cast<NodeId>(nodes_.size());
  if (root < 0 || root >= n) throw InvalidArgument("root id out of range");
  if (nodes_[root].parent != kNoNode) throw InvalidArgument("root has a parent");

  RootedBinaryTree tree;
  // Keep only the vertices reachable from the root, renumbered in preorder so
  // that equal construction sequences give identical arrays.
  std::vector<NodeId> order;
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    if (nodes_[v].first != kNoNode) {
      stack.push_back(nodes_[v].second);
      stack.push_back(nodes_[v].first);
    }
  }
  if (static_cast<NodeId>(order.size()) != n) {
    throw InvalidArgument("tree is not connected: unreachable vertices");
  }
  std::vector<NodeId> remap(nodes_.size(), kNoNode);
  for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<NodeId>(i);

  tree.nodes_.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Node& src = nodes_[order[i]];
    Node& dst = tree.nodes_[i];
    dst.parent = src.parent == kNoNode ? kNoNode : remap[src.parent];
    dst.first = src.first == kNoNode ? kNoNode : remap[src.first];
    dst.second = src.second == kNoNode ? kNoNode : remap[src.second];
    dst.label = src.label;
    if (dst.first == kNoNode) {
      if (!tree.leaf_index_.emplace(dst.label, static_cast<NodeId>(i)).second) {
        throw InvalidArgument("duplicate leaf label '" + dst.label + "'");
      }
    }
  }
  tree.root_ = 0;
  return tree;
}

RootedBinaryTree RootedBinaryTree::single_leaf(Label label) {
  Builder b;
  NodeId v = b.add_leaf(std::move(label));
  return std::move(b).build(v);
}

std::optional<NodeId> RootedBinaryTree::find_leaf(std::string_view label) const {
  auto it = leaf_index_.find(Label(label));
  if (it == leaf_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<NodeId> RootedBinaryTree::leaves() const {
  return plane_leaf_order(0);
}

std::vector<Label> RootedBinaryTree::leaf_labels() const {
  std::vector<Label> out;
  out.reserve(leaf_count());
  for (NodeId v : leaves()) out.push_back(nodes_[v].label);
  return out;
}

std::vector<NodeId> RootedBinaryTree::internal_preorder() const {
  // Nodes are stored in preorder (see Builder::build).
  std::vector<NodeId> out;
  out.reserve(internal_count());
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].first != kNoNode) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

std::vector<NodeId> RootedBinaryTree::plane_leaf_order(unsigned long long mask) const {
  std::vector<int> bit(nodes_.size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].first != kNoNode) bit[v] = next++;
  }
  std::vector<NodeId> out;
  out.reserve(leaf_count());
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    const Node& nd = nodes_[v];
    if (nd.first == kNoNode) {
      out.push_back(v);
      continue;
    }
    bool swap = bit[v] < 64 && ((mask >> bit[v]) & 1ULL);
    NodeId a = swap ? nd.second : nd.first;
    NodeId b = swap ? nd.first : nd.second;
    stack.push_back(b);
    stack.push_back(a);
  }
  return out;
}

std::vector<int> RootedBinaryTree::depths() const {
  // Parents precede children in preorder storage.
  std::vector<int> d(nodes_.size(), 0);
  for (std::size_t v = 1; v < nodes_.size(); ++v) d[v] = d[nodes_[v].parent] + 1;
  return d;
}

namespace {

void write_newick(const RootedBinaryTree& t, NodeId v, std::string& out) {
  if (t.is_leaf(v)) {
    out += t.label(v);
    return;
  }
  auto [a, b] = t.children(v);
  out += '(';
  write_newick(t, a, out);
  out += ',';
  write_newick(t, b, out);
  out += ')';
}

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  RootedBinaryTree parse() {
    skip_ws();
    NodeId root = subtree();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return std::move(builder_).build(root);
  }

 private:
  NodeId subtree() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      NodeId a = subtree();
      expect(',');
      NodeId b = subtree();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ',') fail("vertex with more than two children");
      expect(')');
      return builder_.add_internal(a, b);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a leaf label");
    return builder_.add_leaf(Label(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static bool is_label_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',' &&
           c != ';' && c != ':';
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("newick parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  RootedBinaryTree::Builder builder_;
};

std::string canonical_newick_at(const RootedBinaryTree& t, NodeId v, std::string& min_label) {
  if (t.is_leaf(v)) {
    min_label = t.label(v);
    return t.label(v);
  }
  auto [a, b] = t.children(v);
  std::string ma, mb;
  std::string sa = canonical_newick_at(t, a, ma);
  std::string sb = canonical_newick_at(t, b, mb);
  if (mb < ma) {
    std::swap(sa, sb);
    std::swap(ma, mb);
  }
  min_label = ma;
  return "(" + sa + "," + sb + ")";
}

}  // namespace

std::string RootedBinaryTree::to_newick() const {
  std::string out;
  write_newick(*this, root_, out);
  return out;
}

RootedBinaryTree RootedBinaryTree::parse_newick(std::string_view text) {
  return NewickParser(text).parse();
}

bool operator==(const RootedBinaryTree& a, const RootedBinaryTree& b) {
  return a.leaf_count() == b.leaf_count() && canonical_newick(a) == canonical_newick(b);
}

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',' ||
           c == ';' || c == ':';
  });
}

RootedBinaryTree caterpillar(int n) {
  if (n < 2) throw InvalidSize("caterpillar needs n >= 2, got " + std::to_string(n));
  RootedBinaryTree::Builder b;
  NodeId deep_a = b.add_leaf(std::to_string(n - 1));
  NodeId deep_b = b.add_leaf(std::to_string(n));
  NodeId spine = b.add_internal(deep_a, deep_b);
  for (int i = n - 2; i >= 1; --i) {
    NodeId leaf = b.add_leaf(std::to_string(i));
    spine = b.add_internal(leaf, spine);
  }
  return std::move(b).build(spine);
}

RootedBinaryTree induced_subtree(const RootedBinaryTree& tree, std::span<const Label> labels) {
  if (labels.empty()) throw InvalidArgument("induced_subtree: empty leaf set");
  std::vector<int> marked(tree.node_count(), 0);
  for (const Label& l : labels) {
    auto v = tree.find_leaf(l);
    if (!v) throw InvalidArgument("induced_subtree: unknown leaf label '" + l + "'");
    marked[*v] = 1;
  }
  // Count marked leaves below each vertex; children follow parents in storage.
  for (auto v = static_cast<NodeId>(tree.node_count()) - 1; v > 0; --v) {
    marked[tree.parent(v)] += marked[v];
  }

  RootedBinaryTree::Builder b;
  auto build = [&](auto&& self, NodeId v) -> NodeId {
    while (!tree.is_leaf(v)) {
      auto [x, y] = tree.children(v);
      if (marked[x] > 0 && marked[y] > 0) {
        NodeId bx = self(self, x);
        NodeId by = self(self, y);
        return b.add_internal(bx, by);
      }
      v = marked[x] > 0 ? x : y;  // suppress the unary vertex
    }
    return b.add_leaf(tree.label(v));
  };
  NodeId root = build(build, tree.root());
  return std::move(b).build(root);
}

std::map<Label, int> leaf_depths(const RootedBinaryTree& tree) {
  auto d = tree.depths();
  std::map<Label, int> out;
  for (NodeId v : tree.leaves()) out.emplace(tree.label(v), d[v]);
  return out;
}

bool is_caterpillar(const RootedBinaryTree& tree) {
  const auto n = static_cast<int>(tree.leaf_count());
  if (n < 2) return false;
  std::vector<int> per_depth(static_cast<std::size_t>(n) + 1, 0);
  auto d = tree.depths();
  for (NodeId v : tree.leaves()) {
    if (d[v] > n - 1) return false;
    ++per_depth[d[v]];
  }
  for (int i = 1; i <= n - 2; ++i) {
    if (per_depth[i] != 1) return false;
  }
  return per_depth[n - 1] == 2;
}

bool order_consistent(const RootedBinaryTree& tree, std::span<const Label> order) {
  if (order.size() != tree.leaf_count()) {
    throw InvalidArgument("order_consistent: order has wrong length");
  }
  std::vector<int> pos(tree.node_count(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto v = tree.find_leaf(order[i]);
    if (!v) throw InvalidArgument("order_consistent: unknown label '" + order[i] + "'");
    if (pos[*v] != -1) throw InvalidArgument("order_consistent: repeated label '" + order[i] + "'");
    pos[*v] = static_cast<int>(i);
  }
  std::vector<int> lo(tree.node_count()), hi(tree.node_count()), cnt(tree.node_count(), 0);
  for (auto v = static_cast<NodeId>(tree.node_count()) - 1; v >= 0; --v) {
    if (tree.is_leaf(v)) {
      lo[v] = hi[v] = pos[v];
      cnt[v] = 1;
      continue;
    }
    auto [a, b] = tree.children(v);
    lo[v] = std::min(lo[a], lo[b]);
    hi[v] = std::max(hi[a], hi[b]);
    cnt[v] = cnt[a] + cnt[b];
    if (hi[v] - lo[v] + 1 != cnt[v]) return false;
  }
  return true;
}

std::string canonical_newick(const RootedBinaryTree& tree) {
  std::string min_label;
  return canonical_newick_at(tree, tree.root(), min_label);
}

std::vector<std::string> shape_codes(const RootedBinaryTree& tree) {
  std::vector<std::string> code(tree.node_count());
  for (auto v = static_cast<NodeId>(tree.node_count()) - 1; v >= 0; --v) {
    if (tree.is_leaf(v)) {
      code[v] = "x";
      continue;
    }
    auto [a, b] = tree.children(v);
    const std::string& ca = code[a];
    const std::string& cb = code[b];
    code[v] = ca <= cb ? "(" + ca + cb + ")" : "(" + cb + ca + ")";
  }
  return code;
}

}  // namespace tangle
