#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tangle {

using Label = std::string;
using NodeId = int;

inline constexpr NodeId kNoNode = -1;

// Rooted binary tree with uniquely labeled leaves. Vertices are indices into a
// flat array; the tree is immutable once built. Every internal vertex has an
// ordered pair of children, but the order carries no meaning for equality.
class RootedBinaryTree {
 public:
  struct Node {
    NodeId parent = kNoNode;
    NodeId first = kNoNode;
    NodeId second = kNoNode;
    Label label;  // empty for internal vertices
  };

  class Builder {
   public:
    NodeId add_leaf(Label label);
    NodeId add_internal(NodeId first, NodeId second);
    // Validates the binary/rooted invariants and label uniqueness.
    RootedBinaryTree build(NodeId root) &&;

   private:
    std::vector<Node> nodes_;
  };

  static RootedBinaryTree single_leaf(Label label);

  NodeId root() const { return root_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t leaf_count() const { return leaf_index_.size(); }
  std::size_t internal_count() const { return nodes_.size() - leaf_index_.size(); }

  const Node& node(NodeId v) const { return nodes_.at(static_cast<std::size_t>(v)); }
  bool is_leaf(NodeId v) const { return node(v).first == kNoNode; }
  NodeId parent(NodeId v) const { return node(v).parent; }
  std::pair<NodeId, NodeId> children(NodeId v) const { return {node(v).first, node(v).second}; }
  const Label& label(NodeId v) const { return node(v).label; }

  std::optional<NodeId> find_leaf(std::string_view label) const;
  bool has_leaf(std::string_view label) const { return find_leaf(label).has_value(); }

  // Leaf labels in left-to-right (first child first) order.
  std::vector<Label> leaf_labels() const;
  // Leaf ids in left-to-right order.
  std::vector<NodeId> leaves() const;
  // Internal vertices in preorder; the index in this list is the bit used by
  // child-swap masks.
  std::vector<NodeId> internal_preorder() const;
  // Leaf order of the plane tree obtained by swapping the children of the
  // internal vertices whose preorder bit is set in `mask`.
  std::vector<NodeId> plane_leaf_order(unsigned long long mask) const;

  std::vector<int> depths() const;

  // Newick-like text: leaf = label, internal = "(" a "," b ")".
  std::string to_newick() const;
  static RootedBinaryTree parse_newick(std::string_view text);

  friend bool operator==(const RootedBinaryTree& a, const RootedBinaryTree& b);

 private:
  RootedBinaryTree() = default;

  std::vector<Node> nodes_;
  NodeId root_ = kNoNode;
  std::unordered_map<Label, NodeId> leaf_index_;
};

// True iff the label is a non-empty token free of "(),;:" and whitespace.
bool is_valid_label(std::string_view label);

// The rooted caterpillar C_n with distance labeling: leaf "i" sits at depth i
// for i <= n-2 and the two deepest leaves are "n-1" (first) and "n" (second).
RootedBinaryTree caterpillar(int n);

// T[B]: minimal subtree spanning B with unary vertices suppressed. A unary
// root is contracted down to the first branching vertex.
RootedBinaryTree induced_subtree(const RootedBinaryTree& tree, std::span<const Label> labels);

std::map<Label, int> leaf_depths(const RootedBinaryTree& tree);

bool is_caterpillar(const RootedBinaryTree& tree);

// Every internal vertex's descendant leaves occupy a contiguous block of `order`.
bool order_consistent(const RootedBinaryTree& tree, std::span<const Label> order);

// Labeled-tree normal form: children sorted so that two trees are equal as
// labeled rooted trees iff their canonical Newick strings coincide.
std::string canonical_newick(const RootedBinaryTree& tree);

// Child-order-insensitive shape code per vertex (labels ignored).
std::vector<std::string> shape_codes(const RootedBinaryTree& tree);

}  // namespace tangle
