#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tangle/perm.hpp"
#include "tangle/tree.hpp"

namespace tangle {

// One matching edge, identified by its two leaf labels.
struct Edge {
  Label left;
  Label right;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// (left tree, right tree, perfect matching between their leaves).
class Tanglegram {
 public:
  Tanglegram(RootedBinaryTree left, RootedBinaryTree right, std::span<const Edge> matching);

  const RootedBinaryTree& left() const { return left_; }
  const RootedBinaryTree& right() const { return right_; }
  std::size_t size() const { return left_.leaf_count(); }

  // Matched right leaf for a left leaf id, and vice versa.
  NodeId partner_of_left(NodeId left_leaf) const { return to_right_.at(static_cast<std::size_t>(left_leaf)); }
  NodeId partner_of_right(NodeId right_leaf) const { return to_left_.at(static_cast<std::size_t>(right_leaf)); }
  std::optional<Label> partner_of_left(std::string_view left_label) const;

  // Edges in the left tree's leaf order.
  std::vector<Edge> edges() const;

  // "<left newick> ; <right newick> ; a:b,c:d,..." or "catergram (2,3,5,1)".
  std::string to_string() const;
  static Tanglegram parse(std::string_view line);

 private:
  RootedBinaryTree left_;
  RootedBinaryTree right_;
  std::vector<NodeId> to_right_;  // indexed by left node id
  std::vector<NodeId> to_left_;   // indexed by right node id
};

// Multiset of (left depth, right depth) over the matching, sorted.
class DistancePairMultiset {
 public:
  explicit DistancePairMultiset(std::vector<std::pair<int, int>> pairs);
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  std::size_t count(std::pair<int, int> p) const;
  friend bool operator==(const DistancePairMultiset&, const DistancePairMultiset&) = default;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// (C_n, C_n, M_pi): left leaf "i" matched to right leaf "pi(i)".
Tanglegram catergram(const Permutation& pi);

DistancePairMultiset distance_pairs(const Tanglegram& t);

// Isomorphism-invariant code: two tanglegrams are equal (root-fixing
// isomorphism respecting the matching) iff their codes are equal.
//
// One side is turned into a plane tree by ordering children by shape code;
// only vertices whose two child subtrees have the same shape leave a choice.
// For every such choice the leaves of that side get positions, the other
// side's leaves inherit their partner's position, and the other tree is
// written as a labeled tree with children sorted by smallest position. The
// code is the least of these encodings. Cost is 2^s encodings where s is the
// number of symmetric vertices on the branching side; the side with fewer
// symmetric vertices branches.
struct CanonicalForm {
  bool right_branches = false;
  std::string shape;
  std::vector<int> partner_code;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Tanglegram& t);

bool equal(const Tanglegram& a, const Tanglegram& b);

// T[M'] for a non-empty subset of the matching.
Tanglegram induced_subtanglegram(const Tanglegram& t, std::span<const Edge> edges);
// The edges incident to the given left leaves.
Tanglegram induced_by_left(const Tanglegram& t, std::span<const Label> left_labels);

// When both trees are caterpillars: the permutation of the distance labeling
// plus the actual labels of the leaves carrying distance label i (index i-1).
struct CatergramView {
  Permutation perm;
  std::vector<Label> left_labels;
  std::vector<Label> right_labels;
};
std::optional<CatergramView> as_catergram(const Tanglegram& t);

// sub ⪯ host. Catergram pairs go through pattern containment of the bar set;
// everything else through induced_witness.
bool is_induced_sub(const Tanglegram& sub, const Tanglegram& host);

// Subset search: the first |sub|-subset of host's left leaves (in lexicographic
// order of left leaf positions) inducing a tanglegram equal to `sub`, filtered
// by distance pairs before the canonical comparison.
std::optional<std::vector<Edge>> induced_witness(const Tanglegram& sub, const Tanglegram& host);

// Every tanglegram of size n up to equality, n >= 1. Leaves are labeled 1..n.
std::vector<Tanglegram> all_tanglegrams(int n);

// Every rooted binary tree shape with n leaves labeled 1..n in leaf order.
std::vector<RootedBinaryTree> all_tree_shapes(int n);

}  // namespace tangle
