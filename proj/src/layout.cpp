#include "tangle/layout.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "tangle/antichain.hpp"
#include "tangle/error.hpp"

namespace tangle {

namespace {

void check_order(const RootedBinaryTree& tree, const std::vector<Label>& order, const char* side) {
  bool ok = false;
  try {
    ok = order_consistent(tree, order);
  } catch (const InvalidArgument& e) {
    throw InvalidLayout(std::string(side) + " order is not a permutation of the leaves: " + e.what());
  }
  if (!ok) throw InvalidLayout(std::string(side) + " order is not consistent with the tree");
}

long long merge_count(std::vector<int>& a, std::vector<int>& buf, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  long long inv = merge_count(a, buf, lo, mid) + merge_count(a, buf, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[j] < a[i]) {
      inv += static_cast<long long>(mid - i);
      buf[k++] = a[j++];
    } else {
      buf[k++] = a[i++];
    }
  }
  while (i < mid) buf[k++] = a[i++];
  while (j < hi) buf[k++] = a[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
            a.begin() + static_cast<std::ptrdiff_t>(lo));
  return inv;
}

void check_cap(const Tanglegram& t, int cap) {
  if (static_cast<long long>(t.size()) > cap) {
    throw BudgetExceeded("exhaustive layout sweep refused: size " + std::to_string(t.size()) +
                         " exceeds the cap of " + std::to_string(cap));
  }
  if (t.size() > 63) throw BudgetExceeded("exhaustive layout sweep supports at most 63 leaves");
}

std::vector<Label> labels_of(const RootedBinaryTree& tree, const std::vector<NodeId>& ids) {
  std::vector<Label> out;
  out.reserve(ids.size());
  for (NodeId v : ids) out.push_back(tree.label(v));
  return out;
}

}  // namespace

Layout::Layout(Tanglegram tanglegram, std::vector<Label> left_order, std::vector<Label> right_order)
    : tanglegram_(std::move(tanglegram)), left_order_(std::move(left_order)), right_order_(std::move(right_order)) {
  check_order(tanglegram_.left(), left_order_, "left");
  check_order(tanglegram_.right(), right_order_, "right");
}

std::vector<int> Layout::partner_positions() const {
  std::unordered_map<Label, int> rpos;
  for (std::size_t k = 0; k < right_order_.size(); ++k) rpos.emplace(right_order_[k], static_cast<int>(k));
  std::vector<int> seq;
  seq.reserve(left_order_.size());
  for (const Label& l : left_order_) seq.push_back(rpos.at(*tanglegram_.partner_of_left(l)));
  return seq;
}

Layout layout_from_masks(const Tanglegram& t, unsigned long long left_mask, unsigned long long right_mask) {
  return Layout(t, labels_of(t.left(), t.left().plane_leaf_order(left_mask)),
                labels_of(t.right(), t.right().plane_leaf_order(right_mask)));
}

long long count_inversions(std::vector<int> seq) {
  std::vector<int> buf(seq.size());
  return merge_count(seq, buf, 0, seq.size());
}

long long count_crossings(const Layout& layout) { return count_inversions(layout.partner_positions()); }

MinimumLayout minimum_layout(const Tanglegram& t, int cap) {
  check_cap(t, cap);
  const auto n = t.size();
  const auto& left = t.left();
  const auto& right = t.right();
  const unsigned long long left_masks = 1ULL << left.internal_count();
  const unsigned long long right_masks = 1ULL << right.internal_count();

  // Right position of every right leaf, per right mask.
  std::vector<std::vector<int>> right_pos(right_masks, std::vector<int>(right.node_count(), -1));
  for (unsigned long long rm = 0; rm < right_masks; ++rm) {
    auto order = right.plane_leaf_order(rm);
    for (std::size_t k = 0; k < order.size(); ++k) right_pos[rm][order[k]] = static_cast<int>(k);
  }

  MinimumLayout best;
  best.crossings = -1;
  std::vector<NodeId> partners(n);
  std::vector<int> seq(n);
  for (unsigned long long lm = 0; lm < left_masks; ++lm) {
    auto order = left.plane_leaf_order(lm);
    for (std::size_t k = 0; k < n; ++k) partners[k] = t.partner_of_left(order[k]);
    for (unsigned long long rm = 0; rm < right_masks; ++rm) {
      const auto& rp = right_pos[rm];
      for (std::size_t k = 0; k < n; ++k) seq[k] = rp[partners[k]];
      long long c = 0;
      const long long bound = best.crossings < 0 ? -1 : best.crossings;
      for (std::size_t a = 0; a < n && (bound < 0 || c < bound); ++a) {
        for (std::size_t b = a + 1; b < n; ++b) c += seq[b] < seq[a];
      }
      if (best.crossings < 0 || c < best.crossings) {
        best = {c, lm, rm};
        if (c == 0) return best;
      }
    }
  }
  return best;
}

long long crossing_number(const Tanglegram& t, int cap) { return minimum_layout(t, cap).crossings; }

std::pair<Tanglegram, Tanglegram> excluded_tanglegrams() {
  Tanglegram e1 = catergram(Permutation({3, 2, 1, 4}));
  auto balanced = RootedBinaryTree::parse_newick("((1,2),(3,4))");
  const std::vector<Edge> m{{"1", "1"}, {"2", "3"}, {"3", "2"}, {"4", "4"}};
  Tanglegram e2(balanced, balanced, m);
  return {std::move(e1), std::move(e2)};
}

std::optional<std::vector<Edge>> find_excluded(const Tanglegram& t) {
  const std::size_t n = t.size();
  if (n < 4) return std::nullopt;
  static const auto excluded = [] {
    auto [e1, e2] = excluded_tanglegrams();
    return std::vector<std::pair<DistancePairMultiset, CanonicalForm>>{
        {distance_pairs(e1), canonical_form(e1)}, {distance_pairs(e2), canonical_form(e2)}};
  }();
  const auto labels = t.left().leaf_labels();
  std::vector<Label> chosen(4);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          chosen = {labels[a], labels[b], labels[c], labels[d]};
          Tanglegram sub = induced_by_left(t, chosen);
          auto pairs = distance_pairs(sub);
          for (const auto& [want_pairs, want_form] : excluded) {
            if (pairs == want_pairs && canonical_form(sub) == want_form) return sub.edges();
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_planar(const Tanglegram& t, PlanarityMethod method, int cap) {
  if (method == PlanarityMethod::kOracle) return crossing_number(t, cap) == 0;
  return !find_excluded(t).has_value();
}

bool is_planar_catergram(const Permutation& pi) {
  static const auto forbidden = bar_set(Permutation({3, 2, 1, 4}));
  return std::none_of(forbidden.begin(), forbidden.end(),
                      [&](const Permutation& sigma) { return contains_pattern(pi, sigma).has_value(); });
}

namespace {

// Grows a cater-good order of distance labels from the deepest pair outward.
// Spine vertex b (preorder, depth b) holds leaf b+1 and the deeper block; its
// swap bit puts the leaf after the block. Deciding bits from the most
// significant one down, unswapped first, visits masks in increasing order.
class CaterGoodSearch {
 public:
  explicit CaterGoodSearch(const Permutation& pi) : pi_(pi), n_(pi.size()) {}

  std::optional<std::vector<int>> run() {
    for (int swap_last : {0, 1}) {
      block_.clear();
      image_.clear();
      const int a = swap_last ? n_ : n_ - 1;
      const int b = swap_last ? n_ - 1 : n_;
      push(a, true);
      push(b, true);
      if (extend(n_ - 2)) return std::vector<int>(block_.begin(), block_.end());
    }
    return std::nullopt;
  }

 private:
  bool extend(int value) {
    if (value == 0) return true;
    for (bool append : {false, true}) {
      push(value, append);
      if (image_ok(append) && extend(value - 1)) return true;
      pop(append);
    }
    return false;
  }

  void push(int value, bool append) {
    if (append) {
      block_.push_back(value);
      image_.push_back(pi_.at(value));
    } else {
      block_.push_front(value);
      image_.push_front(pi_.at(value));
    }
  }

  void pop(bool append) {
    if (append) {
      block_.pop_back();
      image_.pop_back();
    } else {
      block_.pop_front();
      image_.pop_front();
    }
  }

  // Only entries smaller than the new end entry can have become flanked by
  // larger values; such an entry needs everything on its far side to be smaller.
  bool image_ok(bool appended) const {
    const auto len = image_.size();
    const int w = appended ? image_.back() : image_.front();
    int far_max = 0;
    for (std::size_t step = 0; step + 1 < len; ++step) {
      const int u = appended ? image_[step] : image_[len - 1 - step];
      if (u < w && far_max > u) return false;
      far_max = std::max(far_max, u);
    }
    return true;
  }

  const Permutation& pi_;
  int n_;
  std::deque<int> block_;
  std::deque<int> image_;
};

}  // namespace

std::optional<Layout> planar_layout(const Tanglegram& t, int cap) {
  if (auto view = as_catergram(t)) {
    auto order = CaterGoodSearch(view->perm).run();
    if (!order) return std::nullopt;
    std::vector<Label> left, right;
    for (int v : *order) {
      left.push_back(view->left_labels[v - 1]);
      right.push_back(view->right_labels[view->perm.at(v) - 1]);
    }
    return Layout(t, std::move(left), std::move(right));
  }
  auto best = minimum_layout(t, cap);
  if (best.crossings != 0) return std::nullopt;
  return layout_from_masks(t, best.left_mask, best.right_mask);
}

std::vector<int> rho_layout_order(int i) {
  if (i < 1) throw InvalidIndex("rho_layout needs i >= 1, got " + std::to_string(i));
  std::vector<int> a{1, 2, 3};
  for (int v = 5; v <= 9 + 2 * i; v += 2) a.push_back(v);
  for (int v = 10 + 2 * i; v <= 12 + 2 * i; ++v) a.push_back(v);
  for (int v = 8 + 2 * i; v >= 4; v -= 2) a.push_back(v);
  return a;
}

Layout rho_layout(int i) {
  auto order = rho_layout_order(i);
  const Permutation r = rho(i);
  std::vector<Label> left, right;
  for (int v : order) {
    left.push_back(std::to_string(v));
    right.push_back(std::to_string(r.at(v)));
  }
  return Layout(catergram(r), std::move(left), std::move(right));
}

Census census(int n) {
  Census out;
  out.size = n;
  for (const auto& t : all_tanglegrams(n)) {
    ++out.total;
    ++out.by_crossing_number[crossing_number(t, n)];
  }
  return out;
}

}  // namespace tangle
