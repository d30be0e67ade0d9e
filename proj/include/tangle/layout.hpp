#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tangle/perm.hpp"
#include "tangle/tanglegram.hpp"

namespace tangle {

inline constexpr int kDefaultSizeCap = 12;

// A tanglegram with a tree-consistent leaf order on each side (first entry is
// the first leaf along the line).
class Layout {
 public:
  // Throws InvalidLayout unless both orders are permutations of the leaf sets
  // and consistent with their trees.
  Layout(Tanglegram tanglegram, std::vector<Label> left_order, std::vector<Label> right_order);

  const Tanglegram& tanglegram() const { return tanglegram_; }
  const std::vector<Label>& left_order() const { return left_order_; }
  const std::vector<Label>& right_order() const { return right_order_; }

  // Position along the right line of the partner of left_order()[k].
  std::vector<int> partner_positions() const;

 private:
  Tanglegram tanglegram_;
  std::vector<Label> left_order_;
  std::vector<Label> right_order_;
};

// The layout given by child-swap masks (bit b swaps the b-th internal vertex
// in preorder).
Layout layout_from_masks(const Tanglegram& t, unsigned long long left_mask, unsigned long long right_mask);

// Unordered pairs of matching edges whose endpoints interleave.
long long count_crossings(const Layout& layout);

// Inversions of a sequence of distinct integers, by merge sort.
long long count_inversions(std::vector<int> seq);

struct MinimumLayout {
  long long crossings = 0;
  unsigned long long left_mask = 0;
  unsigned long long right_mask = 0;
};

// Exhaustive sweep over all 2^(n-1) x 2^(n-1) mask pairs, left mask major,
// ties to the smaller mask pair. BudgetExceeded when n > cap.
MinimumLayout minimum_layout(const Tanglegram& t, int cap = kDefaultSizeCap);
long long crossing_number(const Tanglegram& t, int cap = kDefaultSizeCap);

// E1 = catergram (3,2,1,4); E2 = two balanced trees with the middle pair crossed.
std::pair<Tanglegram, Tanglegram> excluded_tanglegrams();

enum class PlanarityMethod { kKuratowski, kOracle };

// kKuratowski: no 4-edge subset induces E1 or E2. kOracle: crossing number 0.
bool is_planar(const Tanglegram& t, PlanarityMethod method = PlanarityMethod::kKuratowski,
               int cap = kDefaultSizeCap);

// A 4-edge subset inducing E1 or E2, if any (first in lexicographic order of
// left leaf positions).
std::optional<std::vector<Edge>> find_excluded(const Tanglegram& t);

// No member of bar_set((3,2,1,4)) is a pattern of pi.
bool is_planar_catergram(const Permutation& pi);

// A crossing-free layout, or nullopt. Catergrams search the cater-good left
// orders whose image is cater-good, in increasing mask order, with no size cap;
// other tanglegrams fall back to the mask sweep under the cap.
std::optional<Layout> planar_layout(const Tanglegram& t, int cap = kDefaultSizeCap);

// The closed-form planar layout of T_{rho_i}.
std::vector<int> rho_layout_order(int i);
Layout rho_layout(int i);

struct Census {
  int size = 0;
  std::size_t total = 0;
  std::map<long long, std::size_t> by_crossing_number;
};

// All tanglegrams of size n up to equality, tallied by crossing number.
Census census(int n);

}  // namespace tangle
