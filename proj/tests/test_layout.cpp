#include <doctest.h>

#include "oracles.hpp"
#include "tangle/antichain.hpp"
#include "tangle/error.hpp"
#include "tangle/layout.hpp"

using namespace tangle;

namespace {

Permutation P(std::initializer_list<int> xs) { return Permutation(std::vector<int>(xs)); }

std::vector<Label> L(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

std::vector<Label> numbers(std::span<const int> xs) {
  std::vector<Label> out;
  for (int x : xs) out.push_back(std::to_string(x));
  return out;
}

Tanglegram fig1() {
  return Tanglegram::parse("((a,b),(c,d)) ; (a,(c,(b,d))) ; a:a,b:b,c:c,d:d");
}

}  // namespace

TEST_CASE("count_crossings basics") {
  auto two = Tanglegram::parse("(x,y) ; (u,v) ; x:v,y:u");
  CHECK(count_crossings(Layout(two, L({"x", "y"}), L({"u", "v"}))) == 1);
  CHECK(count_crossings(Layout(two, L({"x", "y"}), L({"v", "u"}))) == 0);

  auto id = catergram(Permutation::identity(6));
  auto order = numbers(Permutation::identity(6).entries());
  CHECK(count_crossings(Layout(id, order, order)) == 0);

  CHECK_THROWS_AS(Layout(two, L({"x"}), L({"u", "v"})), InvalidLayout);
  CHECK_THROWS_AS(Layout(two, L({"x", "x"}), L({"u", "v"})), InvalidLayout);
  auto c3 = catergram(Permutation::identity(3));
  CHECK_THROWS_AS(Layout(c3, L({"2", "1", "3"}), L({"1", "2", "3"})), InvalidLayout);
}

TEST_CASE("the Fig. 1 tanglegram") {
  auto t = fig1();
  // As drawn on the left: one pair of segments crosses.
  CHECK(count_crossings(Layout(t, L({"a", "b", "c", "d"}), L({"a", "c", "b", "d"}))) == 1);
  CHECK(count_crossings(Layout(t, L({"a", "b", "d", "c"}), L({"a", "b", "d", "c"}))) == 0);
  CHECK(crossing_number(t) == 0);
  CHECK(is_planar(t));
}

TEST_CASE("count_inversions") {
  CHECK(count_inversions({}) == 0);
  CHECK(count_inversions({3, 2, 1}) == 3);
  CHECK(count_inversions({1, 3, 2}) == 1);
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = oracle::random_perm(static_cast<int>(rng() % 60) + 1, rng);
    std::vector<int> seq(p.entries().begin(), p.entries().end());
    CHECK(count_inversions(seq) == oracle::naive_crossings(seq));
  }
}

TEST_CASE("crossing numbers") {
  CHECK(crossing_number(catergram(P({1, 2}))) == 0);
  CHECK(crossing_number(catergram(P({3, 2, 1, 4}))) == 1);
  // Size 14 needs a raised cap; the sweep stops at the first crossing-free layout.
  CHECK(crossing_number(catergram(rho(1)), 14) == 0);

  std::mt19937 rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    auto t = oracle::random_tanglegram(2 + static_cast<int>(rng() % 5), rng);
    auto best = minimum_layout(t);
    CHECK(best.crossings == oracle::crossing_number(t));
    CHECK(count_crossings(layout_from_masks(t, best.left_mask, best.right_mask)) == best.crossings);
  }
  CHECK_THROWS_AS(crossing_number(catergram(Permutation::identity(13))), BudgetExceeded);
  CHECK(crossing_number(catergram(Permutation::identity(13)), 13) == 0);
}

TEST_CASE("the two excluded tanglegrams") {
  auto [e1, e2] = excluded_tanglegrams();
  CHECK(equal(e1, catergram(P({3, 2, 1, 4}))));
  CHECK_FALSE(is_caterpillar(e2.left()));
  CHECK_FALSE(is_caterpillar(e2.right()));
  CHECK_FALSE(equal(e1, e2));
  for (const auto* e : {&e1, &e2}) {
    CHECK(oracle::crossing_number(*e) == 1);
    CHECK(crossing_number(*e) == 1);
    CHECK_FALSE(is_planar(*e, PlanarityMethod::kKuratowski));
    CHECK_FALSE(is_planar(*e, PlanarityMethod::kOracle));
    CHECK_FALSE(planar_layout(*e));
    auto w = find_excluded(*e);
    REQUIRE(w);
    CHECK(w->size() == 4);
  }
  CHECK(is_planar(catergram(Permutation::identity(7))));
}

TEST_CASE("Kuratowski planarity agrees with the crossing-number oracle") {
  for (const auto& t : all_tanglegrams(4)) {
    CHECK(is_planar(t, PlanarityMethod::kKuratowski) == (oracle::crossing_number(t) == 0));
  }
  for (const auto& p : oracle::all_perms(5)) {
    auto t = catergram(p);
    const bool oracle_planar = oracle::crossing_number(t) == 0;
    CHECK(is_planar(t, PlanarityMethod::kKuratowski) == oracle_planar);
    CHECK(is_planar(t, PlanarityMethod::kOracle) == oracle_planar);
    CHECK(is_planar_catergram(p) == oracle_planar);
    CHECK(planar_layout(t).has_value() == oracle_planar);
  }
  std::mt19937 rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    auto t = oracle::random_tanglegram(5 + static_cast<int>(rng() % 3), rng);
    const bool k = is_planar(t, PlanarityMethod::kKuratowski);
    CHECK(k == is_planar(t, PlanarityMethod::kOracle));
    auto pl = planar_layout(t);
    CHECK(pl.has_value() == k);
    if (pl) CHECK(count_crossings(*pl) == 0);
    if (!k) {
      auto w = find_excluded(t);
      REQUIRE(w);
      auto [e1, e2] = excluded_tanglegrams();
      auto sub = induced_subtanglegram(t, *w);
      CHECK((equal(sub, e1) || equal(sub, e2)));
    }
  }
}

TEST_CASE("catergram planarity by patterns") {
  // The four forbidden patterns are one bar set.
  CHECK(bar_set(P({3, 2, 1, 4})) ==
        std::vector<Permutation>{P({3, 2, 1, 4}), P({3, 2, 4, 1}), P({4, 2, 1, 3}), P({4, 2, 3, 1})});
  CHECK_FALSE(is_planar_catergram(P({3, 2, 1, 4})));
  CHECK(is_planar_catergram(P({1, 2})));
  for (int i = 1; i <= 12; ++i) CHECK(is_planar_catergram(rho(i)));
  std::mt19937 rng(44);
  for (int trial = 0; trial < 150; ++trial) {
    auto p = oracle::random_perm(6 + static_cast<int>(rng() % 3), rng);
    auto t = catergram(p);
    CHECK(is_planar_catergram(p) == is_planar(t, PlanarityMethod::kOracle));
    CHECK(is_planar_catergram(p) == is_planar(t, PlanarityMethod::kKuratowski));
  }
}

TEST_CASE("planar layouts") {
  auto id = catergram(Permutation::identity(5));
  auto pl = planar_layout(id);
  REQUIRE(pl);
  CHECK(pl->left_order() == numbers(Permutation::identity(5).entries()));
  CHECK(pl->right_order() == pl->left_order());

  auto fig3 = planar_layout(catergram(rho(4)));
  REQUIRE(fig3);
  const std::vector<int> expect{1, 2, 3, 5, 7, 9, 11, 13, 15, 17, 18, 19, 20, 16, 14, 12, 10, 8, 6, 4};
  CHECK(fig3->left_order() == numbers(expect));
  CHECK(count_crossings(*fig3) == 0);

  // The catergram search has no size cap.
  auto big = planar_layout(catergram(rho(30)));
  REQUIRE(big);
  CHECK(count_crossings(*big) == 0);
  CHECK_FALSE(planar_layout(catergram(P({5, 3, 2, 1, 4, 6}))));

  CHECK_THROWS_AS(planar_layout(Tanglegram::parse(
                      "((a,b),((c,d),((e,f),((g,h),((i,j),((k,l),(m,n))))))) ; "
                      "((a,b),((c,d),((e,f),((g,h),((i,j),((k,l),(m,n))))))) ; "
                      "a:a,b:b,c:c,d:d,e:e,f:f,g:g,h:h,i:i,j:j,k:k,l:l,m:m,n:n")),
                  BudgetExceeded);
}

TEST_CASE("closed-form layout of the rho family") {
  const std::vector<int> expect{1, 2, 3, 5, 7, 9, 11, 13, 15, 17, 18, 19, 20, 16, 14, 12, 10, 8, 6, 4};
  CHECK(rho_layout_order(4) == expect);
  CHECK(rho_layout(4).left_order() == numbers(expect));
  for (int i = 1; i <= 20; ++i) {
    auto order = rho_layout_order(i);
    CHECK(order.size() == static_cast<std::size_t>(12 + 2 * i));
    Permutation seq(order);
    CHECK(is_unimodal(seq));
    // Image under rho is cater-good too.
    std::vector<int> image;
    for (int v : order) image.push_back(rho(i).at(v));
    CHECK(is_cater_good(Permutation(image)));
    auto layout = rho_layout(i);
    CHECK(count_crossings(layout) == 0);
    // Reading both lines backwards changes nothing.
    std::vector<Label> lrev(layout.left_order().rbegin(), layout.left_order().rend());
    std::vector<Label> rrev(layout.right_order().rbegin(), layout.right_order().rend());
    CHECK(count_crossings(Layout(layout.tanglegram(), lrev, rrev)) == 0);
  }
  CHECK_THROWS_AS(rho_layout(0), InvalidIndex);
}

TEST_CASE("census of small tanglegrams") {
  CHECK(census(1).total == 1);
  CHECK(census(2).total == 1);
  CHECK(census(3).total == 2);
  auto c4 = census(4);
  CHECK(c4.total == 13);
  std::size_t sum = 0;
  for (const auto& [k, count] : c4.by_crossing_number) sum += count;
  CHECK(sum == 13);
  // Exactly the two excluded tanglegrams are non-planar at size 4.
  CHECK(c4.by_crossing_number.at(0) == 11);
  CHECK(c4.by_crossing_number.at(1) == 2);
  CHECK(census(5).total == 114);
}
