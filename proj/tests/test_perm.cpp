#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "tangle/antichain.hpp"
#include "tangle/error.hpp"
#include "tangle/perm.hpp"
#include "tangle/tree.hpp"

using namespace tangle;

namespace {

Permutation P(std::initializer_list<int> xs) { return Permutation(std::vector<int>(xs)); }

}  // namespace

TEST_CASE("permutation validation and text form") {
  CHECK_THROWS_AS(P({1, 1}), InvalidArgument);
  CHECK_THROWS_AS(P({0, 1}), InvalidArgument);
  CHECK_THROWS_AS(P({1, 3}), InvalidArgument);

  CHECK(Permutation::parse("(2,3,5,1,4)") == P({2, 3, 5, 1, 4}));
  CHECK(Permutation::parse(" ( 2 , 1 ) ") == P({2, 1}));
  CHECK(P({2, 3, 5, 1, 4}).to_string() == "(2,3,5,1,4)");
  CHECK_THROWS_AS(Permutation::parse("2,1"), InvalidArgument);
  CHECK_THROWS_AS(Permutation::parse("(2,,1)"), InvalidArgument);
  CHECK_THROWS_AS(Permutation::parse("(2,1"), InvalidArgument);
  CHECK_THROWS_AS(Permutation::parse("(2,1)x"), InvalidArgument);
  CHECK_THROWS_AS(Permutation::parse("(2,3)"), InvalidArgument);
  CHECK(Permutation::parse_pattern("(2,3,5,1)") == P({2, 3, 4, 1}));
  CHECK(Permutation::parse_pattern("(40, 7)") == P({2, 1}));
  CHECK_THROWS_AS(Permutation::parse_pattern("(4,4)"), InvalidArgument);
  CHECK_THROWS_AS(Permutation::parse_pattern("(2,0)"), InvalidArgument);

  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = oracle::random_perm(1 + static_cast<int>(rng() % 20), rng);
    CHECK(Permutation::parse(p.to_string()) == p);
    CHECK(Permutation::parse(p.to_string()).to_string() == p.to_string());
  }
}

TEST_CASE("restrict") {
  auto p = P({2, 3, 5, 1, 4});
  std::vector<int> all{1, 2, 3, 4, 5};
  CHECK(restrict(p, all) == p);
  std::vector<int> a{1, 3, 4};
  CHECK(restrict(p, a) == P({2, 3, 1}));
  std::vector<int> unordered{4, 1, 3, 3};
  CHECK(restrict(p, unordered) == P({2, 3, 1}));

  std::vector<int> chain_a;
  for (int k = 1; k <= 16; ++k) {
    if (k != 2 && k != 4) chain_a.push_back(k);
  }
  const auto pi1 = P({13, 12, 10, 14, 8, 11, 6, 9, 4, 7, 3, 2, 1, 5});
  const auto pi2 = P({15, 14, 12, 16, 10, 13, 8, 11, 6, 9, 4, 7, 3, 2, 1, 5});
  CHECK(restrict(pi2, chain_a) == tilde(pi1));

  CHECK_THROWS_AS(restrict(p, std::vector<int>{}), InvalidArgument);
  CHECK_THROWS_AS(restrict(p, std::vector<int>{0, 1}), InvalidArgument);
  CHECK_THROWS_AS(restrict(p, std::vector<int>{6}), InvalidArgument);
}

TEST_CASE("contains_pattern examples") {
  auto w = contains_pattern(P({2, 3, 1}), P({1, 2}));
  REQUIRE(w);
  CHECK(*w == std::vector<int>{1, 2});
  CHECK_FALSE(contains_pattern(rho(2), rho(1)));
  CHECK_FALSE(contains_pattern(rho(1), P({3, 2, 1})));
  CHECK_FALSE(contains_pattern(P({2, 3, 5, 1, 4}), P({3, 2, 1})));
  CHECK_FALSE(contains_pattern(P({1, 2}), P({1, 2, 3})));
  CHECK(contains_pattern(P({5, 1, 4, 2, 3}), P({3, 1, 2})) == std::vector<int>{1, 2, 3});
}

TEST_CASE("contains_pattern agrees with subset enumeration") {
  // Exhaustive over small texts and patterns, including the witness.
  for (int n = 1; n <= 6; ++n) {
    for (const auto& text : oracle::all_perms(n)) {
      for (int m = 1; m <= std::min(n, 4); ++m) {
        for (const auto& pattern : oracle::all_perms(m)) {
          auto fast = contains_pattern(text, pattern);
          auto slow = oracle::contains_pattern(text, pattern);
          REQUIRE(fast == slow);
        }
      }
    }
  }
  std::mt19937 rng(2);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 7);
    const int m = 2 + static_cast<int>(rng() % 5);
    auto text = oracle::random_perm(n, rng);
    auto pattern = oracle::random_perm(m, rng);
    CHECK(contains_pattern(text, pattern) == oracle::contains_pattern(text, pattern));
  }
}

TEST_CASE("every restriction is contained") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    auto pi = oracle::random_perm(n, rng);
    std::vector<int> a;
    for (int p = 1; p <= n; ++p) {
      if (rng() % 2) a.push_back(p);
    }
    if (a.empty()) a.push_back(1 + static_cast<int>(rng() % n));
    auto w = contains_pattern(pi, restrict(pi, a));
    REQUIRE(w);
    CHECK(*w <= a);  // lexicographically least
    CHECK(restrict(pi, *w) == restrict(pi, a));
  }
}

TEST_CASE("an expired deadline aborts the search") {
  PatternSearchLimits limits;
  limits.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(contains_pattern(rho(6), rho(1), limits), BudgetExceeded);
}

TEST_CASE("hat, tilde and star") {
  CHECK(hat(P({2, 3, 1})) == P({2, 1, 3}));
  CHECK(tilde(P({2, 3, 1})) == P({3, 2, 1}));
  CHECK(star(P({2, 3, 1})) == P({3, 1, 2}));
  CHECK(tilde(rho(1)) == P({2, 3, 5, 1, 7, 4, 9, 6, 11, 8, 12, 14, 13, 10}));
  CHECK(bar_set(P({1, 2})) == std::vector<Permutation>{P({1, 2}), P({2, 1})});
  CHECK_THROWS_AS(hat(P({1})), InvalidSize);
  CHECK_THROWS_AS(tilde(P({1})), InvalidSize);
  CHECK_THROWS_AS(bar_set(P({1})), InvalidSize);

  std::mt19937 rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    auto p = oracle::random_perm(2 + static_cast<int>(rng() % 15), rng);
    CHECK(hat(hat(p)) == p);
    CHECK(tilde(tilde(p)) == p);
    CHECK(hat(tilde(p)) == tilde(hat(p)));
    CHECK(p != hat(p));
    CHECK(p != tilde(p));
  }
}

TEST_CASE("bar set has size 2 exactly when the last two entries are n-1 and n") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& p : oracle::all_perms(n)) {
      const auto size = bar_set(p).size();
      const int a = p.at(n - 1), b = p.at(n);
      const bool top_pair = std::min(a, b) == n - 1 && std::max(a, b) == n;
      CHECK((size == 2 || size == 4));
      CHECK((size == 2) == top_pair);
      CHECK((hat(p) == tilde(p)) == top_pair);
      CHECK((star(p) == p) == top_pair);
      CHECK(bar_members(p).size() == size);
    }
  }
}

TEST_CASE("bar sets partition S_n") {
  for (int n = 2; n <= 6; ++n) {
    auto perms = oracle::all_perms(n);
    std::map<Permutation, std::vector<Permutation>> bars;
    for (const auto& p : perms) bars.emplace(p, bar_set(p));
    for (const auto& p : perms) {
      const auto& bp = bars.at(p);
      for (const auto& r : perms) {
        const bool member = std::binary_search(bp.begin(), bp.end(), r);
        CHECK(member == (bars.at(r) == bp));
      }
    }
  }
}

TEST_CASE("upside_down") {
  CHECK(upside_down(rho(1)) == P({13, 12, 10, 14, 8, 11, 6, 9, 4, 7, 3, 2, 1, 5}));
  CHECK(upside_down(Permutation::identity(3)) == P({3, 2, 1}));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = oracle::random_perm(1 + static_cast<int>(rng() % 20), rng);
    CHECK(upside_down(upside_down(p)) == p);
  }
}

TEST_CASE("unimodal and cater-good") {
  CHECK(is_unimodal(P({1, 3, 2})));
  CHECK(is_cater_good(P({1, 3, 2})));
  CHECK_FALSE(is_cater_good(P({2, 1, 3})));
  CHECK_FALSE(is_unimodal(P({2, 1, 3})));
  CHECK(is_unimodal(Permutation::identity(6)));
  CHECK(is_cater_good(Permutation::identity(6)));
  CHECK(is_unimodal(P({3, 2, 1})));
  CHECK(is_cater_good(P({3, 2, 1})));
  CHECK(is_cater_good(P({1})));
  CHECK(is_cater_good(P({3, 4, 2, 1})));
  CHECK_FALSE(is_unimodal(P({1, 3, 2, 4})));

  for (int n = 1; n <= 8; ++n) {
    for (const auto& s : oracle::all_perms(n)) {
      const bool good = is_cater_good(s);
      CHECK(good == is_unimodal(s));
      CHECK(good == oracle::cater_good(s));
    }
  }
  for (int n = 2; n <= 7; ++n) {
    auto c = caterpillar(n);
    for (const auto& s : oracle::all_perms(n)) {
      std::vector<Label> order;
      for (int v : s.entries()) order.push_back(std::to_string(v));
      CHECK(is_cater_good(s) == order_consistent(c, order));
    }
  }
}
