#pragma once

#include <chrono>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tangle {

// A permutation of [n] in one-line notation, values 1..n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);
  // "(2,3,5,1)"; surrounding and inner whitespace is tolerated.
  static Permutation parse(std::string_view text);
  // Same syntax, but any sequence of distinct positive integers is accepted
  // and replaced by its pattern: "(2,3,5,1)" -> (2,3,4,1).
  static Permutation parse_pattern(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  // 1-based: at(i) = pi(i).
  int at(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const int> entries() const { return entries_; }
  // Positions by value: position_of(v) = pi^{-1}(v), 1-based.
  std::vector<int> inverse_entries() const;

  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

// pi[A]: the pattern formed by the positions in A (a set; order and repeats ignored).
Permutation restrict(const Permutation& pi, std::span<const int> positions);

struct PatternSearchLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Lexicographically least position set A (1-based, increasing) with
// pi[A] == pattern, or nullopt. Throws BudgetExceeded if the deadline passes.
std::optional<std::vector<int>> contains_pattern(const Permutation& pi, const Permutation& pattern,
                                                 const PatternSearchLimits& limits = {});

// Swap the images of positions n-1 and n.
Permutation hat(const Permutation& pi);
// Swap the values n-1 and n.
Permutation tilde(const Permutation& pi);
Permutation star(const Permutation& pi);

enum class BarTag { kSelf, kHat, kTilde, kStar };
std::string_view to_string(BarTag tag);

struct BarMember {
  BarTag tag;
  Permutation perm;
};

// {pi, hat, tilde, star} without duplicates, sorted by permutation.
std::vector<Permutation> bar_set(const Permutation& pi);
// Same members tagged by the operator that produced them, in the order
// self, hat, tilde, star; a member equal to an earlier one is dropped.
std::vector<BarMember> bar_members(const Permutation& pi);

Permutation upside_down(const Permutation& pi);

bool is_unimodal(const Permutation& seq);
// For every i the entries larger than i all lie on one side of i.
bool is_cater_good(const Permutation& seq);

}  // namespace tangle
