#include "tangle/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "tangle/error.hpp"

namespace tangle {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const auto n = entries_.size();
  std::vector<char> seen(n + 1, 0);
  for (int v : entries_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
      throw InvalidArgument("not a permutation of [" + std::to_string(n) + "]");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

namespace {

std::vector<int> parse_values(std::string_view text) {
  auto fail = [&](const std::string& why) -> std::vector<int> {
    throw InvalidArgument("cannot parse permutation '" + std::string(text) + "': " + why);
  };
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '(') return fail("expected '('");
  ++i;
  std::vector<int> values;
  skip();
  if (i < text.size() && text[i] == ')') {
    ++i;
  } else {
    while (true) {
      skip();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) return fail("expected a number");
      if (i - start > 9) return fail("number too large");
      values.push_back(std::stoi(std::string(text.substr(start, i - start))));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      return fail("expected ',' or ')'");
    }
  }
  skip();
  if (i != text.size()) return fail("trailing characters");
  return values;
}

}  // namespace

Permutation Permutation::parse(std::string_view text) { return Permutation(parse_values(text)); }

Permutation Permutation::parse_pattern(std::string_view text) {
  auto values = parse_values(text);
  auto sorted = values;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("sequence '" + std::string(text) + "' repeats a value");
  }
  if (!sorted.empty() && sorted.front() < 1) throw InvalidArgument("sequence values must be positive");
  for (int& v : values) v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
  return Permutation(std::move(values));
}

std::vector<int> Permutation::inverse_entries() const {
  std::vector<int> inv(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) inv[entries_[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

std::string Permutation::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  out += ')';
  return out;
}

Permutation restrict(const Permutation& pi, std::span<const int> positions) {
  std::vector<int> a(positions.begin(), positions.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.empty()) throw InvalidArgument("restrict: empty position set");
  if (a.front() < 1 || a.back() > pi.size()) {
    throw InvalidArgument("restrict: position out of range [1," + std::to_string(pi.size()) + "]");
  }
  // Rank the selected values.
  std::vector<int> values;
  values.reserve(a.size());
  for (int p : a) values.push_back(pi.at(p));
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  out.reserve(values.size());
  for (int v : values) {
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  }
  return Permutation(std::move(out));
}

namespace {

// Left-to-right embedding search. For each pattern index k, `below[k]` and
// `above[k]` are the earlier pattern indices holding the nearest smaller and
// larger values; an extension is order-preserving iff the text value lies
// strictly between the images of those two indices.
class PatternMatcher {
 public:
  PatternMatcher(const Permutation& text, const Permutation& pattern, const PatternSearchLimits& limits)
      : text_(text.entries()), pattern_(pattern.entries()), limits_(limits) {
    const auto m = pattern_.size();
    below_.assign(m, -1);
    above_.assign(m, -1);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < k; ++j) {
        if (pattern_[j] < pattern_[k] && (below_[k] < 0 || pattern_[j] > pattern_[below_[k]])) {
          below_[k] = static_cast<int>(j);
        }
        if (pattern_[j] > pattern_[k] && (above_[k] < 0 || pattern_[j] < pattern_[above_[k]])) {
          above_[k] = static_cast<int>(j);
        }
      }
    }
    // Pattern entries that must still fit strictly below / above a value.
    smaller_after_.assign(m, 0);
    larger_after_.assign(m, 0);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = k + 1; j < m; ++j) {
        if (pattern_[j] < pattern_[k]) ++smaller_after_[k];
        else ++larger_after_[k];
      }
    }
    const auto n = text_.size();
    // smaller_right_[p] = number of text entries after p smaller than text[p].
    smaller_right_.assign(n, 0);
    larger_right_.assign(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (text_[q] < text_[p]) ++smaller_right_[p];
        else ++larger_right_[p];
      }
    }
    chosen_.assign(m, 0);
  }

  std::optional<std::vector<int>> run() {
    if (pattern_.size() > text_.size()) return std::nullopt;
    if (!extend(0, 0)) return std::nullopt;
    std::vector<int> out;
    out.reserve(chosen_.size());
    for (int p : chosen_) out.push_back(p + 1);
    return out;
  }

 private:
  bool extend(std::size_t k, std::size_t start) {
    const auto m = pattern_.size();
    if (k == m) return true;
    if (limits_.deadline && (steps_++ & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() > *limits_.deadline) {
      throw BudgetExceeded("pattern search exceeded its deadline");
    }
    const std::size_t last = text_.size() - (m - k);
    const int lo = below_[k] < 0 ? 0 : text_[chosen_[below_[k]]];
    const int hi = above_[k] < 0 ? static_cast<int>(text_.size()) + 1 : text_[chosen_[above_[k]]];
    for (std::size_t p = start; p <= last; ++p) {
      const int v = text_[p];
      if (v <= lo || v >= hi) continue;
      if (smaller_right_[p] < smaller_after_[k] || larger_right_[p] < larger_after_[k]) continue;
      chosen_[k] = static_cast<int>(p);
      if (extend(k + 1, p + 1)) return true;
    }
    return false;
  }

  std::span<const int> text_;
  std::span<const int> pattern_;
  const PatternSearchLimits& limits_;
  std::vector<int> below_, above_;
  std::vector<int> smaller_after_, larger_after_;
  std::vector<int> smaller_right_, larger_right_;
  std::vector<int> chosen_;
  unsigned long long steps_ = 0;
};

void require_hat_size(const Permutation& pi, const char* op) {
  if (pi.size() < 2) {
    throw InvalidSize(std::string(op) + " needs n >= 2, got n = " + std::to_string(pi.size()));
  }
}

}  // namespace

std::optional<std::vector<int>> contains_pattern(const Permutation& pi, const Permutation& pattern,
                                                 const PatternSearchLimits& limits) {
  return PatternMatcher(pi, pattern, limits).run();
}

Permutation hat(const Permutation& pi) {
  require_hat_size(pi, "hat");
  std::vector<int> e(pi.entries().begin(), pi.entries().end());
  std::swap(e[e.size() - 2], e[e.size() - 1]);
  return Permutation(std::move(e));
}

Permutation tilde(const Permutation& pi) {
  require_hat_size(pi, "tilde");
  const int n = pi.size();
  std::vector<int> e(pi.entries().begin(), pi.entries().end());
  for (int& v : e) {
    if (v == n) v = n - 1;
    else if (v == n - 1) v = n;
  }
  return Permutation(std::move(e));
}

Permutation star(const Permutation& pi) { return hat(tilde(pi)); }

std::string_view to_string(BarTag tag) {
  switch (tag) {
    case BarTag::kSelf: return "self";
    case BarTag::kHat: return "hat";
    case BarTag::kTilde: return "tilde";
    case BarTag::kStar: return "star";
  }
  return "?";
}

std::vector<BarMember> bar_members(const Permutation& pi) {
  std::vector<BarMember> out;
  auto add = [&](BarTag tag, Permutation p) {
    for (const auto& m : out) {
      if (m.perm == p) return;
    }
    out.push_back({tag, std::move(p)});
  };
  add(BarTag::kSelf, pi);
  add(BarTag::kHat, hat(pi));
  add(BarTag::kTilde, tilde(pi));
  add(BarTag::kStar, star(pi));
  return out;
}

std::vector<Permutation> bar_set(const Permutation& pi) {
  std::vector<Permutation> out;
  for (auto& m : bar_members(pi)) out.push_back(std::move(m.perm));
  std::sort(out.begin(), out.end());
  return out;
}

Permutation upside_down(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(n));
  for (int v : pi.entries()) e.push_back(n + 1 - v);
  return Permutation(std::move(e));
}

bool is_unimodal(const Permutation& seq) {
  auto e = seq.entries();
  std::size_t i = 1;
  while (i < e.size() && e[i - 1] < e[i]) ++i;
  while (i < e.size() && e[i - 1] > e[i]) ++i;
  return i >= e.size();
}

bool is_cater_good(const Permutation& seq) {
  // Walk values downward, tracking the span of positions holding larger values.
  const int n = seq.size();
  if (n == 0) return true;
  auto pos = seq.inverse_entries();
  int lo = pos[n - 1];
  int hi = lo;
  for (int v = n - 1; v >= 1; --v) {
    const int p = pos[v - 1];
    if (p > lo && p < hi) return false;
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return true;
}

}  // namespace tangle
