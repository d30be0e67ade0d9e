#include "tangle/tanglegram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "tangle/error.hpp"

namespace tangle {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

Tanglegram::Tanglegram(RootedBinaryTree left, RootedBinaryTree right, std::span<const Edge> matching)
    : left_(std::move(left)), right_(std::move(right)) {
  const auto n = left_.leaf_count();
  if (right_.leaf_count() != n) {
    throw InvalidArgument("tanglegram trees have different leaf counts (" + std::to_string(n) + " vs " +
                          std::to_string(right_.leaf_count()) + ")");
  }
  if (matching.size() != n) throw InvalidArgument("matching is not perfect: wrong number of edges");
  to_right_.assign(left_.node_count(), kNoNode);
  to_left_.assign(right_.node_count(), kNoNode);
  for (const Edge& e : matching) {
    auto l = left_.find_leaf(e.left);
    auto r = right_.find_leaf(e.right);
    if (!l) throw InvalidArgument("matching uses unknown left label '" + e.left + "'");
    if (!r) throw InvalidArgument("matching uses unknown right label '" + e.right + "'");
    if (to_right_[*l] != kNoNode) throw InvalidArgument("left label '" + e.left + "' matched twice");
    if (to_left_[*r] != kNoNode) throw InvalidArgument("right label '" + e.right + "' matched twice");
    to_right_[*l] = *r;
    to_left_[*r] = *l;
  }
}

std::optional<Label> Tanglegram::partner_of_left(std::string_view left_label) const {
  auto l = left_.find_leaf(left_label);
  if (!l) return std::nullopt;
  return right_.label(to_right_[*l]);
}

std::vector<Edge> Tanglegram::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (NodeId v : left_.leaves()) out.push_back({left_.label(v), right_.label(to_right_[v])});
  return out;
}

std::string Tanglegram::to_string() const {
  std::string out = left_.to_newick() + " ; " + right_.to_newick() + " ; ";
  bool first = true;
  for (const Edge& e : edges()) {
    if (!first) out += ',';
    first = false;
    out += e.left + ':' + e.right;
  }
  return out;
}

Tanglegram Tanglegram::parse(std::string_view line) {
  line = trim(line);
  constexpr std::string_view kCatergram = "catergram";
  if (line.substr(0, kCatergram.size()) == kCatergram) {
    return catergram(Permutation::parse(line.substr(kCatergram.size())));
  }
  auto fields = split(line, ';');
  if (fields.size() != 3) {
    throw InvalidArgument("tanglegram line needs 3 ';'-separated fields, got " + std::to_string(fields.size()));
  }
  auto left = RootedBinaryTree::parse_newick(fields[0]);
  auto right = RootedBinaryTree::parse_newick(fields[1]);
  std::vector<Edge> matching;
  for (std::string_view item : split(fields[2], ',')) {
    auto parts = split(item, ':');
    if (parts.size() != 2) throw InvalidArgument("matching entry '" + std::string(trim(item)) + "' is not label:label");
    matching.push_back({Label(trim(parts[0])), Label(trim(parts[1]))});
  }
  return Tanglegram(std::move(left), std::move(right), matching);
}

DistancePairMultiset::DistancePairMultiset(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
}

std::size_t DistancePairMultiset::count(std::pair<int, int> p) const {
  auto [lo, hi] = std::equal_range(pairs_.begin(), pairs_.end(), p);
  return static_cast<std::size_t>(hi - lo);
}

Tanglegram catergram(const Permutation& pi) {
  const int n = pi.size();
  if (n < 2) throw InvalidSize("catergram needs n >= 2, got " + std::to_string(n));
  std::vector<Edge> m;
  m.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) m.push_back({std::to_string(i), std::to_string(pi.at(i))});
  return Tanglegram(caterpillar(n), caterpillar(n), m);
}

DistancePairMultiset distance_pairs(const Tanglegram& t) {
  auto dl = t.left().depths();
  auto dr = t.right().depths();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(t.size());
  for (NodeId v : t.left().leaves()) pairs.emplace_back(dl[v], dr[t.partner_of_left(v)]);
  return DistancePairMultiset(std::move(pairs));
}

namespace {

int symmetric_vertex_count(const RootedBinaryTree& tree, const std::vector<std::string>& codes) {
  int s = 0;
  for (NodeId v : tree.internal_preorder()) {
    auto [a, b] = tree.children(v);
    if (codes[a] == codes[b]) ++s;
  }
  return s;
}

}  // namespace

CanonicalForm canonical_form(const Tanglegram& t) {
  auto left_codes = shape_codes(t.left());
  auto right_codes = shape_codes(t.right());
  const int left_sym = symmetric_vertex_count(t.left(), left_codes);
  const int right_sym = symmetric_vertex_count(t.right(), right_codes);

  CanonicalForm best;
  best.right_branches = right_sym < left_sym;
  const RootedBinaryTree& branch = best.right_branches ? t.right() : t.left();
  const RootedBinaryTree& other = best.right_branches ? t.left() : t.right();
  const auto& codes = best.right_branches ? right_codes : left_codes;
  auto partner_in_branch = [&](NodeId other_leaf) {
    return best.right_branches ? t.partner_of_left(other_leaf) : t.partner_of_right(other_leaf);
  };
  best.shape = codes[branch.root()];

  std::vector<int> sym_bit(branch.node_count(), -1);
  int s = 0;
  for (NodeId v : branch.internal_preorder()) {
    auto [a, b] = branch.children(v);
    if (codes[a] == codes[b]) sym_bit[v] = s++;
  }
  if (s >= 63) throw BudgetExceeded("canonical form: too many symmetric vertices");

  std::vector<int> pos(branch.node_count(), -1);
  std::vector<int> min_pos(other.node_count(), 0);
  std::vector<int> code;
  std::vector<NodeId> stack;
  bool have_best = false;

  for (unsigned long long mask = 0; mask < (1ULL << s); ++mask) {
    int next = 0;
    stack.assign(1, branch.root());
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      if (branch.is_leaf(v)) {
        pos[v] = next++;
        continue;
      }
      auto [a, b] = branch.children(v);
      if (codes[b] < codes[a]) std::swap(a, b);
      if (sym_bit[v] >= 0 && ((mask >> sym_bit[v]) & 1ULL)) std::swap(a, b);
      stack.push_back(b);
      stack.push_back(a);
    }

    for (auto v = static_cast<NodeId>(other.node_count()) - 1; v >= 0; --v) {
      if (other.is_leaf(v)) {
        min_pos[v] = pos[partner_in_branch(v)];
      } else {
        auto [a, b] = other.children(v);
        min_pos[v] = std::min(min_pos[a], min_pos[b]);
      }
    }
    code.clear();
    stack.assign(1, other.root());
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      if (v == kNoNode) {
        code.push_back(-2);
        continue;
      }
      if (other.is_leaf(v)) {
        code.push_back(min_pos[v]);
        continue;
      }
      auto [a, b] = other.children(v);
      if (min_pos[b] < min_pos[a]) std::swap(a, b);
      code.push_back(-1);
      stack.push_back(kNoNode);
      stack.push_back(b);
      stack.push_back(a);
    }
    if (!have_best || code < best.partner_code) {
      best.partner_code = code;
      have_best = true;
    }
  }
  return best;
}

bool equal(const Tanglegram& a, const Tanglegram& b) {
  if (a.size() != b.size()) return false;
  if (distance_pairs(a) != distance_pairs(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

Tanglegram induced_subtanglegram(const Tanglegram& t, std::span<const Edge> edges) {
  if (edges.empty()) throw InvalidArgument("induced_subtanglegram: empty edge set");
  std::vector<Label> left_labels, right_labels;
  std::set<Label> seen;
  std::vector<Edge> kept;
  for (const Edge& e : edges) {
    auto partner = t.partner_of_left(e.left);
    if (!partner || *partner != e.right) {
      throw InvalidArgument("induced_subtanglegram: " + e.left + ":" + e.right + " is not a matching edge");
    }
    if (!seen.insert(e.left).second) continue;
    left_labels.push_back(e.left);
    right_labels.push_back(e.right);
    kept.push_back(e);
  }
  return Tanglegram(induced_subtree(t.left(), left_labels), induced_subtree(t.right(), right_labels), kept);
}

Tanglegram induced_by_left(const Tanglegram& t, std::span<const Label> left_labels) {
  std::vector<Edge> edges;
  edges.reserve(left_labels.size());
  for (const Label& l : left_labels) {
    auto partner = t.partner_of_left(l);
    if (!partner) throw InvalidArgument("induced_by_left: unknown left label '" + l + "'");
    edges.push_back({l, *partner});
  }
  return induced_subtanglegram(t, edges);
}

namespace {

// Distance labels of a caterpillar's leaves: depth d <= n-2 gives d, the two
// deepest leaves get n-1 and n in leaf order.
std::vector<int> distance_labels(const RootedBinaryTree& tree) {
  const auto n = static_cast<int>(tree.leaf_count());
  auto d = tree.depths();
  std::vector<int> label(tree.node_count(), 0);
  int deep = n - 1;
  for (NodeId v : tree.leaves()) label[v] = d[v] <= n - 2 ? d[v] : deep++;
  return label;
}

}  // namespace

std::optional<CatergramView> as_catergram(const Tanglegram& t) {
  if (!is_caterpillar(t.left()) || !is_caterpillar(t.right())) return std::nullopt;
  const auto n = t.size();
  auto ld = distance_labels(t.left());
  auto rd = distance_labels(t.right());
  CatergramView view;
  view.left_labels.resize(n);
  view.right_labels.resize(n);
  std::vector<int> entries(n);
  for (NodeId v : t.left().leaves()) {
    view.left_labels[ld[v] - 1] = t.left().label(v);
    entries[ld[v] - 1] = rd[t.partner_of_left(v)];
  }
  for (NodeId v : t.right().leaves()) view.right_labels[rd[v] - 1] = t.right().label(v);
  view.perm = Permutation(std::move(entries));
  return view;
}

bool is_induced_sub(const Tanglegram& sub, const Tanglegram& host) {
  if (sub.size() > host.size()) return false;
  if (sub.size() >= 2) {
    auto s = as_catergram(sub);
    auto h = s ? as_catergram(host) : std::nullopt;
    if (s && h) {
      for (const auto& sigma : bar_set(s->perm)) {
        if (contains_pattern(h->perm, sigma)) return true;
      }
      return false;
    }
  }
  return induced_witness(sub, host).has_value();
}

std::optional<std::vector<Edge>> induced_witness(const Tanglegram& sub, const Tanglegram& host) {
  const auto m = sub.size();
  const auto n = host.size();
  if (m > n || m == 0) return std::nullopt;
  const auto want_pairs = distance_pairs(sub);
  std::optional<CanonicalForm> want_form;
  const auto labels = host.left().leaf_labels();

  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Label> chosen(m);
  while (true) {
    for (std::size_t k = 0; k < m; ++k) chosen[k] = labels[idx[k]];
    Tanglegram candidate = induced_by_left(host, chosen);
    if (distance_pairs(candidate) == want_pairs) {
      if (!want_form) want_form = canonical_form(sub);
      if (canonical_form(candidate) == *want_form) return candidate.edges();
    }
    // Next combination in lexicographic order.
    std::size_t k = m;
    while (k > 0 && idx[k - 1] == n - m + (k - 1)) --k;
    if (k == 0) return std::nullopt;
    ++idx[k - 1];
    for (std::size_t j = k; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

namespace {

std::vector<std::string> shape_strings(int n, std::map<int, std::vector<std::string>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<std::string> out;
  if (n == 1) {
    out.push_back("x");
  } else {
    std::set<std::string> seen;
    for (int k = 1; k <= n / 2; ++k) {
      auto as = shape_strings(k, memo);
      auto bs = shape_strings(n - k, memo);
      for (const auto& a : as) {
        for (const auto& b : bs) {
          std::string code = a <= b ? "(" + a + b + ")" : "(" + b + a + ")";
          if (seen.insert(code).second) out.push_back(code);
        }
      }
    }
  }
  memo[n] = out;
  return out;
}

RootedBinaryTree tree_from_shape(std::string_view code) {
  RootedBinaryTree::Builder b;
  std::size_t i = 0;
  int next_label = 1;
  auto parse = [&](auto&& self) -> NodeId {
    if (code[i] == 'x') {
      ++i;
      return b.add_leaf(std::to_string(next_label++));
    }
    ++i;  // '('
    NodeId a = self(self);
    NodeId c = self(self);
    ++i;  // ')'
    return b.add_internal(a, c);
  };
  NodeId root = parse(parse);
  return std::move(b).build(root);
}

}  // namespace

std::vector<RootedBinaryTree> all_tree_shapes(int n) {
  if (n < 1) throw InvalidSize("tree shapes need n >= 1");
  std::map<int, std::vector<std::string>> memo;
  std::vector<RootedBinaryTree> out;
  for (const auto& code : shape_strings(n, memo)) out.push_back(tree_from_shape(code));
  return out;
}

std::vector<Tanglegram> all_tanglegrams(int n) {
  auto shapes = all_tree_shapes(n);
  std::set<CanonicalForm> seen;
  std::vector<Tanglegram> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (const auto& left : shapes) {
    for (const auto& right : shapes) {
      std::iota(perm.begin(), perm.end(), 1);
      do {
        std::vector<Edge> m;
        for (int i = 1; i <= n; ++i) m.push_back({std::to_string(i), std::to_string(perm[i - 1])});
        Tanglegram t(left, right, m);
        if (seen.insert(canonical_form(t)).second) out.push_back(std::move(t));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

}  // namespace tangle
