#include "tangle/antichain.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "tangle/error.hpp"
#include "tangle/tanglegram.hpp"

namespace tangle {

namespace {

void require_index(int i) {
  if (i < 1) throw InvalidIndex("family index must be >= 1, got " + std::to_string(i));
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

Permutation rho(int i) {
  require_index(i);
  const int n = 12 + 2 * i;
  std::vector<int> e(static_cast<std::size_t>(n));
  e[0] = 2;
  e[1] = 3;
  e[2] = 5;
  e[3] = 1;
  for (int j = 5; j <= 8 + 2 * i; ++j) e[j - 1] = j % 2 ? j + 2 : j - 2;
  e[8 + 2 * i] = 10 + 2 * i;
  e[9 + 2 * i] = 11 + 2 * i;
  e[10 + 2 * i] = 12 + 2 * i;
  e[11 + 2 * i] = 8 + 2 * i;
  return Permutation(std::move(e));
}

Permutation pi_seq(int i) { return upside_down(rho(i)); }

std::string_view to_string(CheckResult r) {
  switch (r) {
    case CheckResult::kNone: return "none";
    case CheckResult::kFound: return "found";
    case CheckResult::kTimeout: return "timeout";
  }
  return "?";
}

AntichainReport verify_antichain_family(const std::vector<Permutation>& family, const VerifyOptions& options) {
  struct Task {
    int i, j;
    BarMember sigma;
  };
  std::vector<Task> tasks;
  const auto k = static_cast<int>(family.size());
  for (int i = 1; i <= k; ++i) {
    auto members = bar_members(family[i - 1]);
    for (int j = i + 1; j <= k; ++j) {
      if (options.filter == PairFilter::kAdjacentOnly && j != i + 1) continue;
      for (const auto& m : members) tasks.push_back({i, j, m});
    }
  }

  AntichainReport report;
  report.records.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const Task& task = tasks[t];
      PairRecord& rec = report.records[t];
      rec.i = task.i;
      rec.j = task.j;
      rec.sigma_tag = task.sigma.tag;
      PatternSearchLimits limits;
      const auto start = std::chrono::steady_clock::now();
      if (options.per_pair_timeout) limits.deadline = start + *options.per_pair_timeout;
      try {
        auto witness = contains_pattern(family[task.j - 1], task.sigma.perm, limits);
        if (witness) {
          rec.result = CheckResult::kFound;
          rec.witness = std::move(*witness);
        }
      } catch (const BudgetExceeded&) {
        rec.result = CheckResult::kTimeout;
      }
      rec.elapsed_ms = ms_since(start);
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  report.pass = std::all_of(report.records.begin(), report.records.end(),
                            [](const PairRecord& r) { return r.result == CheckResult::kNone; });
  return report;
}

AntichainReport verify_antichain(int max_index, const VerifyOptions& options) {
  if (max_index < 2) throw InvalidIndex("verify_antichain needs --max >= 2");
  std::vector<Permutation> family;
  for (int i = 1; i <= max_index; ++i) family.push_back(rho(i));
  return verify_antichain_family(family, options);
}

std::vector<int> chain_positions(int i) {
  require_index(i);
  std::vector<int> a;
  for (int p = 1; p <= 14 + 2 * i; ++p) {
    if (p != 2 && p != 4) a.push_back(p);
  }
  return a;
}

ChainReport verify_chain_family(const std::vector<Permutation>& family) {
  ChainReport report;
  for (std::size_t idx = 0; idx + 1 < family.size(); ++idx) {
    const auto start = std::chrono::steady_clock::now();
    const Permutation& cur = family[idx];
    const Permutation& next = family[idx + 1];
    ChainStep step;
    step.i = static_cast<int>(idx) + 1;
    std::vector<int> a;
    for (int p = 1; p <= next.size(); ++p) {
      if (p != 2 && p != 4) a.push_back(p);
    }
    step.restrict_identity = next.size() >= 4 && restrict(next, a) == tilde(cur);
    step.induced = is_induced_sub(catergram(cur), catergram(next));
    step.elapsed_ms = ms_since(start);
    report.pass = report.pass && step.restrict_identity && step.induced;
    report.steps.push_back(step);
  }
  return report;
}

ChainReport verify_chain(int max_index) {
  if (max_index < 2) throw InvalidIndex("verify_chain needs --max >= 2");
  std::vector<Permutation> family;
  for (int i = 1; i <= max_index; ++i) family.push_back(pi_seq(i));
  return verify_chain_family(family);
}

std::vector<int> larger_predecessor_counts(const Permutation& pi) {
  std::vector<int> out(static_cast<std::size_t>(pi.size()), 0);
  auto e = pi.entries();
  for (std::size_t p = 0; p < e.size(); ++p) {
    for (std::size_t q = 0; q < p; ++q) {
      if (e[q] > e[p]) ++out[e[p] - 1];
    }
  }
  return out;
}

}  // namespace tangle
