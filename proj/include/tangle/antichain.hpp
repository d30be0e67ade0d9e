#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "tangle/perm.hpp"

namespace tangle {

// rho_i, a permutation of [12 + 2i]. Throws InvalidIndex for i < 1.
Permutation rho(int i);
// rho_i turned upside down (j -> n+1-j).
Permutation pi_seq(int i);

enum class PairFilter { kAllPairs, kAdjacentOnly };

enum class CheckResult { kNone, kFound, kTimeout };
std::string_view to_string(CheckResult r);

// One pattern check: does family[j] contain the bar-set member `sigma_tag`
// of family[i]? Indices are 1-based family positions.
struct PairRecord {
  int i = 0;
  int j = 0;
  BarTag sigma_tag = BarTag::kSelf;
  CheckResult result = CheckResult::kNone;
  std::vector<int> witness;  // positions in family[j] when result == kFound
  double elapsed_ms = 0.0;
};

struct AntichainReport {
  std::vector<PairRecord> records;  // sorted by (i, j, tag)
  bool pass = true;
};

struct VerifyOptions {
  PairFilter filter = PairFilter::kAllPairs;
  std::optional<std::chrono::milliseconds> per_pair_timeout;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Checks the catergram family {T_family[k]} pairwise with the bar-set reduction:
// for each selected i < j and each sigma in bar_set(family[i]),
// contains_pattern(family[j], sigma) must find nothing.
AntichainReport verify_antichain_family(const std::vector<Permutation>& family, const VerifyOptions& options);
// family = rho(1..max_index).
AntichainReport verify_antichain(int max_index, const VerifyOptions& options = {});

struct ChainStep {
  int i = 0;
  bool restrict_identity = false;  // restrict(family[i+1], A_i) == tilde(family[i])
  bool induced = false;            // T_family[i] ⪯ T_family[i+1]
  double elapsed_ms = 0.0;
};

struct ChainReport {
  std::vector<ChainStep> steps;
  bool pass = true;
};

// A_i = [14 + 2i] \ {2, 4}, as sorted 1-based positions.
std::vector<int> chain_positions(int i);

ChainReport verify_chain_family(const std::vector<Permutation>& family);
// family = pi_seq(1..max_index).
ChainReport verify_chain(int max_index);

// Number of larger entries preceding each entry, by value (index v-1).
std::vector<int> larger_predecessor_counts(const Permutation& pi);

}  // namespace tangle
