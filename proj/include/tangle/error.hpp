#pragma once

#include <stdexcept>
#include <string>

namespace tangle {

// Malformed input: unknown labels, empty subsets, parse failures.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size precondition was violated (e.g. caterpillar(1), hat of a 1-permutation).
class InvalidSize : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Family index out of range (i < 1).
class InvalidIndex : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Leaf orders that are not permutations of the leaf set or not tree-consistent.
class InvalidLayout : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// An exhaustive search refused to run (size cap) or ran out of time.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tangle
