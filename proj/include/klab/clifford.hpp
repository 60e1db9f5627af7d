#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "klab/bigint.hpp"
#include "klab/words.hpp"

namespace klab::clifford {

// Canonical form J^b x_{i1} ... x_{il} with strictly increasing indices.
// Two group elements are equal iff their normal forms are field-wise equal.
struct CNormalForm {
  int b = 0;                 // power of the central involution, mod 2
  std::vector<Int> indices;  // strictly increasing

  bool is_identity() const { return b == 0 && indices.empty(); }

  friend bool operator==(const CNormalForm& x, const CNormalForm& y) {
    return x.b == y.b && x.indices == y.indices;
  }
  friend bool operator!=(const CNormalForm& x, const CNormalForm& y) {
    return !(x == y);
  }
};

// Exact number of defining-relation applications used by the canonical
// rewriting of a product of two normal forms, split by relation family:
//   square:      x_i^2 = 1
//   j_central:   [x_i, J] = 1
//   anticommute: x_j x_i = J x_i x_j   (the commutator-J relators)
//   j_square:    J^2 = 1
struct ApplicationCount {
  std::uint64_t square = 0;
  std::uint64_t j_central = 0;
  std::uint64_t anticommute = 0;
  std::uint64_t j_square = 0;

  std::uint64_t total() const {
    return square + j_central + anticommute + j_square;
  }
};

// Merge instrumentation: head-to-head index comparisons only (bounded by
// l1 + l2).
struct MergeStats {
  std::uint64_t comparisons = 0;
};

// Normal form of a word over the Cinf or Cn alphabet. Inverse letters
// resolve at the group level (x_i^-1 = x_i, J^-1 = J).
CNormalForm c_normal_form(const words::Word& w);

// Product of two normal forms by a single merge of the index lists with
// parity tracking; O(l1 + l2) comparisons. The returned count replicates
// the canonical right-to-left rewriting schedule exactly.
std::pair<CNormalForm, ApplicationCount> c_multiply(const CNormalForm& g1,
                                                    const CNormalForm& g2,
                                                    MergeStats* stats = nullptr);

// Guaranteed bound on ApplicationCount.total() for any product of two
// normal forms with indices in [1, n]: (n+1)^2. Requires n >= 1.
std::uint64_t count_bound(int n);

// All 2^(n+1) elements of the rank-n group, index-set-major (bitmask of
// {1..n} ascending), J-bit minor; element 0 is the identity. Requires
// 1 <= n <= 8.
std::vector<CNormalForm> enumerate_group(int n);

// Position of g in enumerate_group(n): 2 * bitmask + b. Requires all
// indices in [1, n].
std::size_t element_index(const CNormalForm& g, int n);

}  // namespace klab::clifford
