#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "klab/bigint.hpp"
#include "klab/clifford.hpp"
#include "klab/words.hpp"

namespace klab::kgroup {

// Canonical form z^a J^b x_{i1} ... x_{il} with strictly increasing
// indices; unique per group element.
struct K0NormalForm {
  Int a = 0;
  int b = 0;
  std::vector<Int> indices;

  bool is_identity() const { return a == 0 && b == 0 && indices.empty(); }
  // Membership in the cyclic subgroup generated by z (resp. z^2): exactly
  // the pure powers z^a (resp. even a).
  bool in_z() const { return b == 0 && indices.empty(); }
  bool in_z2() const { return in_z() && a % 2 == 0; }

  friend bool operator==(const K0NormalForm& x, const K0NormalForm& y) {
    return x.a == y.a && x.b == y.b && x.indices == y.indices;
  }
  friend bool operator!=(const K0NormalForm& x, const K0NormalForm& y) {
    return !(x == y);
  }
};

// Alternating form w0 t^{c1} w1 ... t^{ck} wk: segments w (size k+1) and
// stable-letter signs c (size k, entries +-1). k = 0 is a bare K0NormalForm.
struct BrittonForm {
  std::vector<K0NormalForm> w{K0NormalForm{}};
  std::vector<int> c;

  std::size_t t_count() const { return c.size(); }
  bool is_identity() const { return c.empty() && w.front().is_identity(); }
};

// Instrumentation for one reduction: pinch count, the max bit length of the
// whole form after each step (first entry = input), merge comparisons, and
// wall time. Bit length of v: ceil(log2|v|)+2 (2 for v = 0); a segment's
// contribution is the max over its z-exponent and indices.
struct ReductionTrace {
  std::uint64_t pinch_steps = 0;
  std::vector<std::uint64_t> max_bit_length_history;
  std::uint64_t comparisons = 0;
  std::uint64_t micros = 0;
};

std::uint64_t segment_max_bits(const K0NormalForm& nf);
std::uint64_t form_max_bits(const BrittonForm& f);

// Normal form of a t-free word: collect J and z powers into
// J^b z^{a0} x0 z^{a1} ... x0 z^{am}, take suffix sums k_j = sum_{i>=j} a_i
// (so the element is z^{k0} J^b x_{-k1} ... x_{-km}), then merge-sort the
// index list with parity tracking. Rejects t letters.
K0NormalForm k0_normal_form(const words::Word& w,
                            std::uint64_t* comparisons = nullptr);

// z^{a1+a2} J^{b1+b2} (indices of w1 shifted by -a2, parity-merged with
// w2's indices).
K0NormalForm k0_multiply(const K0NormalForm& w1, const K0NormalForm& w2,
                         std::uint64_t* comparisons = nullptr);

// Split a K-word at its t-letters and normalize each t-free block.
BrittonForm britton_split(const words::Word& w,
                          std::uint64_t* comparisons = nullptr);

// Eliminate pinches until none remains, leftmost first:
//   t   z^a    t^-1  ->  z^{2a}
//   t^-1 z^{2a} t    ->  z^a
// fusing (w_{i-1} * z-power) * w_{i+1} so each step grows the max bit
// length by at most 3. At most t_count/2 steps.
std::pair<BrittonForm, ReductionTrace> britton_reduce(const BrittonForm& f);

// True iff w is the identity: free-reduce, split, reduce, then check that
// no t survives and the remaining segment is trivial.
std::pair<bool, ReductionTrace> is_trivial(const words::Word& w);

// Equality via triviality of w1 * w2^-1. Throws on alphabet mismatch.
bool equal(const words::Word& w1, const words::Word& w2);

// Word equal to z^k built from the binary expansion k = sum k_i 2^i as the
// product over set bits of t^i z t^-i; empty for k = 0. Length grows as
// O((log2 k)^2). Requires k >= 0.
words::Word build_z(const Int& k);

// build_z(k) x0 build_z(k)^-1, the k-th conjugate generator as a short
// word. Requires k >= 0.
words::Word build_x(const Int& k);

enum class RenderStyle {
  // x_i as [z-tower] x0 [z-tower]^-1 with plain z^i for |i| <= 2^16 and
  // build_z towers above; output is a K-word with short expanded length.
  towers,
  // x_i as z^i x0 z^-i with plain (run-length) z-powers only; output stays
  // in the t-free alphabet so it can round-trip through k0_normal_form.
  plain_z,
};

words::Word render_k0(const K0NormalForm& nf,
                      RenderStyle style = RenderStyle::towers);
words::Word render_britton(const BrittonForm& f,
                           RenderStyle style = RenderStyle::towers);

// Defining relators of K as words: J^2, x0^2, [x0, J], t z t^-1 z^-2, and
// [z^i x0 z^-i, z^j x0 z^-j] J over ordered pairs i != j with |i|, |j|
// bounded by window.
std::vector<words::Word> k_relators(std::int64_t window);

}  // namespace klab::kgroup
