#pragma once

#include <cstdint>

#include "klab/clifford.hpp"
#include "klab/replab.hpp"
#include "klab/words.hpp"

namespace klab::oracle {

// Bubble-sort multiplication: concatenate index lists, one J-bit flip per
// adjacent swap, delete equal neighbours. Independent of the merge path.
clifford::CNormalForm naive_c_multiply(const clifford::CNormalForm& g1,
                                       const clifford::CNormalForm& g2);

struct RelatorSoupConfig {
  std::uint64_t num_factors = 1;
  std::uint64_t max_conjugator_length = 4;
  std::uint64_t seed = 0;
  std::int64_t index_window = 2;  // max |i| in the x_i commutator relators
  words::Alphabet ctx = words::k_alphabet();
};

struct Soup {
  words::Word word;  // freely reduced; trivial by construction
  rep::Derivation derivation;
};

// Product of num_factors conjugated defining relators with random bounded
// conjugators (balanced t-exponent in the K context).
Soup relator_soup(const RelatorSoupConfig& cfg);

// A word over K that is non-trivial by normal-form uniqueness or Britton's
// lemma: a rendered non-identity K0NormalForm or pinch-free tower, times
// an optional relator soup.
words::Word nontrivial_witness(std::uint64_t seed, std::uint64_t size);

}  // namespace klab::oracle
