#pragma once

#include <string>
#include <vector>

#include "handlewave/word.hpp"

namespace handlewave {

// Lower Christoffel word with p letters A and q letters B.
// Requires p, q >= 1 and gcd(p, q) = 1.
Word christoffel_word(long long p, long long q);

struct WhiteheadStep {
  std::string move;  // e.g. "A->AB"
  CyclicWord result;
};

struct WhiteheadReduction {
  CyclicWord minimum;
  std::vector<WhiteheadStep> steps;
};

// Greedy strict-shortening over the eight cyclically nontrivial rank-2
// Whitehead moves. The local minimum has length 1 iff w is primitive.
WhiteheadReduction whitehead_reduce(const CyclicWord& w);

// Christoffel-criterion primitivity test: sign-normalize the exponent
// sums, then compare against the Christoffel pattern. Zero-sum words are
// primitive only as single letters.
bool is_primitive(const CyclicWord& w);

}  // namespace handlewave
