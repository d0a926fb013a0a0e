#pragma once

#include "handlewave/word.hpp"

namespace handlewave {

// Endomorphism of F2 given by freely reduced generator images.
struct Endomorphism {
  Word image_of_A;
  Word image_of_B;

  static Endomorphism identity();
};

// f after g.
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

Word apply_morphism(const Endomorphism& f, const Word& w);
CyclicWord apply_morphism(const Endomorphism& f, const CyclicWord& w);

// Rank-2 criterion: [f(A), f(B)] conjugate to [A, B] or its inverse,
// plus abelianized determinant +-1.
bool is_automorphism(const Endomorphism& f);

}  // namespace handlewave
