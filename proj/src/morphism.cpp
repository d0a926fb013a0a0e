#include "handlewave/morphism.hpp"

namespace handlewave {

Endomorphism Endomorphism::identity() {
  return Endomorphism{{Letter::A}, {Letter::B}};
}

namespace {

Word substitute(const Endomorphism& f, const Word& w) {
  Word out;
  for (Letter x : w) {
    const Word& image = generator_of(x) == 0 ? f.image_of_A : f.image_of_B;
    if (sign_of(x) > 0) {
      out.insert(out.end(), image.begin(), image.end());
    } else {
      const Word inv = inverse_word(image);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return out;
}

}  // namespace

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  return Endomorphism{free_reduce(substitute(f, g.image_of_A)),
                      free_reduce(substitute(f, g.image_of_B))};
}

Word apply_morphism(const Endomorphism& f, const Word& w) {
  return free_reduce(substitute(f, w));
}

CyclicWord apply_morphism(const Endomorphism& f, const CyclicWord& w) {
  return CyclicWord(substitute(f, w.letters()));
}

bool is_automorphism(const Endomorphism& f) {
  const auto [p1, q1] = exponent_sums(f.image_of_A);
  const auto [p2, q2] = exponent_sums(f.image_of_B);
  const long long det = p1 * q2 - q1 * p2;
  if (det != 1 && det != -1) return false;

  Word commutator = f.image_of_A;
  auto append = [&commutator](const Word& w) {
    commutator.insert(commutator.end(), w.begin(), w.end());
  };
  append(f.image_of_B);
  append(inverse_word(f.image_of_A));
  append(inverse_word(f.image_of_B));

  const CyclicWord c{commutator};
  const CyclicWord target{Word{Letter::A, Letter::B, Letter::a, Letter::b}};
  const CyclicWord target_inv{Word{Letter::B, Letter::A, Letter::b, Letter::a}};
  return c == target || c == target_inv;
}

}  // namespace handlewave
