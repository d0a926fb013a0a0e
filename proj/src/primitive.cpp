#include "handlewave/primitive.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "handlewave/morphism.hpp"

namespace handlewave {

Word christoffel_word(long long p, long long q) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("christoffel_word: counts must be positive");
  }
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("christoffel_word: counts must be coprime");
  }
  Word out;
  const long long n = p + q;
  out.reserve(static_cast<std::size_t>(n));
  for (long long i = 1; i <= n; ++i) {
    out.push_back((i * q) % n < q ? Letter::B : Letter::A);
  }
  return out;
}

namespace {

struct NamedMove {
  const char* name;
  Endomorphism move;
};

const std::vector<NamedMove>& whitehead_moves() {
  static const std::vector<NamedMove> moves = {
      {"A->AB", {{Letter::A, Letter::B}, {Letter::B}}},
      {"A->Ab", {{Letter::A, Letter::b}, {Letter::B}}},
      {"A->BA", {{Letter::B, Letter::A}, {Letter::B}}},
      {"A->bA", {{Letter::b, Letter::A}, {Letter::B}}},
      {"B->BA", {{Letter::A}, {Letter::B, Letter::A}}},
      {"B->Ba", {{Letter::A}, {Letter::B, Letter::a}}},
      {"B->AB", {{Letter::A}, {Letter::A, Letter::B}}},
      {"B->aB", {{Letter::A}, {Letter::a, Letter::B}}},
  };
  return moves;
}

}  // namespace

WhiteheadReduction whitehead_reduce(const CyclicWord& w) {
  if (w.empty()) throw std::invalid_argument("whitehead_reduce: empty word");
  WhiteheadReduction r{w, {}};
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& [name, move] : whitehead_moves()) {
      CyclicWord next = apply_morphism(move, r.minimum);
      if (next.size() < r.minimum.size()) {
        r.steps.push_back({name, next});
        r.minimum = std::move(next);
        improved = true;
        break;
      }
    }
  }
  return r;
}

bool is_primitive(const CyclicWord& w) {
  if (w.empty()) throw std::invalid_argument("is_primitive: empty word");
  if (w.size() == 1) return true;
  const auto [p, q] = exponent_sums(w);
  const long long ap = std::llabs(p);
  const long long aq = std::llabs(q);
  if (ap == 0 || aq == 0) return false;
  if (std::gcd(ap, aq) != 1) return false;
  Word v = w.letters();
  for (Letter& x : v) {
    if ((generator_of(x) == 0 && p < 0) || (generator_of(x) == 1 && q < 0)) {
      x = inverse(x);
    }
  }
  return CyclicWord(v) == CyclicWord(christoffel_word(ap, aq));
}

}  // namespace handlewave
