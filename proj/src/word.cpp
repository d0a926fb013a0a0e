#include "handlewave/word.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace handlewave {

char to_char(Letter x) {
  static constexpr char table[4] = {'A', 'a', 'B', 'b'};
  return table[static_cast<std::uint8_t>(x)];
}

std::optional<Letter> letter_from_char(char c) {
  switch (c) {
    case 'A': return Letter::A;
    case 'a': return Letter::a;
    case 'B': return Letter::B;
    case 'b': return Letter::b;
    default: return std::nullopt;
  }
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == inverse(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == inverse(w[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + lo, w.begin() + hi);
}

Word least_rotation(const Word& w) {
  const std::size_t n = w.size();
  if (n <= 1) return w;
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Letter x = w[(i + j) % n];
      const Letter y = w[(best + j) % n];
      if (x != y) {
        if (x < y) best = i;
        break;
      }
    }
  }
  Word out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) out.push_back(w[(best + j) % n]);
  return out;
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) s.push_back(to_char(x));
  return s;
}

std::string to_string(const CyclicWord& w) { return to_string(w.letters()); }

std::pair<long long, long long> exponent_sums(const Word& w) {
  long long p = 0;
  long long q = 0;
  for (Letter x : w) {
    (generator_of(x) == 0 ? p : q) += sign_of(x);
  }
  return {p, q};
}

std::pair<long long, long long> exponent_sums(const CyclicWord& w) {
  return exponent_sums(w.letters());
}

HomologyVerdict homology_check(const CyclicWord& w) {
  HomologyVerdict v;
  std::tie(v.exponent_sum_A, v.exponent_sum_B) = exponent_sums(w);
  v.gcd = std::gcd(std::llabs(v.exponent_sum_A), std::llabs(v.exponent_sum_B));
  v.torsion_free = v.gcd <= 1;
  v.knot_exterior_compatible = v.gcd == 1;
  return v;
}

int count_cyclic_occurrences(const CyclicWord& w, const Word& pattern) {
  if (pattern.empty()) {
    throw std::invalid_argument("count_cyclic_occurrences: empty pattern");
  }
  const Word& v = w.letters();
  const std::size_t n = v.size();
  if (n == 0) return 0;
  int count = 0;
  for (std::size_t start = 0; start < n; ++start) {
    bool match = true;
    for (std::size_t j = 0; j < pattern.size(); ++j) {
      if (v[(start + j) % n] != pattern[j]) {
        match = false;
        break;
      }
    }
    if (match) ++count;
  }
  return count;
}

}  // namespace handlewave
