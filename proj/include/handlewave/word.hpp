#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace handlewave {

// Letters of F2 = <A, B>. The order A < a < B < b fixes every canonical form.
enum class Letter : std::uint8_t { A = 0, a = 1, B = 2, b = 3 };

constexpr Letter inverse(Letter x) {
  return static_cast<Letter>(static_cast<std::uint8_t>(x) ^ 1u);
}

// 0 for A/a, 1 for B/b.
constexpr int generator_of(Letter x) {
  return static_cast<std::uint8_t>(x) >> 1;
}

// +1 for A and B, -1 for a and b.
constexpr int sign_of(Letter x) {
  return (static_cast<std::uint8_t>(x) & 1u) ? -1 : +1;
}

char to_char(Letter x);
std::optional<Letter> letter_from_char(char c);

using Word = std::vector<Letter>;

Word inverse_word(const Word& w);

// Cancels adjacent inverse pairs until none remain.
Word free_reduce(Word w);

// free_reduce, then trims inverse first/last pairs.
Word cyclic_reduce(Word w);

// Lexicographically least rotation. Input must be cyclically reduced.
Word least_rotation(const Word& w);

std::string to_string(const Word& w);

// A cyclically reduced word stored in its least rotation. Equality of
// CyclicWord values is conjugacy in F2.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(const Word& raw)
      : letters_(least_rotation(cyclic_reduce(raw))) {}

  const Word& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  Word letters_;
};

std::string to_string(const CyclicWord& w);

// (signed A-count, signed B-count).
std::pair<long long, long long> exponent_sums(const Word& w);
std::pair<long long, long long> exponent_sums(const CyclicWord& w);

struct HomologyVerdict {
  long long exponent_sum_A = 0;
  long long exponent_sum_B = 0;
  long long gcd = 0;  // gcd(|sum_A|, |sum_B|); 0 when both sums vanish
  bool torsion_free = false;              // gcd 0 or 1
  bool knot_exterior_compatible = false;  // gcd exactly 1
};

HomologyVerdict homology_check(const CyclicWord& w);

// Starting positions in w, read cyclically with wraparound, where pattern
// occurs literally. Pattern must be nonempty; empty w gives 0.
int count_cyclic_occurrences(const CyclicWord& w, const Word& pattern);

}  // namespace handlewave
