#include "handlewave/parse.hpp"

#include <cctype>

namespace handlewave {

namespace {

bool is_digit(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)),
      position(pos) {}

Word parse_word_text(const std::string& text) {
  Word out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '^') throw ParseError("exponent without a base letter", i);
    const auto letter = letter_from_char(c);
    if (!letter) {
      throw ParseError(std::string("unknown generator '") + c + "'", i);
    }
    ++i;
    long long exponent = 1;
    if (i < n && text[i] == '^') {
      ++i;
      bool negative = false;
      if (i < n && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
      }
      if (i >= n || !is_digit(text[i])) {
        throw ParseError("exponent digits expected", i);
      }
      long long value = 0;
      while (i < n && is_digit(text[i])) {
        value = value * 10 + (text[i] - '0');
        if (value > 1000000) throw ParseError("exponent too large", i);
        ++i;
      }
      exponent = negative ? -value : value;
    }
    Letter base = *letter;
    if (exponent < 0) {
      base = inverse(base);
      exponent = -exponent;
    }
    out.insert(out.end(), static_cast<std::size_t>(exponent), base);
  }
  return out;
}

}  // namespace handlewave
