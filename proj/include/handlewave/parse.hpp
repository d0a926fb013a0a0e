#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "handlewave/word.hpp"

namespace handlewave {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos);
};

// Word grammar: 'A','B' generators, 'a','b' their inverses, optional
// exponent 'A^3' or 'B^-2', whitespace ignored. Returns the raw letter
// sequence without reduction.
Word parse_word_text(const std::string& text);

}  // namespace handlewave
