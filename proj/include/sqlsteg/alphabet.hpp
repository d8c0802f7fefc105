#ifndef SQLSTEG_ALPHABET_HPP
#define SQLSTEG_ALPHABET_HPP

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "sqlsteg/errors.hpp"

namespace sqlsteg {

// Ordered set of supported characters; a character's position is its
// category index. The default alphabet is codepoints 32..96, which makes
// index_of(c) == codepoint(c) - 32.
class Alphabet {
 public:
  explicit Alphabet(std::vector<char32_t> chars);

  static Alphabet default_alphabet();            // 32..96 inclusive, 65 chars
  static Alphabet from_range(char32_t lo, char32_t hi);

  std::size_t size() const { return chars_.size(); }
  const std::vector<char32_t>& chars() const { return chars_; }

  bool contains(char32_t c) const { return index_.count(c) != 0; }

  std::size_t index_of(char32_t c) const;        // throws UnsupportedCharacterError
  char32_t char_at(std::size_t index) const;     // throws IndexOutOfRangeError

  bool operator==(const Alphabet& other) const { return chars_ == other.chars_; }

 private:
  std::vector<char32_t> chars_;
  std::unordered_map<char32_t, std::size_t> index_;
};

}  // namespace sqlsteg

#endif
