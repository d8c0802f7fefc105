#include "sqlsteg/alphabet.hpp"

#include "sqlsteg/utf8.hpp"

namespace sqlsteg {

Alphabet::Alphabet(std::vector<char32_t> chars) : chars_(std::move(chars)) {
  if (chars_.empty()) throw Error("alphabet must contain at least one character");
  for (std::size_t i = 0; i < chars_.size(); ++i) {
    if (!index_.emplace(chars_[i], i).second)
      throw Error("duplicate character in alphabet: '" + utf8::encode(chars_[i]) + "'");
  }
}

Alphabet Alphabet::default_alphabet() { return from_range(32, 96); }

Alphabet Alphabet::from_range(char32_t lo, char32_t hi) {
  if (hi < lo) throw Error("invalid alphabet range");
  std::vector<char32_t> chars;
  chars.reserve(hi - lo + 1);
  for (char32_t c = lo; c <= hi; ++c) chars.push_back(c);
  return Alphabet(std::move(chars));
}

std::size_t Alphabet::index_of(char32_t c) const {
  auto it = index_.find(c);
  if (it == index_.end())
    throw UnsupportedCharacterError(
        "unsupported character '" + utf8::encode(c) + "' (codepoint " +
            std::to_string(static_cast<std::uint32_t>(c)) + ")",
        c);
  return it->second;
}

char32_t Alphabet::char_at(std::size_t index) const {
  if (index >= chars_.size())
    throw IndexOutOfRangeError("category index " + std::to_string(index) + " out of range (alphabet size " +
                                   std::to_string(chars_.size()) + ")",
                               index);
  return chars_[index];
}

}  // namespace sqlsteg
