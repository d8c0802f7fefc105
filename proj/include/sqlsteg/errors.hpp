#ifndef SQLSTEG_ERRORS_HPP
#define SQLSTEG_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqlsteg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A message character with no category in the alphabet.
struct UnsupportedCharacterError : Error {
  UnsupportedCharacterError(std::string msg, char32_t ch, std::size_t position = 0)
      : Error(std::move(msg)), ch(ch), position(position) {}
  char32_t ch;
  std::size_t position;  // index into the message, when known
};

struct IndexOutOfRangeError : Error {
  IndexOutOfRangeError(std::string msg, std::size_t index) : Error(std::move(msg)), index(index) {}
  std::size_t index;
};

// Dictionary file is malformed; line is 1-based.
struct ParseError : Error {
  ParseError(std::string msg, std::size_t line) : Error(std::move(msg)), line(line) {}
  std::size_t line;
};

// Carrier text is malformed; offset is a 0-based character offset into the input.
struct SyntaxError : Error {
  SyntaxError(std::string msg, std::size_t offset) : Error(std::move(msg)), offset(offset) {}
  std::size_t offset;
};

struct EmptyCategoryError : Error {
  EmptyCategoryError(std::string msg, char32_t ch, std::size_t category)
      : Error(std::move(msg)), ch(ch), category(category) {}
  char32_t ch;
  std::size_t category;
};

struct UnknownWordError : Error {
  UnknownWordError(std::string msg, std::string word) : Error(std::move(msg)), word(std::move(word)) {}
  std::string word;
};

struct EmptyMessageError : Error {
  EmptyMessageError() : Error("empty message") {}
};

}  // namespace sqlsteg

#endif
