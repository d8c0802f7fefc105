#ifndef SQLSTEG_VALUE_HPP
#define SQLSTEG_VALUE_HPP

#include <string>

namespace sqlsteg {

enum class QuoteStyle { Double, Single };

// A literal on the right-hand side of word=value: a bare integer or a
// quoted string. The text is stored unescaped and unquoted.
struct Value {
  enum class Kind { Integer, String };

  Kind kind = Kind::Integer;
  std::string text;

  static Value integer(std::string digits) { return {Kind::Integer, std::move(digits)}; }
  static Value string(std::string s) { return {Kind::String, std::move(s)}; }

  bool operator==(const Value&) const = default;
};

// Renders a value as SQL text, escaping backslash and the active quote char.
std::string render_value(const Value& v, QuoteStyle style);

}  // namespace sqlsteg

#endif
