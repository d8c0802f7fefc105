#include "sqlsteg/value.hpp"

namespace sqlsteg {

std::string render_value(const Value& v, QuoteStyle style) {
  if (v.kind == Value::Kind::Integer) return v.text;
  char q = style == QuoteStyle::Double ? '"' : '\'';
  std::string out(1, q);
  for (char c : v.text) {
    if (c == '\\' || c == q) out.push_back('\\');
    out.push_back(c);
  }
  out.push_back(q);
  return out;
}

}  // namespace sqlsteg
