#include "sqlsteg/dict_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "sqlsteg/utf8.hpp"

namespace sqlsteg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_size(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  std::size_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  out = v;
  return true;
}

Alphabet parse_alphabet_decl(std::string_view arg, std::size_t line) {
  arg = trim(arg);
  if (arg.rfind("chars ", 0) == 0) {
    auto chars = utf8::decode(arg.substr(6));
    if (chars.empty()) throw ParseError("empty character list in !alphabet chars", line);
    try {
      return Alphabet(std::move(chars));
    } catch (const Error& e) {
      throw ParseError(e.what(), line);
    }
  }
  auto dash = arg.find('-');
  std::size_t lo, hi;
  if (dash == std::string_view::npos || !parse_size(arg.substr(0, dash), lo) ||
      !parse_size(arg.substr(dash + 1), hi) || hi < lo)
    throw ParseError("expected '!alphabet <lo>-<hi>' or '!alphabet chars <string>'", line);
  return Alphabet::from_range(static_cast<char32_t>(lo), static_cast<char32_t>(hi));
}

// word=value, value = bare integer or double-quoted string with \" and \\.
WordEntry parse_entry(std::string_view s, std::size_t line) {
  auto eq = s.find('=');
  if (eq == std::string_view::npos) throw ParseError("expected 'word=value'", line);
  // identifier validity is the validator's call, so bad words surface as
  // InvalidIdentifier violations rather than parse failures
  std::string word(trim(s.substr(0, eq)));
  if (word.empty()) throw ParseError("missing word before '='", line);

  std::string_view raw = trim(s.substr(eq + 1));
  if (raw.empty()) throw ParseError("empty value for word '" + word + "'", line);

  if (raw.front() == '"') {
    std::string text;
    std::size_t i = 1;
    for (;; ++i) {
      if (i >= raw.size()) throw ParseError("unterminated string value", line);
      char c = raw[i];
      if (c == '\\') {
        if (i + 1 >= raw.size()) throw ParseError("dangling backslash in string value", line);
        char e = raw[++i];
        if (e != '"' && e != '\\') throw ParseError("unknown escape '\\" + std::string(1, e) + "'", line);
        text.push_back(e);
      } else if (c == '"') {
        break;
      } else {
        text.push_back(c);
      }
    }
    if (i + 1 != raw.size()) throw ParseError("trailing characters after string value", line);
    return {std::move(word), Value::string(std::move(text))};
  }

  std::string_view digits = raw;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  std::size_t unused;
  if (!parse_size(digits, unused))
    throw ParseError("value must be a bare integer or a double-quoted string", line);
  return {std::move(word), Value::integer(std::string(raw))};
}

}  // namespace

Dictionary load_dictionary(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  std::optional<Alphabet> alphabet;
  std::vector<std::vector<WordEntry>> categories;
  std::vector<std::string> tables;
  std::ptrdiff_t current = -1;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;

    if (!alphabet) {
      if (s.rfind("!alphabet", 0) != 0)
        throw ParseError("first significant line must be an !alphabet declaration", lineno);
      alphabet = parse_alphabet_decl(s.substr(9), lineno);
      categories.assign(alphabet->size(), {});
      continue;
    }

    if (s.rfind("!tables", 0) == 0) {
      std::string rest{trim(s.substr(7))};
      std::stringstream ss(rest);
      std::string name;
      while (std::getline(ss, name, ',')) {
        std::string t{trim(name)};
        if (t.empty()) throw ParseError("empty table name in !tables", lineno);
        tables.push_back(std::move(t));
      }
      if (tables.empty()) throw ParseError("!tables requires at least one name", lineno);
      continue;
    }

    if (s.front() == '!') throw ParseError("unknown directive '" + std::string(s) + "'", lineno);

    if (s.front() == '[') {
      if (s.back() != ']') throw ParseError("unterminated category header", lineno);
      std::size_t cp;
      if (!parse_size(s.substr(1, s.size() - 2), cp))
        throw ParseError("category header must be a decimal codepoint", lineno);
      if (!alphabet->contains(static_cast<char32_t>(cp)))
        throw ParseError("codepoint " + std::to_string(cp) + " is not in the declared alphabet", lineno);
      current = static_cast<std::ptrdiff_t>(alphabet->index_of(static_cast<char32_t>(cp)));
      continue;
    }

    if (current < 0) throw ParseError("entry before any category header", lineno);
    categories[static_cast<std::size_t>(current)].push_back(parse_entry(s, lineno));
  }

  if (!alphabet) throw ParseError("no alphabet declaration found", lineno == 0 ? 1 : lineno);

  Dictionary d(std::move(*alphabet), std::move(categories), std::move(tables));
  auto report = validate_dictionary(d);
  if (has_errors(report)) {
    std::string msg = "dictionary failed validation:";
    for (const auto& v : report)
      if (v.severity == Severity::Error)
        msg += std::string("\n  ") + violation_kind_name(v.kind) + ": " + v.detail;
    throw ValidationError(std::move(msg), std::move(report));
  }
  return d;
}

Dictionary load_dictionary_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open dictionary file: " + path);
  return load_dictionary(in);
}

std::string render_dictionary(const Dictionary& d) {
  std::ostringstream out;

  const auto& chars = d.alphabet().chars();
  bool contiguous = true;
  for (std::size_t i = 1; i < chars.size(); ++i)
    if (chars[i] != chars[i - 1] + 1) {
      contiguous = false;
      break;
    }
  if (contiguous) {
    out << "!alphabet " << static_cast<std::uint32_t>(chars.front()) << '-'
        << static_cast<std::uint32_t>(chars.back()) << '\n';
  } else {
    out << "!alphabet chars " << utf8::encode(chars) << '\n';
  }

  out << "!tables ";
  for (std::size_t i = 0; i < d.table_names().size(); ++i) {
    if (i) out << ',';
    out << d.table_names()[i];
  }
  out << '\n';

  for (std::size_t i = 0; i < d.categories().size(); ++i) {
    const auto& cat = d.categories()[i];
    if (cat.empty()) continue;
    out << '[' << static_cast<std::uint32_t>(d.alphabet().char_at(i)) << "]\n";
    for (const auto& entry : cat)
      out << entry.word << '=' << render_value(entry.value, QuoteStyle::Double) << '\n';
  }
  return out.str();
}

}  // namespace sqlsteg
