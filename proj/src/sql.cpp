#include "sqlsteg/sql.hpp"

#include <cctype>

namespace sqlsteg {

std::string render_query(const SelectQuery& q, QuoteStyle style) {
  std::string out = "SELECT ";
  for (std::size_t i = 0; i < q.select_terms.size(); ++i) {
    if (i) out += ", ";
    out += q.select_terms[i];
  }
  out += " FROM ";
  for (std::size_t i = 0; i < q.table_names.size(); ++i) {
    if (i) out += ", ";
    out += q.table_names[i];
  }
  if (!q.where_predicates.empty()) {
    out += " WHERE ";
    for (std::size_t i = 0; i < q.where_predicates.size(); ++i) {
      if (i) out += " AND ";
      out += q.where_predicates[i].first;
      out += '=';
      out += render_value(q.where_predicates[i].second, style);
    }
  }
  return out;
}

std::string render_carrier(const Carrier& c, QuoteStyle style) {
  std::string out;
  for (std::size_t i = 0; i < c.queries.size(); ++i) {
    if (i) out += '\n';
    out += render_query(c.queries[i], style);
    out += ';';
  }
  return out;
}

namespace {

enum class TokKind { Select, From, Where, And, Identifier, Integer, String, Comma, Equals, Semicolon, End };

struct Token {
  TokKind kind;
  std::string text;      // identifier text or unescaped string content
  std::size_t offset;
};

const char* tok_name(TokKind k) {
  switch (k) {
    case TokKind::Select: return "SELECT";
    case TokKind::From: return "FROM";
    case TokKind::Where: return "WHERE";
    case TokKind::And: return "AND";
    case TokKind::Identifier: return "identifier";
    case TokKind::Integer: return "integer literal";
    case TokKind::String: return "string literal";
    case TokKind::Comma: return "','";
    case TokKind::Equals: return "'='";
    case TokKind::Semicolon: return "';'";
    case TokKind::End: return "end of input";
  }
  return "?";
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c == ',') {
      toks.push_back({TokKind::Comma, ",", start});
      ++i;
    } else if (c == '=') {
      toks.push_back({TokKind::Equals, "=", start});
      ++i;
    } else if (c == ';') {
      toks.push_back({TokKind::Semicolon, ";", start});
      ++i;
    } else if (c == '"' || c == '\'') {
      char quote = c;
      std::string content;
      ++i;
      for (;;) {
        if (i >= text.size()) throw SyntaxError("unterminated string literal", start);
        char s = text[i];
        if (s == '\\') {
          if (i + 1 >= text.size()) throw SyntaxError("unterminated string literal", start);
          char e = text[i + 1];
          if (e != '"' && e != '\'' && e != '\\')
            throw SyntaxError(std::string("unknown escape '\\") + e + "' in string literal", i);
          content.push_back(e);
          i += 2;
        } else if (s == quote) {
          ++i;
          break;
        } else {
          content.push_back(s);
          ++i;
        }
      }
      toks.push_back({TokKind::String, std::move(content), start});
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      toks.push_back({TokKind::Integer, std::string(text.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      ++i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      std::string word(text.substr(start, i - start));
      std::string l = lower(word);
      TokKind kind = TokKind::Identifier;
      if (l == "select") kind = TokKind::Select;
      else if (l == "from") kind = TokKind::From;
      else if (l == "where") kind = TokKind::Where;
      else if (l == "and") kind = TokKind::And;
      toks.push_back({kind, std::move(word), start});
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }
  }
  toks.push_back({TokKind::End, "", text.size()});
  return toks;
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& toks, std::size_t begin = 0) : toks_(toks), pos_(begin) {}

  // SELECT id (, id)* FROM id (, id)* [WHERE id=lit (AND id=lit)*]
  SelectQuery parse_select() {
    SelectQuery q;
    expect(TokKind::Select);
    q.select_terms.push_back(expect_identifier("select term"));
    while (peek().kind == TokKind::Comma) {
      advance();
      q.select_terms.push_back(expect_identifier("select term"));
    }
    expect(TokKind::From);
    q.table_names.push_back(expect_identifier("table name"));
    while (peek().kind == TokKind::Comma) {
      advance();
      q.table_names.push_back(expect_identifier("table name"));
    }
    if (peek().kind == TokKind::Where) {
      advance();
      q.where_predicates.push_back(parse_predicate());
      while (peek().kind == TokKind::And) {
        advance();
        q.where_predicates.push_back(parse_predicate());
      }
    }
    return q;
  }

  const Token& peek() const { return toks_[pos_]; }
  void advance() { ++pos_; }
  std::size_t pos() const { return pos_; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw SyntaxError("expected " + expected + ", got " + tok_name(t.kind) +
                          (t.text.empty() ? "" : " '" + t.text + "'") + " at offset " +
                          std::to_string(t.offset),
                      t.offset);
  }

 private:
  std::pair<std::string, Value> parse_predicate() {
    std::string word = expect_identifier("predicate word");
    expect(TokKind::Equals);
    const Token& t = peek();
    if (t.kind == TokKind::Integer) {
      Value v = Value::integer(t.text);
      advance();
      return {std::move(word), std::move(v)};
    }
    if (t.kind == TokKind::String) {
      Value v = Value::string(t.text);
      advance();
      return {std::move(word), std::move(v)};
    }
    fail("literal value");
  }

  void expect(TokKind kind) {
    if (peek().kind != kind) fail(tok_name(kind));
    advance();
  }

  std::string expect_identifier(const std::string& what) {
    if (peek().kind != TokKind::Identifier) fail(what);
    std::string text = peek().text;
    advance();
    return text;
  }

  const std::vector<Token>& toks_;
  std::size_t pos_;
};

}  // namespace

SelectQuery parse_query(std::string_view text) {
  auto toks = tokenize(text);
  Parser p(toks);
  SelectQuery q = p.parse_select();
  if (p.peek().kind == TokKind::Semicolon) p.advance();
  if (p.peek().kind != TokKind::End) p.fail("end of statement");
  return q;
}

Carrier parse_carrier(std::string_view text) {
  auto toks = tokenize(text);
  Carrier c;
  std::size_t i = 0;
  std::size_t statement = 0;
  while (toks[i].kind != TokKind::End) {
    if (toks[i].kind == TokKind::Semicolon) {  // blank statement
      ++i;
      continue;
    }
    Parser p(toks, i);
    try {
      c.queries.push_back(p.parse_select());
    } catch (const SyntaxError& e) {
      throw SyntaxError("statement " + std::to_string(statement + 1) + ": " + e.what(), e.offset);
    }
    i = p.pos();
    if (toks[i].kind == TokKind::Semicolon) {
      ++i;
    } else if (toks[i].kind != TokKind::End) {
      throw SyntaxError("statement " + std::to_string(statement + 1) +
                            ": expected ';' at offset " + std::to_string(toks[i].offset),
                        toks[i].offset);
    }
    ++statement;
  }
  if (c.queries.empty()) throw SyntaxError("empty carrier", 0);
  return c;
}

}  // namespace sqlsteg
