#ifndef SQLSTEG_TESTS_GEN_HPP
#define SQLSTEG_TESTS_GEN_HPP

#include <random>
#include <string>

#include "sqlsteg/alphabet.hpp"
#include "sqlsteg/dictionary.hpp"
#include "sqlsteg/sql.hpp"
#include "sqlsteg/utf8.hpp"

namespace sqlsteg::testing {

// Random inputs for property tests; independent of the library's sampling.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  std::size_t below(std::size_t bound) { return eng_() % bound; }

  std::string identifier() {
    static const std::string first = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_";
    static const std::string rest = first + "0123456789";
    std::string s;
    do {
      s.clear();
      s.push_back(first[below(first.size())]);
      std::size_t len = below(10);
      for (std::size_t i = 0; i < len; ++i) s.push_back(rest[below(rest.size())]);
    } while (is_reserved_keyword(s));
    return s;
  }

  Value value() {
    if (below(2) == 0) {
      std::string digits = below(8) == 0 ? "-" : "";
      digits += std::to_string(below(1000000));
      return Value::integer(digits);
    }
    // strings stress the lexer: quotes of both styles, backslashes, semicolons
    static const std::string pool = "abc XYZ 019 ;,=\"'\\()";
    std::string s;
    std::size_t len = below(12);
    for (std::size_t i = 0; i < len; ++i) s.push_back(pool[below(pool.size())]);
    return Value::string(s);
  }

  SelectQuery query() {
    SelectQuery q;
    std::size_t selects = 1 + below(6);
    for (std::size_t i = 0; i < selects; ++i) q.select_terms.push_back(identifier());
    std::size_t tables = 1 + below(3);
    for (std::size_t i = 0; i < tables; ++i) q.table_names.push_back(identifier());
    std::size_t wheres = below(6);
    for (std::size_t i = 0; i < wheres; ++i) q.where_predicates.emplace_back(identifier(), value());
    return q;
  }

  std::string message(const Alphabet& alphabet, std::size_t min_len, std::size_t max_len) {
    std::size_t len = min_len + below(max_len - min_len + 1);
    std::string s;
    for (std::size_t i = 0; i < len; ++i)
      utf8::append(s, alphabet.chars()[below(alphabet.size())]);
    return s;
  }

  std::uint64_t seed() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace sqlsteg::testing

#endif
