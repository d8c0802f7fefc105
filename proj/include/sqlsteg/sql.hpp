#ifndef SQLSTEG_SQL_HPP
#define SQLSTEG_SQL_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqlsteg/errors.hpp"
#include "sqlsteg/value.hpp"

namespace sqlsteg {

// One carrier statement:
//   SELECT t1, t2 FROM n1, n2 [WHERE w1=v1 AND w2=v2]
struct SelectQuery {
  std::vector<std::string> select_terms;                   // non-empty
  std::vector<std::string> table_names;                    // non-empty
  std::vector<std::pair<std::string, Value>> where_predicates;

  bool operator==(const SelectQuery&) const = default;
};

struct Carrier {
  std::vector<SelectQuery> queries;

  bool operator==(const Carrier&) const = default;
};

std::string render_query(const SelectQuery& q, QuoteStyle style = QuoteStyle::Double);

// Statements terminated by ';', separated by newlines.
std::string render_carrier(const Carrier& c, QuoteStyle style = QuoteStyle::Double);

// Recursive-descent parse of the carrier subset. Keywords are
// case-insensitive; both quote styles are accepted. Throws SyntaxError
// with the offending character offset.
SelectQuery parse_query(std::string_view text);

// Splits on top-level ';' (never inside string literals); trailing
// semicolon optional, blank statements skipped.
Carrier parse_carrier(std::string_view text);

}  // namespace sqlsteg

#endif
