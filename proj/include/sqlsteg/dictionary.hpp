#ifndef SQLSTEG_DICTIONARY_HPP
#define SQLSTEG_DICTIONARY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sqlsteg/alphabet.hpp"
#include "sqlsteg/random.hpp"
#include "sqlsteg/value.hpp"

namespace sqlsteg {

// One dictionary entry: an SQL identifier carrying the secret character,
// paired with a literal for WHERE-clause rendering.
struct WordEntry {
  std::string word;
  Value value;

  bool operator==(const WordEntry&) const = default;
};

bool is_identifier(std::string_view s);
bool is_reserved_keyword(std::string_view s);  // SELECT/FROM/WHERE/AND, case-insensitive

enum class Severity { Error, Warning };

enum class ViolationKind {
  DuplicateWordAcrossCategories,
  DuplicateWordInCategory,
  InvalidIdentifier,
  ReservedKeyword,
  TableNameCollision,
  CategoryCountMismatch,
  EmptyTablePool,
  EmptyCategory,
};

struct Violation {
  Severity severity;
  ViolationKind kind;
  std::optional<std::size_t> category;
  std::string detail;
};

const char* violation_kind_name(ViolationKind kind);

// Category-indexed word table plus the dummy table-name pool. Immutable
// after construction; safe to share across threads.
class Dictionary {
 public:
  Dictionary(Alphabet alphabet, std::vector<std::vector<WordEntry>> categories,
             std::vector<std::string> table_names);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::vector<WordEntry>>& categories() const { return categories_; }
  const std::vector<WordEntry>& category(std::size_t index) const { return categories_.at(index); }
  const std::vector<std::string>& table_names() const { return table_names_; }

  // Unique category containing word; exact, case-sensitive match.
  std::size_t lookup_word(std::string_view word) const;  // throws UnknownWordError

 private:
  Alphabet alphabet_;
  std::vector<std::vector<WordEntry>> categories_;
  std::vector<std::string> table_names_;
  std::unordered_map<std::string, std::size_t> word_index_;
};

// Structural checks; empty report means valid. An empty category is a
// warning, everything else an error.
std::vector<Violation> validate_dictionary(const Dictionary& d);

inline bool has_errors(const std::vector<Violation>& report) {
  for (const auto& v : report)
    if (v.severity == Severity::Error) return true;
  return false;
}

// Thrown where an invalid dictionary cannot be returned as a report.
struct ValidationError : Error {
  ValidationError(std::string msg, std::vector<Violation> violations)
      : Error(std::move(msg)), violations(std::move(violations)) {}
  std::vector<Violation> violations;
};

// Uniform pick from a category, preferring entries outside `exclude`;
// falls back to the whole category when all entries are excluded.
const WordEntry& sample_word(const Dictionary& d, std::size_t index, RandomSource& rng,
                             const std::unordered_set<std::string>& exclude);

}  // namespace sqlsteg

#endif
