#include "sqlsteg/dictionary.hpp"

#include <algorithm>
#include <cctype>

#include "sqlsteg/utf8.hpp"

namespace sqlsteg {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto first = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(first) && s[0] != '_') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

bool is_reserved_keyword(std::string_view s) {
  std::string l = lower(s);
  return l == "select" || l == "from" || l == "where" || l == "and";
}

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DuplicateWordAcrossCategories: return "DuplicateWordAcrossCategories";
    case ViolationKind::DuplicateWordInCategory: return "DuplicateWordInCategory";
    case ViolationKind::InvalidIdentifier: return "InvalidIdentifier";
    case ViolationKind::ReservedKeyword: return "ReservedKeyword";
    case ViolationKind::TableNameCollision: return "TableNameCollision";
    case ViolationKind::CategoryCountMismatch: return "CategoryCountMismatch";
    case ViolationKind::EmptyTablePool: return "EmptyTablePool";
    case ViolationKind::EmptyCategory: return "EmptyCategory";
  }
  return "Unknown";
}

Dictionary::Dictionary(Alphabet alphabet, std::vector<std::vector<WordEntry>> categories,
                       std::vector<std::string> table_names)
    : alphabet_(std::move(alphabet)),
      categories_(std::move(categories)),
      table_names_(std::move(table_names)) {
  for (std::size_t i = 0; i < categories_.size(); ++i)
    for (const auto& entry : categories_[i]) word_index_.emplace(entry.word, i);
}

std::size_t Dictionary::lookup_word(std::string_view word) const {
  auto it = word_index_.find(std::string(word));
  if (it == word_index_.end())
    throw UnknownWordError("word '" + std::string(word) + "' not found in any dictionary category",
                           std::string(word));
  return it->second;
}

std::vector<Violation> validate_dictionary(const Dictionary& d) {
  std::vector<Violation> report;
  auto add = [&report](Severity sev, ViolationKind kind, std::optional<std::size_t> cat,
                       std::string detail) {
    report.push_back({sev, kind, cat, std::move(detail)});
  };

  if (d.categories().size() != d.alphabet().size())
    add(Severity::Error, ViolationKind::CategoryCountMismatch, std::nullopt,
        std::to_string(d.categories().size()) + " categories for an alphabet of " +
            std::to_string(d.alphabet().size()));

  if (d.table_names().empty())
    add(Severity::Error, ViolationKind::EmptyTablePool, std::nullopt, "table-name pool is empty");

  std::unordered_set<std::string> table_lower;
  for (const auto& t : d.table_names()) {
    if (!is_identifier(t))
      add(Severity::Error, ViolationKind::InvalidIdentifier, std::nullopt,
          "table name '" + t + "' is not a valid identifier");
    if (is_reserved_keyword(t))
      add(Severity::Error, ViolationKind::ReservedKeyword, std::nullopt,
          "table name '" + t + "' is a reserved keyword");
    table_lower.insert(lower(t));
  }

  std::unordered_map<std::string, std::size_t> seen;  // word -> first category
  for (std::size_t i = 0; i < d.categories().size(); ++i) {
    const auto& cat = d.categories()[i];
    if (cat.empty()) {
      std::string which = i < d.alphabet().size()
                              ? "character '" + utf8::encode(d.alphabet().char_at(i)) + "'"
                              : "index " + std::to_string(i);
      add(Severity::Warning, ViolationKind::EmptyCategory, i,
          "category " + std::to_string(i) + " (" + which + ") has no words");
    }
    std::unordered_set<std::string> in_cat;
    for (const auto& entry : cat) {
      if (!is_identifier(entry.word))
        add(Severity::Error, ViolationKind::InvalidIdentifier, i,
            "word '" + entry.word + "' is not a valid identifier");
      if (is_reserved_keyword(entry.word))
        add(Severity::Error, ViolationKind::ReservedKeyword, i,
            "word '" + entry.word + "' is a reserved SQL keyword");
      if (table_lower.count(lower(entry.word)))
        add(Severity::Error, ViolationKind::TableNameCollision, i,
            "word '" + entry.word + "' collides with a table name");
      if (!in_cat.insert(entry.word).second)
        add(Severity::Error, ViolationKind::DuplicateWordInCategory, i,
            "word '" + entry.word + "' appears twice in category " + std::to_string(i));
      auto [it, inserted] = seen.emplace(entry.word, i);
      if (!inserted && it->second != i)
        add(Severity::Error, ViolationKind::DuplicateWordAcrossCategories, i,
            "word '" + entry.word + "' appears in categories " + std::to_string(it->second) +
                " and " + std::to_string(i));
    }
  }
  return report;
}

const WordEntry& sample_word(const Dictionary& d, std::size_t index, RandomSource& rng,
                             const std::unordered_set<std::string>& exclude) {
  if (index >= d.categories().size())
    throw IndexOutOfRangeError("category index " + std::to_string(index) + " out of range", index);
  const auto& cat = d.categories()[index];
  if (cat.empty()) {
    char32_t ch = index < d.alphabet().size() ? d.alphabet().char_at(index) : U'?';
    throw EmptyCategoryError("cannot encode character '" + utf8::encode(ch) + "': category " +
                                 std::to_string(index) + " is empty",
                             ch, index);
  }

  std::vector<const WordEntry*> candidates;
  candidates.reserve(cat.size());
  for (const auto& entry : cat)
    if (!exclude.count(entry.word)) candidates.push_back(&entry);
  if (candidates.empty())  // category exhausted in this query, allow repeats
    for (const auto& entry : cat) candidates.push_back(&entry);

  return *candidates[rng.below(candidates.size())];
}

}  // namespace sqlsteg
