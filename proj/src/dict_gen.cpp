#include "sqlsteg/dict_gen.hpp"

#include <array>
#include <cctype>

namespace sqlsteg {

namespace {

constexpr std::array<const char*, 24> kStems = {
    "order",  "item",   "price",  "stock", "user",   "account", "invoice", "ticket",
    "status", "region", "branch", "batch", "serial", "vendor",  "client",  "product",
    "rate",   "level",  "code",   "entry", "record", "amount",  "count",   "ref",
};

constexpr std::array<const char*, 12> kStringValues = {
    "done", "open", "closed", "pending", "active", "draft",
    "new",  "old",  "high",   "low",     "north",  "south",
};

const std::vector<std::string> kDefaultTables = {"Records", "Accounts", "Sessions", "Archive"};

}  // namespace

Dictionary generate_dictionary(const Alphabet& alphabet, std::size_t words_per_category,
                               std::uint64_t seed) {
  if (words_per_category == 0) throw Error("words_per_category must be >= 1");

  SeededRandomSource rng(seed);
  std::unordered_set<std::string> taken;
  for (const auto& t : kDefaultTables) {
    std::string l;
    for (char c : t) l.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    taken.insert(l);
  }

  std::vector<std::vector<WordEntry>> categories(alphabet.size());
  std::size_t serial = 0;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    categories[i].reserve(words_per_category);
    for (std::size_t k = 0; k < words_per_category; ++k) {
      std::string word;
      do {
        word = std::string(kStems[rng.below(kStems.size())]) + "_" + std::to_string(serial++);
      } while (is_reserved_keyword(word) || taken.count(word));
      taken.insert(word);

      Value value = rng.below(2) == 0
                        ? Value::integer(std::to_string(rng.below(10000)))
                        : Value::string(kStringValues[rng.below(kStringValues.size())]);
      categories[i].push_back({std::move(word), std::move(value)});
    }
  }
  return Dictionary(alphabet, std::move(categories), kDefaultTables);
}

}  // namespace sqlsteg
