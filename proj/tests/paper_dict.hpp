#ifndef SQLSTEG_TESTS_PAPER_DICT_HPP
#define SQLSTEG_TESTS_PAPER_DICT_HPP

#include <string>

#include "sqlsteg/dictionary.hpp"

namespace sqlsteg::testing {

// The worked-example dictionary: category indices are h(c) = codepoint - 32.
inline Dictionary paper_dictionary() {
  Alphabet alphabet = Alphabet::default_alphabet();
  std::vector<std::vector<WordEntry>> cats(alphabet.size());
  cats[43] = {{"salary", Value::integer("2000")}};                              // K
  cats[41] = {{"pages", Value::integer("512")}};                                // I
  cats[44] = {{"bind", Value::string("hard")}, {"discount", Value::integer("5")}};  // L
  cats[0] = {{"status", Value::string("done")}};                                // SPACE
  cats[34] = {{"id", Value::integer("123")}, {"age", Value::integer("90")}};    // B
  cats[47] = {{"state", Value::string("Georgia")}};                             // O
  return Dictionary(std::move(alphabet), std::move(cats), {"Books", "Items"});
}

inline const std::string kGoldenQuery =
    "SELECT salary, pages, bind, discount FROM Books, Items "
    "WHERE status=\"done\" AND id=123 AND state=\"Georgia\" AND age=90";

inline const std::string kPaperDictFile =
    "# worked-example dictionary\n"
    "!alphabet 32-96\n"
    "!tables Books,Items\n"
    "[75]\n"
    "salary=2000\n"
    "[73]\n"
    "pages=512\n"
    "[76]\n"
    "bind=\"hard\"\n"
    "discount=5\n"
    "[32]\n"
    "status=\"done\"\n"
    "[66]\n"
    "id=123\n"
    "age=90\n"
    "[79]\n"
    "state=\"Georgia\"\n";

}  // namespace sqlsteg::testing

#endif
