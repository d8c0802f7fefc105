#ifndef SQLSTEG_DICT_IO_HPP
#define SQLSTEG_DICT_IO_HPP

#include <iosfwd>
#include <string>

#include "sqlsteg/dictionary.hpp"

namespace sqlsteg {

// Line-oriented dictionary file format:
//   # comment / blank lines ignored
//   !alphabet 32-96            (or: !alphabet chars <string>)
//   !tables Books,Items
//   [75]                       category header, decimal codepoint
//   salary=2000                entries: bare integer or "quoted string"
//
// Throws ParseError on malformed input and Error carrying the validation
// report when the parsed dictionary has structural errors.
Dictionary load_dictionary(std::istream& in);
Dictionary load_dictionary_file(const std::string& path);

// Inverse of load_dictionary: load(render(d)) preserves alphabet, category
// order, entry order, and table names.
std::string render_dictionary(const Dictionary& d);

}  // namespace sqlsteg

#endif
