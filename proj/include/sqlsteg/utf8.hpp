#ifndef SQLSTEG_UTF8_HPP
#define SQLSTEG_UTF8_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sqlsteg/errors.hpp"

namespace sqlsteg::utf8 {

std::vector<char32_t> decode(std::string_view text);
void append(std::string& out, char32_t cp);
std::string encode(char32_t cp);
std::string encode(const std::vector<char32_t>& cps);

}  // namespace sqlsteg::utf8

#endif
