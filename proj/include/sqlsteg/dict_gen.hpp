#ifndef SQLSTEG_DICT_GEN_HPP
#define SQLSTEG_DICT_GEN_HPP

#include <cstdint>

#include "sqlsteg/dictionary.hpp"

namespace sqlsteg {

// Synthesizes a valid dictionary: `words_per_category` globally unique
// identifiers per category plus a default table pool. Deterministic for a
// given seed, so both parties can derive the same dictionary from a
// shared seed.
Dictionary generate_dictionary(const Alphabet& alphabet, std::size_t words_per_category,
                               std::uint64_t seed);

}  // namespace sqlsteg

#endif
