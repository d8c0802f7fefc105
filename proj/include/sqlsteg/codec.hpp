#ifndef SQLSTEG_CODEC_HPP
#define SQLSTEG_CODEC_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sqlsteg/dictionary.hpp"
#include "sqlsteg/random.hpp"
#include "sqlsteg/sql.hpp"

namespace sqlsteg {

enum class CaseMode { Fold, Strict };

struct EncodeOptions {
  std::uint64_t seed = 0;
  std::size_t max_chars_per_query = 64;  // >= 1
  CaseMode case_mode = CaseMode::Fold;
  QuoteStyle quote_style = QuoteStyle::Double;
};

struct MessageChars {
  std::vector<char32_t> chars;

  std::size_t size() const { return chars.size(); }
};

// Maps the message onto the alphabet. Fold mode uppercases ASCII letters
// that would otherwise be unsupported and sets `folded`; strict mode
// throws UnsupportedCharacterError instead.
MessageChars prepare_message(std::string_view message, const Alphabet& alphabet, CaseMode mode,
                             bool* folded = nullptr);

// select_count = ceil(n/2): indices 0..floor((n-1)/2) go to the SELECT
// clause, the rest to WHERE. Throws EmptyMessageError for n == 0.
std::pair<std::size_t, std::size_t> split_words(std::size_t n);

// Consecutive chunks with lengths in [ceil(max/2), max] (final chunk takes
// the remainder); concatenation equals the input.
std::vector<MessageChars> chunk_message(const MessageChars& chars, const EncodeOptions& opts,
                                        RandomSource& rng);

Carrier encode(std::string_view message, const Dictionary& d, const EncodeOptions& opts,
               RandomSource& rng);
Carrier encode(std::string_view message, const Dictionary& d, const EncodeOptions& opts);

// Inverse of encode: RNG-independent, ignores table names and values.
std::string decode(std::string_view carrier_text, const Dictionary& d);
std::string decode(const Carrier& carrier, const Dictionary& d);

struct CapacityStats {
  std::size_t term_count = 0;      // dictionary-word occurrences == message length
  std::size_t keyword_count = 0;   // SELECT + FROM + WHERE + ANDs, summed over queries
  std::size_t query_count = 0;
  std::size_t carrier_chars = 0;   // rendered carrier size for this seed
};

CapacityStats capacity_stats(std::string_view message, const Dictionary& d,
                             const EncodeOptions& opts);

}  // namespace sqlsteg

#endif
