#include "sqlsteg/codec.hpp"

#include <algorithm>

#include "sqlsteg/utf8.hpp"

namespace sqlsteg {

MessageChars prepare_message(std::string_view message, const Alphabet& alphabet, CaseMode mode,
                             bool* folded) {
  if (folded) *folded = false;
  auto cps = utf8::decode(message);
  if (cps.empty()) throw EmptyMessageError();
  for (std::size_t i = 0; i < cps.size(); ++i) {
    char32_t c = cps[i];
    if (alphabet.contains(c)) continue;
    if (mode == CaseMode::Fold && c >= U'a' && c <= U'z' && alphabet.contains(c - 32)) {
      cps[i] = c - 32;
      if (folded) *folded = true;
      continue;
    }
    throw UnsupportedCharacterError(
        "unsupported character '" + utf8::encode(c) + "' (codepoint " +
            std::to_string(static_cast<std::uint32_t>(c)) + ") at position " + std::to_string(i),
        c, i);
  }
  return {std::move(cps)};
}

std::pair<std::size_t, std::size_t> split_words(std::size_t n) {
  if (n == 0) throw EmptyMessageError();
  std::size_t select_count = (n - 1) / 2 + 1;
  return {select_count, n - select_count};
}

std::vector<MessageChars> chunk_message(const MessageChars& chars, const EncodeOptions& opts,
                                        RandomSource& rng) {
  const std::size_t max = std::max<std::size_t>(opts.max_chars_per_query, 1);
  if (chars.size() <= max) return {chars};

  const std::size_t lo = (max + 1) / 2;
  std::vector<MessageChars> chunks;
  std::size_t start = 0;
  std::size_t remaining = chars.size();
  while (remaining > max) {
    std::size_t len = lo + rng.below(max - lo + 1);
    chunks.push_back({{chars.chars.begin() + start, chars.chars.begin() + start + len}});
    start += len;
    remaining -= len;
  }
  chunks.push_back({{chars.chars.begin() + start, chars.chars.end()}});
  return chunks;
}

namespace {

// One SELECT query per chunk: the first ceil(n/2) sampled words become
// bare select terms, the rest word=value predicates.
SelectQuery build_query(const MessageChars& chunk, const Dictionary& d, RandomSource& rng) {
  std::vector<const WordEntry*> words;
  words.reserve(chunk.size());
  std::unordered_set<std::string> used;
  for (char32_t c : chunk.chars) {
    const WordEntry& entry = sample_word(d, d.alphabet().index_of(c), rng, used);
    used.insert(entry.word);
    words.push_back(&entry);
  }

  auto [select_count, where_count] = split_words(words.size());
  SelectQuery q;
  q.select_terms.reserve(select_count);
  for (std::size_t i = 0; i < select_count; ++i) q.select_terms.push_back(words[i]->word);
  q.where_predicates.reserve(where_count);
  for (std::size_t i = select_count; i < words.size(); ++i)
    q.where_predicates.emplace_back(words[i]->word, words[i]->value);

  const auto& pool = d.table_names();
  std::size_t count = 1 + rng.below(std::min<std::size_t>(3, pool.size()));
  std::vector<std::string> names(pool);
  for (std::size_t i = 0; i < count; ++i)
    std::swap(names[i], names[i + rng.below(names.size() - i)]);
  names.resize(count);
  q.table_names = std::move(names);
  return q;
}

}  // namespace

Carrier encode(std::string_view message, const Dictionary& d, const EncodeOptions& opts,
               RandomSource& rng) {
  MessageChars chars = prepare_message(message, d.alphabet(), opts.case_mode);
  Carrier carrier;
  for (const MessageChars& chunk : chunk_message(chars, opts, rng))
    carrier.queries.push_back(build_query(chunk, d, rng));
  return carrier;
}

Carrier encode(std::string_view message, const Dictionary& d, const EncodeOptions& opts) {
  SeededRandomSource rng(opts.seed);
  return encode(message, d, opts, rng);
}

std::string decode(const Carrier& carrier, const Dictionary& d) {
  std::vector<char32_t> out;
  for (const SelectQuery& q : carrier.queries) {
    for (const std::string& w : q.select_terms) out.push_back(d.alphabet().char_at(d.lookup_word(w)));
    for (const auto& [w, value] : q.where_predicates)
      out.push_back(d.alphabet().char_at(d.lookup_word(w)));
  }
  return utf8::encode(out);
}

std::string decode(std::string_view carrier_text, const Dictionary& d) {
  return decode(parse_carrier(carrier_text), d);
}

CapacityStats capacity_stats(std::string_view message, const Dictionary& d,
                             const EncodeOptions& opts) {
  Carrier carrier = encode(message, d, opts);
  CapacityStats stats;
  stats.query_count = carrier.queries.size();
  for (const SelectQuery& q : carrier.queries) {
    std::size_t where = q.where_predicates.size();
    stats.term_count += q.select_terms.size() + where;
    stats.keyword_count += 2 + (where > 0 ? 1 : 0) + (where > 1 ? where - 1 : 0);
  }
  stats.carrier_chars = render_carrier(carrier, opts.quote_style).size();
  return stats;
}

}  // namespace sqlsteg
