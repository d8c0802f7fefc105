#include <doctest.h>

#include <unordered_set>

#include "sqlsteg/codec.hpp"
#include "sqlsteg/dict_gen.hpp"
#include "gen.hpp"
#include "paper_dict.hpp"

using namespace sqlsteg;

TEST_CASE("split_words puts the first ceil(n/2) words in SELECT") {
  CHECK(split_words(8) == std::pair<std::size_t, std::size_t>{4, 4});
  CHECK(split_words(1) == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(split_words(5) == std::pair<std::size_t, std::size_t>{3, 2});
  CHECK_THROWS_AS(split_words(0), EmptyMessageError);
}

TEST_CASE("chunk_message") {
  EncodeOptions opts;
  SeededRandomSource rng(1);

  SUBCASE("under the threshold: single chunk") {
    MessageChars m{{U'K', U'I', U'L', U'L'}};
    auto chunks = chunk_message(m, opts, rng);
    REQUIRE(chunks.size() == 1);
    CHECK(chunks[0].chars == m.chars);
  }
  SUBCASE("n=1, max=1") {
    opts.max_chars_per_query = 1;
    auto chunks = chunk_message(MessageChars{{U'A'}}, opts, rng);
    CHECK(chunks.size() == 1);
  }
  SUBCASE("concatenation identity and length bounds") {
    testing::Gen gen(5);
    Alphabet a = Alphabet::default_alphabet();
    for (int i = 0; i < 200; ++i) {
      opts.max_chars_per_query = 1 + gen.below(80);
      auto cps = utf8::decode(gen.message(a, 1, 300));
      MessageChars m{cps};
      auto chunks = chunk_message(m, opts, rng);
      std::vector<char32_t> joined;
      for (const auto& c : chunks) {
        CHECK(c.size() >= 1);
        CHECK(c.size() <= opts.max_chars_per_query);
        joined.insert(joined.end(), c.chars.begin(), c.chars.end());
      }
      CHECK(joined == m.chars);
    }
  }
}

TEST_CASE("encode reproduces the worked example with a scripted source") {
  Dictionary d = testing::paper_dictionary();
  // draws: L -> bind, B -> id, table count 2, shuffle keeps pool order
  ScriptedRandomSource rng({0, 0, 1, 0});
  Carrier c = encode("KILL BOB", d, {}, rng);
  CHECK(rng.exhausted());
  CHECK(render_carrier(c) == testing::kGoldenQuery + ";");
}

TEST_CASE("decode recovers the worked example") {
  Dictionary d = testing::paper_dictionary();
  CHECK(decode(testing::kGoldenQuery, d) == "KILL BOB");
  CHECK(decode(testing::kGoldenQuery + ";", d) == "KILL BOB");
}

TEST_CASE("single-character message yields a WHERE-less query") {
  Alphabet a = Alphabet::default_alphabet();
  std::vector<std::vector<WordEntry>> cats(a.size());
  cats[33] = {{"type", Value::string("admin")}};
  Dictionary d(a, cats, {"T"});

  ScriptedRandomSource rng({});  // every choice is forced
  Carrier c = encode("A", d, {}, rng);
  CHECK(render_carrier(c) == "SELECT type FROM T;");
  CHECK(decode("SELECT type FROM T", d) == "A");
}

TEST_CASE("encode error paths") {
  Dictionary d = testing::paper_dictionary();
  CHECK_THROWS_AS(encode("", d, {}), EmptyMessageError);
  CHECK_THROWS_AS(encode("KILN", d, {}), EmptyCategoryError);  // N's category is empty
  EncodeOptions strict;
  strict.case_mode = CaseMode::Strict;
  CHECK_THROWS_AS(encode("kill bob", d, strict), UnsupportedCharacterError);
  CHECK_THROWS_AS(encode("KILL\tBOB", d, {}), UnsupportedCharacterError);  // unfoldable
}

TEST_CASE("fold mode uppercases the message") {
  Dictionary d = testing::paper_dictionary();
  bool folded = false;
  MessageChars m = prepare_message("kill bob", d.alphabet(), CaseMode::Fold, &folded);
  CHECK(folded);
  CHECK(utf8::encode(m.chars) == "KILL BOB");
  CHECK(decode(render_carrier(encode("kill bob", d, {})), d) == "KILL BOB");
}

TEST_CASE("decode surfaces unknown words") {
  Dictionary d = testing::paper_dictionary();
  CHECK_THROWS_AS(decode("SELECT zzz FROM T", d), UnknownWordError);
  CHECK_THROWS_AS(decode("SELECT", d), SyntaxError);
}

TEST_CASE("round-trip identity over random messages and seeds") {
  Dictionary d = generate_dictionary(Alphabet::default_alphabet(), 3, 11);
  testing::Gen gen(123);
  for (int i = 0; i < 500; ++i) {
    std::string m = gen.message(d.alphabet(), 1, 120);
    EncodeOptions opts;
    opts.seed = gen.seed();
    opts.max_chars_per_query = 1 + gen.below(64);
    opts.quote_style = gen.below(2) ? QuoteStyle::Single : QuoteStyle::Double;
    std::string carrier = render_carrier(encode(m, d, opts), opts.quote_style);
    CHECK(decode(carrier, d) == m);
  }
}

TEST_CASE("round-trip with singleton categories (repeats allowed)") {
  Dictionary d = generate_dictionary(Alphabet::default_alphabet(), 1, 3);
  std::string m = "AAAAAAAAAA BBB!!";
  EncodeOptions opts;
  opts.seed = 9;
  CHECK(decode(render_carrier(encode(m, d, opts)), d) == m);
}

TEST_CASE("decode is seed-independent") {
  Dictionary d = generate_dictionary(Alphabet::default_alphabet(), 4, 21);
  testing::Gen gen(456);
  for (int i = 0; i < 50; ++i) {
    std::string m = gen.message(d.alphabet(), 1, 80);
    EncodeOptions o1, o2;
    o1.seed = gen.seed();
    o2.seed = gen.seed();
    CHECK(decode(render_carrier(encode(m, d, o1)), d) == m);
    CHECK(decode(render_carrier(encode(m, d, o2)), d) == m);
  }
}

TEST_CASE("encode is deterministic for a fixed seed") {
  Dictionary d = generate_dictionary(Alphabet::default_alphabet(), 4, 21);
  EncodeOptions opts;
  opts.seed = 31337;
  CHECK(render_carrier(encode("DETERMINISM TEST 123", d, opts)) ==
        render_carrier(encode("DETERMINISM TEST 123", d, opts)));
}

TEST_CASE("capacity_stats matches the keyword formula") {
  Dictionary d = testing::paper_dictionary();
  EncodeOptions opts;
  auto s = capacity_stats("KILL BOB", d, opts);
  CHECK(s.term_count == 8);
  CHECK(s.keyword_count == 6);  // SELECT, FROM, WHERE, AND x3
  CHECK(s.query_count == 1);

  Alphabet a = Alphabet::default_alphabet();
  std::vector<std::vector<WordEntry>> cats(a.size());
  cats[33] = {{"type", Value::string("admin")}};
  Dictionary single(a, cats, {"T"});
  auto s1 = capacity_stats("A", single, opts);
  CHECK(s1.term_count == 1);
  CHECK(s1.keyword_count == 2);
}

TEST_CASE("long messages chunk into multiple queries") {
  Dictionary d = generate_dictionary(Alphabet::default_alphabet(), 3, 8);
  testing::Gen gen(9);
  std::string m = gen.message(d.alphabet(), 100, 100);
  EncodeOptions opts;
  opts.seed = 4;
  Carrier c = encode(m, d, opts);
  CHECK(c.queries.size() >= 2);
  auto stats = capacity_stats(m, d, opts);
  CHECK(stats.term_count == 100);
  CHECK(stats.query_count == c.queries.size());
  CHECK(decode(render_carrier(c), d) == m);
}

TEST_CASE("disjoint dictionaries produce disjoint carriers") {
  Dictionary d1 = generate_dictionary(Alphabet::default_alphabet(), 3, 1);
  // d2: same layout, every word suffixed -> word sets disjoint by construction
  std::vector<std::vector<WordEntry>> cats2;
  std::unordered_set<std::string> w1;
  for (const auto& cat : d1.categories()) {
    auto& c2 = cats2.emplace_back();
    for (const auto& e : cat) {
      w1.insert(e.word);
      c2.push_back({e.word + "_x", e.value});
    }
  }
  Dictionary d2(d1.alphabet(), std::move(cats2), d1.table_names());

  EncodeOptions opts;
  opts.seed = 5;
  for (const auto& q : encode("SECRET NOTE", d2, opts).queries) {
    for (const auto& t : q.select_terms) CHECK(!w1.count(t));
    for (const auto& [w, v] : q.where_predicates) CHECK(!w1.count(w));
  }
}
