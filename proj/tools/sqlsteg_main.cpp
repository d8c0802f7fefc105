// sqlsteg: hide text messages inside SQL SELECT queries.
//
// Exit codes: 0 ok, 1 usage, 2 dictionary invalid, 3 encode error,
// 4 decode error. stdout carries only the artifact; diagnostics go to
// stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sqlsteg/codec.hpp"
#include "sqlsteg/dict_gen.hpp"
#include "sqlsteg/dict_io.hpp"
#include "sqlsteg/utf8.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBadDictionary = 2;
constexpr int kExitEncodeError = 3;
constexpr int kExitDecodeError = 4;

std::string read_input(const std::string& path) {
  if (path.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sqlsteg::Error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sqlsteg::Error("cannot open output file: " + path);
  out << text;
}

// A trailing newline comes from the shell, not the message.
std::string strip_trailing_newline(std::string s) {
  if (!s.empty() && s.back() == '\n') s.pop_back();
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) | rd();
  std::cerr << "seed: " << s << "\n";
  return s;
}

sqlsteg::Dictionary load_or_exit(const std::string& path) {
  try {
    return sqlsteg::load_dictionary_file(path);
  } catch (const sqlsteg::ParseError& e) {
    std::cerr << "error: " << path << ":" << e.line << ": " << e.what() << "\n";
    std::exit(kExitBadDictionary);
  } catch (const sqlsteg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::exit(kExitBadDictionary);
  }
}

sqlsteg::Alphabet parse_alphabet_flag(const std::string& spec) {
  if (spec.rfind("chars:", 0) == 0) {
    auto chars = sqlsteg::utf8::decode(spec.substr(6));
    return sqlsteg::Alphabet(std::move(chars));
  }
  auto dash = spec.find('-');
  if (dash == std::string::npos) throw sqlsteg::Error("alphabet must be '<lo>-<hi>' or 'chars:<string>'");
  unsigned long lo = std::stoul(spec.substr(0, dash));
  unsigned long hi = std::stoul(spec.substr(dash + 1));
  return sqlsteg::Alphabet::from_range(static_cast<char32_t>(lo), static_cast<char32_t>(hi));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Text steganography over SQL SELECT queries"};
  app.require_subcommand(1);

  std::string dict_path, in_path, out_path, quote_flag = "double", alphabet_spec = "32-96";
  std::optional<std::uint64_t> seed;
  std::size_t max_query_chars = 64;
  std::size_t words_per_category = 0;
  bool strict_case = false;

  auto* enc = app.add_subcommand("encode", "Encode a message into an SQL carrier");
  enc->add_option("--dict", dict_path, "Dictionary file")->required();
  enc->add_option("--in", in_path, "Message file (default: stdin)");
  enc->add_option("--out", out_path, "Carrier output (default: stdout)");
  enc->add_option("--seed", seed, "Random seed (default: system entropy, reported on stderr)");
  enc->add_option("--max-query-chars", max_query_chars, "Max characters encoded per query")
      ->check(CLI::PositiveNumber);
  enc->add_flag("--strict-case", strict_case, "Error on characters outside the alphabet instead of folding");
  enc->add_option("--quote-style", quote_flag, "String literal quoting")
      ->check(CLI::IsMember({"double", "single"}));

  auto* dec = app.add_subcommand("decode", "Recover the message from an SQL carrier");
  dec->add_option("--dict", dict_path, "Dictionary file")->required();
  dec->add_option("--in", in_path, "Carrier file (default: stdin)");
  dec->add_option("--out", out_path, "Message output (default: stdout)");

  auto* val = app.add_subcommand("dict-validate", "Check a dictionary file");
  val->add_option("--dict", dict_path, "Dictionary file")->required();

  auto* gen = app.add_subcommand("dict-gen", "Generate a synthetic dictionary");
  gen->add_option("--out", out_path, "Output file")->required();
  gen->add_option("--words-per-category", words_per_category, "Entries per category")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Random seed (default: system entropy, reported on stderr)");
  gen->add_option("--alphabet", alphabet_spec, "Alphabet: '<lo>-<hi>' or 'chars:<string>'");

  auto* st = app.add_subcommand("stats", "Capacity statistics without emitting a carrier");
  st->add_option("--dict", dict_path, "Dictionary file")->required();
  st->add_option("--in", in_path, "Message file (default: stdin)");
  st->add_option("--max-query-chars", max_query_chars, "Max characters encoded per query")
      ->check(CLI::PositiveNumber);
  st->add_option("--seed", seed, "Random seed (default: system entropy, reported on stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (enc->parsed() || st->parsed()) {
      auto dict = load_or_exit(dict_path);
      sqlsteg::EncodeOptions opts;
      opts.seed = resolve_seed(seed);
      opts.max_chars_per_query = max_query_chars;
      opts.case_mode = strict_case ? sqlsteg::CaseMode::Strict : sqlsteg::CaseMode::Fold;
      opts.quote_style = quote_flag == "single" ? sqlsteg::QuoteStyle::Single
                                                : sqlsteg::QuoteStyle::Double;
      std::string message = strip_trailing_newline(read_input(in_path));
      try {
        if (enc->parsed()) {
          bool folded = false;
          sqlsteg::prepare_message(message, dict.alphabet(), opts.case_mode, &folded);
          if (folded) std::cerr << "warning: message folded to uppercase\n";
          sqlsteg::Carrier carrier = sqlsteg::encode(message, dict, opts);
          std::cerr << "queries: " << carrier.queries.size() << "\n";
          write_output(out_path, sqlsteg::render_carrier(carrier, opts.quote_style) + "\n");
        } else {
          auto stats = sqlsteg::capacity_stats(message, dict, opts);
          std::ostringstream out;
          out << "term_count=" << stats.term_count << "\n"
              << "keyword_count=" << stats.keyword_count << "\n"
              << "query_count=" << stats.query_count << "\n"
              << "carrier_chars_estimate=" << stats.carrier_chars << "\n";
          write_output(out_path, out.str());
        }
      } catch (const sqlsteg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEncodeError;
      }
      return kExitOk;
    }

    if (dec->parsed()) {
      auto dict = load_or_exit(dict_path);
      try {
        std::string message = sqlsteg::decode(read_input(in_path), dict);
        write_output(out_path, message + "\n");
      } catch (const sqlsteg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDecodeError;
      }
      return kExitOk;
    }

    if (val->parsed()) {
      try {
        std::ifstream in(dict_path, std::ios::binary);
        if (!in) throw sqlsteg::Error("cannot open dictionary file: " + dict_path);
        sqlsteg::Dictionary dict = [&in] {
          try {
            return sqlsteg::load_dictionary(in);
          } catch (const sqlsteg::ValidationError& e) {
            for (const auto& v : e.violations)
              std::cout << (v.severity == sqlsteg::Severity::Error ? "error" : "warning") << " "
                        << sqlsteg::violation_kind_name(v.kind)
                        << (v.category ? " [category " + std::to_string(*v.category) + "]" : "")
                        << ": " << v.detail << "\n";
            std::exit(kExitBadDictionary);
          }
        }();
        for (const auto& v : sqlsteg::validate_dictionary(dict))
          std::cout << (v.severity == sqlsteg::Severity::Error ? "error" : "warning") << " "
                    << sqlsteg::violation_kind_name(v.kind)
                    << (v.category ? " [category " + std::to_string(*v.category) + "]" : "")
                    << ": " << v.detail << "\n";
      } catch (const sqlsteg::ParseError& e) {
        std::cerr << "error: " << dict_path << ":" << e.line << ": " << e.what() << "\n";
        return kExitBadDictionary;
      } catch (const sqlsteg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadDictionary;
      }
      return kExitOk;
    }

    if (gen->parsed()) {
      auto alphabet = parse_alphabet_flag(alphabet_spec);
      auto dict = sqlsteg::generate_dictionary(alphabet, words_per_category, resolve_seed(seed));
      write_output(out_path, sqlsteg::render_dictionary(dict));
      return kExitOk;
    }
  } catch (const sqlsteg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
