#ifndef FIMCOWP_CLI_HPP
#define FIMCOWP_CLI_HPP

// The `fimcowp` command line. Exit status: 0 for success / true / a clean
// report, 1 for false / reject / disagreements, 2 for usage or input errors.

#include <cstdlib>
#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fimcowp/cnf.hpp"
#include "fimcowp/derivation.hpp"
#include "fimcowp/language.hpp"
#include "fimcowp/munn.hpp"
#include "fimcowp/oracle.hpp"
#include "fimcowp/paper_grammars.hpp"
#include "fimcowp/words.hpp"

namespace fimcowp::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

inline std::size_t hard_length_cap() {
  if (const char* env = std::getenv("FIMCOWP_MAXLEN_HARD")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw std::invalid_argument("FIMCOWP_MAXLEN_HARD is not a number");
    }
  }
  return 14;
}

inline void check_length_cap(std::size_t max_len) {
  const std::size_t cap = hard_length_cap();
  if (max_len > cap) {
    throw std::invalid_argument("--max-len " + std::to_string(max_len) +
                                " exceeds FIMCOWP_MAXLEN_HARD=" + std::to_string(cap));
  }
}

struct Options {
  int rank = 1;
  std::string mode = "cowp";
  std::string which;
  std::string format;
  std::vector<std::string> words;
  std::string word;
  bool cnf = false;
  bool tree = false;
  std::size_t max_len = 0;
  unsigned jobs = 1;
};

inline int cmd_decide(const Options& o, std::ostream& out) {
  Word u, v;
  if (o.words.size() == 1) {
    const auto m = parse_marked(o.words[0], o.rank);
    u = m.left;
    v = m.v();
  } else {
    u = parse_word(o.words[0], o.rank);
    v = parse_word(o.words[1], o.rank);
  }
  bool result = false;
  if (o.mode == "wp") {
    result = fim_equal(u, v);
  } else if (o.mode == "cowp") {
    result = !fim_equal(u, v);
  } else if (o.mode == "k1") {
    result = in_K1(u, v);
  } else {
    result = in_K2(u, v);
  }
  out << (result ? "true" : "false") << '\n';
  return result ? kExitTrue : kExitFalse;
}

inline int cmd_grammar(const Options& o, std::ostream& out) {
  Grammar g = named_grammar(o.which, o.rank);
  if (o.cnf) g = to_cnf(g);
  if (o.format == "json") {
    out << to_json(g).dump(2) << '\n';
  } else {
    out << to_bnf(g);
  }
  return kExitTrue;
}

inline int cmd_parse(const Options& o, std::ostream& out) {
  const Grammar g = named_grammar(o.which, o.rank);
  const Sentence w = parse_sentence(o.word, o.rank);
  const bool accepted = cyk_member(g, w);
  out << (accepted ? "accept" : "reject") << '\n';
  if (accepted && o.tree) {
    if (auto t = derive(g, w)) out << render_tree(*t);
  }
  return accepted ? kExitTrue : kExitFalse;
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
  check_length_cap(o.max_len);
  const Grammar g = named_grammar(o.which, o.rank);
  for (const auto& w : enumerate_language(g, o.max_len)) out << sentence_text(w) << '\n';
  return kExitTrue;
}

inline int cmd_crosscheck(const Options& o, std::ostream& out) {
  check_length_cap(o.max_len);
  const Grammar g = named_grammar(o.which, o.rank);
  const CykRecognizer rec(g);
  CrosscheckReport report;
  if (o.which == "E") {
    report = crosscheck(rec, [](const Word& w) { return is_idempotent(w); },
                        enumerate_words(o.rank, o.max_len), o.jobs);
  } else if (o.which.rfind("Zx:", 0) == 0) {
    const Letter x = parse_letter(o.which.back(), o.rank);
    report = crosscheck(rec, [x](const Word& w) { return is_idempotent(w) && avoids(w, x); },
                        enumerate_words(o.rank, o.max_len), o.jobs);
  } else if (o.which == "K1") {
    report = crosscheck(rec, [](const MarkedWord& m) { return in_K1(m.left, m.v()); },
                        enumerate_marked(o.rank, o.max_len), o.jobs);
  } else if (o.which == "K2") {
    report = crosscheck(rec, [](const MarkedWord& m) { return in_K2(m.left, m.v()); },
                        enumerate_marked(o.rank, o.max_len), o.jobs);
  } else if (o.which == "coWP-FG") {
    report = crosscheck(rec, [](const MarkedWord& m) { return in_cowp_fg(m); },
                        enumerate_marked(o.rank, o.max_len), o.jobs);
  } else {
    report = crosscheck(rec, [](const MarkedWord& m) { return in_cowp(m); },
                        enumerate_marked(o.rank, o.max_len), o.jobs);
  }
  out << report.to_json().dump() << '\n';
  return report.clean() ? kExitTrue : kExitFalse;
}

inline int cmd_munn(const Options& o, std::ostream& out) {
  const auto t = build_munn(parse_word(o.word, o.rank));
  out << (o.format == "ascii" ? render_ascii(t) : render_dot(t));
  return kExitTrue;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Grammars for the co-word problem of free inverse monoids", "fimcowp"};
  app.require_subcommand(1);

  auto rank_opt = [&](CLI::App* sub) {
    sub->add_option("--rank", o.rank, "number of generators")->required()->check(
        CLI::Range(1, kMaxRank));
  };

  auto* decide = app.add_subcommand("decide", "decide membership with the Munn-tree oracle");
  rank_opt(decide);
  decide->add_option("--mode", o.mode, "wp, cowp, k1 or k2")
      ->check(CLI::IsMember({"wp", "cowp", "k1", "k2"}));
  decide->add_option("words", o.words, "marked word u#t, or the pair u v")
      ->required()
      ->expected(1, 2);

  auto* grammar = app.add_subcommand("grammar", "print a grammar");
  rank_opt(grammar);
  grammar->add_option("--which", o.which, "E, Zx:<letter>, K1, K2, coWP-FG or coWP-FIM")
      ->required();
  o.format = "bnf";
  grammar->add_option("--format", o.format, "bnf or json")->check(CLI::IsMember({"bnf", "json"}));
  grammar->add_flag("--cnf", o.cnf, "convert to Chomsky normal form first");

  auto* parse = app.add_subcommand("parse", "CYK membership and derivation");
  rank_opt(parse);
  parse->add_option("--which", o.which, "grammar name")->required();
  parse->add_option("word", o.word, "word to parse")->required();
  parse->add_flag("--tree", o.tree, "print a derivation tree");

  auto* enumerate = app.add_subcommand("enumerate", "list the language up to a length");
  rank_opt(enumerate);
  enumerate->add_option("--which", o.which, "grammar name")->required();
  enumerate->add_option("--max-len", o.max_len, "length bound")->required();

  auto* cross = app.add_subcommand("crosscheck", "compare a grammar with its Munn-tree oracle");
  rank_opt(cross);
  cross->add_option("--which", o.which, "grammar name")->required();
  cross->add_option("--max-len", o.max_len, "length bound")->required();
  cross->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* munn = app.add_subcommand("munn", "render the Munn tree of a word");
  rank_opt(munn);
  munn->add_option("word", o.word, "word")->required();
  munn->add_option("--format", o.format, "dot or ascii")
      ->check(CLI::IsMember({"dot", "ascii"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitTrue;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (decide->parsed()) return cmd_decide(o, out);
    if (grammar->parsed()) return cmd_grammar(o, out);
    if (parse->parsed()) return cmd_parse(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (cross->parsed()) return cmd_crosscheck(o, out);
    if (munn->parsed()) return cmd_munn(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fimcowp::cli

#endif  // FIMCOWP_CLI_HPP
