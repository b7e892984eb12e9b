#ifndef FIMCOWP_LANGUAGE_HPP
#define FIMCOWP_LANGUAGE_HPP

// Bounded enumeration of L(g) by fixpoint: every nonterminal carries the
// set of words of length <= n it is known to derive, and bodies are
// re-expanded from those sets until no set grows.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "fimcowp/grammar.hpp"

namespace fimcowp {

/// {w ∈ L(g) : |w| <= bound}, ordered by length then by terminal
/// declaration order.
inline std::vector<Sentence> enumerate_language(const Grammar& g, std::size_t bound) {
  const auto& terms = g.terminals();
  if (terms.size() > 255) throw GrammarError("too many terminals to enumerate");
  std::unordered_map<Symbol, std::size_t> nt;
  for (std::size_t i = 0; i < g.nonterminals().size(); ++i) nt.emplace(g.nonterminals()[i], i);
  std::unordered_map<Symbol, char> tcode;
  for (std::size_t i = 0; i < terms.size(); ++i) tcode.emplace(terms[i], static_cast<char>(i + 1));

  // Body symbols as either a terminal code (> 0) or -(nonterminal index + 1).
  struct Rule {
    std::size_t head;
    std::vector<int> body;
  };
  std::vector<Rule> rules;
  for (const auto& p : g.productions()) {
    Rule r{nt.at(p.head), {}};
    for (const auto& s : p.body) {
      if (g.is_terminal(s)) {
        r.body.push_back(static_cast<unsigned char>(tcode.at(s)));
      } else {
        r.body.push_back(-static_cast<int>(nt.at(s)) - 1);
      }
    }
    rules.push_back(std::move(r));
  }

  const std::size_t count = g.nonterminals().size();
  std::vector<std::set<std::string>> known(count);
  // by_len[a][l]: words of length l derivable from a, snapshot of `known`.
  std::vector<std::vector<std::vector<std::string>>> by_len(
      count, std::vector<std::vector<std::string>>(bound + 1));

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      std::string prefix;
      auto expand = [&](auto&& self, std::size_t k) -> void {
        if (k == r.body.size()) {
          if (known[r.head].insert(prefix).second) changed = true;
          return;
        }
        const int s = r.body[k];
        if (s > 0) {
          if (prefix.size() < bound) {
            prefix.push_back(static_cast<char>(s));
            self(self, k + 1);
            prefix.pop_back();
          }
          return;
        }
        const auto& buckets = by_len[static_cast<std::size_t>(-s - 1)];
        for (std::size_t l = 0; prefix.size() + l <= bound; ++l) {
          for (const auto& piece : buckets[l]) {
            const std::size_t keep = prefix.size();
            prefix += piece;
            self(self, k + 1);
            prefix.resize(keep);
          }
        }
      };
      expand(expand, 0);
    }
    for (std::size_t a = 0; a < count; ++a) {
      for (auto& b : by_len[a]) b.clear();
      for (const auto& w : known[a]) by_len[a][w.size()].push_back(w);
    }
  }

  std::vector<std::string> words(known[nt.at(g.start())].begin(), known[nt.at(g.start())].end());
  std::sort(words.begin(), words.end(), [](const std::string& x, const std::string& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  std::vector<Sentence> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    Sentence s;
    for (char c : w) s.push_back(terms[static_cast<unsigned char>(c) - 1]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace fimcowp

#endif  // FIMCOWP_LANGUAGE_HPP
