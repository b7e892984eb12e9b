#ifndef FIMCOWP_GRAMMAR_HPP
#define FIMCOWP_GRAMMAR_HPP

// Generic context-free grammars over string-named symbols, with the
// closure constructions used to assemble the co-word-problem grammar.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fimcowp {

using Symbol = std::string;
using Sentence = std::vector<Symbol>;

class GrammarError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Production {
  Symbol head;
  std::vector<Symbol> body;  // empty body is ε

  friend bool operator==(const Production&, const Production&) = default;
  friend auto operator<=>(const Production&, const Production&) = default;
};

/// Terminals keep their declaration order, which fixes the letter order
/// used when enumerating a language. Productions are a set.
class Grammar {
 public:
  Grammar() = default;

  Grammar(std::vector<Symbol> terminals, std::vector<Symbol> nonterminals, Symbol start,
          std::vector<Production> productions)
      : start_(std::move(start)) {
    for (auto& t : terminals) add_terminal(std::move(t));
    for (auto& n : nonterminals) add_nonterminal(std::move(n));
    for (auto& p : productions) productions_.insert(std::move(p));
    validate();
  }

  const std::vector<Symbol>& terminals() const { return terminals_; }
  const std::vector<Symbol>& nonterminals() const { return nonterminals_; }
  const Symbol& start() const { return start_; }
  const std::set<Production>& productions() const { return productions_; }

  bool is_terminal(const Symbol& s) const { return terminal_set_.count(s) != 0; }
  bool is_nonterminal(const Symbol& s) const { return nonterminal_set_.count(s) != 0; }

  /// Same productions, different start symbol.
  Grammar with_start(Symbol start) const {
    Grammar g = *this;
    g.start_ = std::move(start);
    g.validate();
    return g;
  }

 private:
  void add_terminal(Symbol s) {
    if (terminal_set_.insert(s).second) terminals_.push_back(std::move(s));
  }
  void add_nonterminal(Symbol s) {
    if (nonterminal_set_.insert(s).second) nonterminals_.push_back(std::move(s));
  }

  void validate() const {
    for (const auto& t : terminals_) {
      if (nonterminal_set_.count(t)) {
        throw GrammarError("symbol '" + t + "' is both terminal and nonterminal");
      }
    }
    if (!is_nonterminal(start_)) throw GrammarError("start symbol '" + start_ + "' undeclared");
    for (const auto& p : productions_) {
      if (!is_nonterminal(p.head)) {
        throw GrammarError("production head '" + p.head + "' is not a nonterminal");
      }
      for (const auto& s : p.body) {
        if (!is_terminal(s) && !is_nonterminal(s)) {
          throw GrammarError("undeclared symbol '" + s + "' in body of " + p.head);
        }
      }
    }
  }

  std::vector<Symbol> terminals_;
  std::vector<Symbol> nonterminals_;
  std::unordered_set<Symbol> terminal_set_;
  std::unordered_set<Symbol> nonterminal_set_;
  Symbol start_;
  std::set<Production> productions_;
};

/// Incremental construction; symbols are declared on first mention.
class GrammarBuilder {
 public:
  GrammarBuilder& terminal(const Symbol& s) {
    if (seen_t_.insert(s).second) terminals_.push_back(s);
    return *this;
  }
  GrammarBuilder& nonterminal(const Symbol& s) {
    if (seen_n_.insert(s).second) nonterminals_.push_back(s);
    return *this;
  }
  GrammarBuilder& start(const Symbol& s) {
    nonterminal(s);
    start_ = s;
    return *this;
  }
  /// Body symbols must already be declared (either kind).
  GrammarBuilder& rule(const Symbol& head, std::vector<Symbol> body) {
    nonterminal(head);
    productions_.push_back(Production{head, std::move(body)});
    return *this;
  }
  Grammar build() const { return Grammar(terminals_, nonterminals_, start_, productions_); }

 private:
  std::vector<Symbol> terminals_;
  std::vector<Symbol> nonterminals_;
  std::unordered_set<Symbol> seen_t_;
  std::unordered_set<Symbol> seen_n_;
  Symbol start_;
  std::vector<Production> productions_;
};

struct GrammarStats {
  std::size_t nonterminals = 0;
  std::size_t productions = 0;
  friend bool operator==(const GrammarStats&, const GrammarStats&) = default;
};

inline GrammarStats grammar_stats(const Grammar& g) {
  return {g.nonterminals().size(), g.productions().size()};
}

/// Reverse every body and map terminals through `inv`, which must fix
/// every terminal it does not mention.
inline Grammar reverse_invert_grammar(const Grammar& g, const std::map<Symbol, Symbol>& inv) {
  auto image = [&](const Symbol& s) {
    if (!g.is_terminal(s)) return s;
    auto it = inv.find(s);
    return it == inv.end() ? s : it->second;
  };
  std::vector<Production> prods;
  for (const auto& p : g.productions()) {
    Production q{p.head, {}};
    for (auto it = p.body.rbegin(); it != p.body.rend(); ++it) q.body.push_back(image(*it));
    prods.push_back(std::move(q));
  }
  return Grammar(g.terminals(), g.nonterminals(), g.start(), std::move(prods));
}

/// Grammar for { w1·marker·w2 : w1·w2 ∈ L(g) }.
inline Grammar insert_marker_grammar(const Grammar& g, const Symbol& marker) {
  if (g.is_terminal(marker) || g.is_nonterminal(marker)) {
    throw GrammarError("marker '" + marker + "' already a symbol of the grammar");
  }
  auto zero = [](const Symbol& v) { return v + "^0"; };
  auto one = [](const Symbol& v) { return v + "^1"; };
  std::vector<Symbol> terminals = g.terminals();
  terminals.push_back(marker);
  std::vector<Symbol> nonterminals;
  for (const auto& v : g.nonterminals()) {
    nonterminals.push_back(zero(v));
    nonterminals.push_back(one(v));
  }
  for (const auto& v : nonterminals) {
    if (g.is_terminal(v)) throw GrammarError("derived nonterminal '" + v + "' clashes");
  }

  std::vector<Production> prods;
  for (const auto& p : g.productions()) {
    std::vector<Symbol> base;
    for (const auto& s : p.body) base.push_back(g.is_nonterminal(s) ? zero(s) : s);
    prods.push_back(Production{zero(p.head), base});
    for (std::size_t i = 0; i < p.body.size(); ++i) {
      if (!g.is_nonterminal(p.body[i])) continue;
      auto body = base;
      body[i] = one(p.body[i]);
      prods.push_back(Production{one(p.head), std::move(body)});
    }
    for (std::size_t gap = 0; gap <= base.size(); ++gap) {
      auto body = base;
      body.insert(body.begin() + static_cast<std::ptrdiff_t>(gap), marker);
      prods.push_back(Production{one(p.head), std::move(body)});
    }
  }
  return Grammar(std::move(terminals), std::move(nonterminals), one(g.start()),
                 std::move(prods));
}

/// Union with constituents renamed apart as "<label>.<name>". A fresh
/// start symbol derives each constituent start.
inline Grammar union_grammar(const std::vector<Grammar>& parts,
                             const std::vector<std::string>& labels = {}) {
  if (parts.empty()) throw GrammarError("union of no grammars");
  if (!labels.empty() && labels.size() != parts.size()) {
    throw GrammarError("union labels do not match the number of grammars");
  }
  std::vector<Symbol> terminals;
  std::unordered_set<Symbol> tset;
  for (const auto& g : parts) {
    for (const auto& t : g.terminals()) {
      if (tset.insert(t).second) terminals.push_back(t);
    }
  }
  std::vector<Symbol> nonterminals;
  std::vector<Production> prods;
  std::vector<Symbol> starts;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& g = parts[i];
    const std::string prefix = (labels.empty() ? "G" + std::to_string(i + 1) : labels[i]) + ".";
    auto rename = [&](const Symbol& s) { return g.is_nonterminal(s) ? prefix + s : s; };
    for (const auto& n : g.nonterminals()) nonterminals.push_back(prefix + n);
    for (const auto& p : g.productions()) {
      Production q{prefix + p.head, {}};
      for (const auto& s : p.body) q.body.push_back(rename(s));
      prods.push_back(std::move(q));
    }
    starts.push_back(prefix + g.start());
  }
  std::unordered_set<Symbol> taken(nonterminals.begin(), nonterminals.end());
  taken.insert(tset.begin(), tset.end());
  Symbol start = "S";
  while (taken.count(start)) start += "'";
  for (const auto& s : starts) prods.push_back(Production{start, {s}});
  nonterminals.insert(nonterminals.begin(), start);
  return Grammar(std::move(terminals), std::move(nonterminals), start, std::move(prods));
}

// Serialization ------------------------------------------------------------

inline nlohmann::json to_json(const Grammar& g) {
  nlohmann::json prods = nlohmann::json::array();
  for (const auto& p : g.productions()) {
    prods.push_back({{"head", p.head}, {"body", p.body}});
  }
  return {{"terminals", g.terminals()},
          {"nonterminals", g.nonterminals()},
          {"start", g.start()},
          {"productions", std::move(prods)}};
}

inline Grammar grammar_from_json(const nlohmann::json& j) {
  try {
    std::vector<Production> prods;
    for (const auto& p : j.at("productions")) {
      prods.push_back(
          Production{p.at("head").get<Symbol>(), p.at("body").get<std::vector<Symbol>>()});
    }
    return Grammar(j.at("terminals").get<std::vector<Symbol>>(),
                   j.at("nonterminals").get<std::vector<Symbol>>(),
                   j.at("start").get<Symbol>(), std::move(prods));
  } catch (const nlohmann::json::exception& e) {
    throw GrammarError(std::string("malformed grammar JSON: ") + e.what());
  }
}

/// `Head -> body | body`, heads and bodies in lexicographic order, ε as `1`.
inline std::string to_bnf(const Grammar& g) {
  std::map<Symbol, std::vector<std::string>> rows;
  for (const auto& p : g.productions()) {
    std::string body;
    for (const auto& s : p.body) {
      if (!body.empty()) body += ' ';
      body += s;
    }
    rows[p.head].push_back(body.empty() ? "1" : body);
  }
  std::ostringstream os;
  for (auto& [head, bodies] : rows) {
    std::sort(bodies.begin(), bodies.end());
    os << head << " ->";
    for (std::size_t i = 0; i < bodies.size(); ++i) {
      os << (i == 0 ? " " : " | ") << bodies[i];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace fimcowp

#endif  // FIMCOWP_GRAMMAR_HPP
