#ifndef FIMCOWP_CNF_HPP
#define FIMCOWP_CNF_HPP

// Chomsky normal form conversion and CYK membership.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fimcowp/grammar.hpp"

namespace fimcowp {

namespace detail {

class FreshNames {
 public:
  explicit FreshNames(const Grammar& g) {
    taken_.insert(g.terminals().begin(), g.terminals().end());
    taken_.insert(g.nonterminals().begin(), g.nonterminals().end());
  }
  Symbol make(const std::string& stem) {
    Symbol s = stem;
    for (int i = 1; taken_.count(s); ++i) s = stem + "~" + std::to_string(i);
    taken_.insert(s);
    return s;
  }

 private:
  std::unordered_set<Symbol> taken_;
};

inline std::set<Symbol> nullable_set(const std::set<Production>& prods) {
  std::set<Symbol> nullable;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : prods) {
      if (nullable.count(p.head)) continue;
      if (std::all_of(p.body.begin(), p.body.end(),
                      [&](const Symbol& s) { return nullable.count(s) != 0; })) {
        nullable.insert(p.head);
        changed = true;
      }
    }
  }
  return nullable;
}

/// Keep only productions over nonterminals that are both productive and
/// reachable from `start`. The start itself is always kept.
inline Grammar trim(const std::vector<Symbol>& terminals, const std::vector<Symbol>& nonterminals,
                    const Symbol& start, const std::set<Production>& prods) {
  std::unordered_set<Symbol> tset(terminals.begin(), terminals.end());
  std::unordered_set<Symbol> productive;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : prods) {
      if (productive.count(p.head)) continue;
      if (std::all_of(p.body.begin(), p.body.end(), [&](const Symbol& s) {
            return tset.count(s) != 0 || productive.count(s) != 0;
          })) {
        productive.insert(p.head);
        changed = true;
      }
    }
  }
  auto usable = [&](const Production& p) {
    return productive.count(p.head) &&
           std::all_of(p.body.begin(), p.body.end(), [&](const Symbol& s) {
             return tset.count(s) != 0 || productive.count(s) != 0;
           });
  };
  std::unordered_set<Symbol> reachable{start};
  std::vector<Symbol> work{start};
  std::unordered_map<Symbol, std::vector<const Production*>> by_head;
  for (const auto& p : prods) {
    if (usable(p)) by_head[p.head].push_back(&p);
  }
  while (!work.empty()) {
    Symbol a = work.back();
    work.pop_back();
    for (const auto* p : by_head[a]) {
      for (const auto& s : p->body) {
        if (!tset.count(s) && reachable.insert(s).second) work.push_back(s);
      }
    }
  }
  std::vector<Symbol> keep;
  for (const auto& n : nonterminals) {
    if (reachable.count(n)) keep.push_back(n);
  }
  std::vector<Production> out;
  for (const auto& p : prods) {
    if (reachable.count(p.head) && usable(p)) out.push_back(p);
  }
  return Grammar(terminals, keep, start, std::move(out));
}

}  // namespace detail

/// True iff every production is A -> B C, A -> a, or start -> ε with the
/// start never on a right-hand side.
inline bool is_cnf(const Grammar& g) {
  for (const auto& p : g.productions()) {
    if (p.body.empty()) {
      if (p.head != g.start()) return false;
    } else if (p.body.size() == 1) {
      if (!g.is_terminal(p.body[0])) return false;
    } else if (p.body.size() == 2) {
      for (const auto& s : p.body) {
        if (!g.is_nonterminal(s) || s == g.start()) return false;
      }
    } else {
      return false;
    }
  }
  return true;
}

/// Fresh start, TERM, BIN, nullable elimination, unit elimination, trim.
inline Grammar to_cnf(const Grammar& g) {
  detail::FreshNames fresh(g);
  std::vector<Symbol> nonterminals = g.nonterminals();
  const Symbol start = fresh.make(g.start() + "'");
  nonterminals.insert(nonterminals.begin(), start);

  // START
  std::set<Production> prods = g.productions();
  prods.insert(Production{start, {g.start()}});

  // TERM
  std::map<Symbol, Symbol> term_nt;
  auto term_for = [&](const Symbol& t) {
    auto it = term_nt.find(t);
    if (it != term_nt.end()) return it->second;
    Symbol n = fresh.make("T[" + t + "]");
    nonterminals.push_back(n);
    term_nt.emplace(t, n);
    return n;
  };
  {
    std::set<Production> next;
    for (auto p : prods) {
      if (p.body.size() >= 2) {
        for (auto& s : p.body) {
          if (g.is_terminal(s)) s = term_for(s);
        }
      }
      next.insert(std::move(p));
    }
    for (const auto& [t, n] : term_nt) next.insert(Production{n, {t}});
    prods = std::move(next);
  }

  // BIN: A -> X1 X2 ... Xn becomes a right-leaning chain. Chains are shared
  // between productions with the same suffix.
  {
    std::map<std::vector<Symbol>, Symbol> suffix_nt;
    std::set<Production> next;
    std::vector<Production> pending(prods.begin(), prods.end());
    while (!pending.empty()) {
      Production p = std::move(pending.back());
      pending.pop_back();
      if (p.body.size() <= 2) {
        next.insert(std::move(p));
        continue;
      }
      std::vector<Symbol> rest(p.body.begin() + 1, p.body.end());
      auto it = suffix_nt.find(rest);
      Symbol n;
      if (it == suffix_nt.end()) {
        n = fresh.make("C" + std::to_string(suffix_nt.size()));
        nonterminals.push_back(n);
        suffix_nt.emplace(rest, n);
        pending.push_back(Production{n, rest});
      } else {
        n = it->second;
      }
      next.insert(Production{p.head, {p.body[0], n}});
    }
    prods = std::move(next);
  }

  // DEL
  {
    const auto nullable = detail::nullable_set(prods);
    std::set<Production> next;
    for (const auto& p : prods) {
      if (p.body.empty()) continue;
      next.insert(p);
      if (p.body.size() == 2) {
        if (nullable.count(p.body[0])) next.insert(Production{p.head, {p.body[1]}});
        if (nullable.count(p.body[1])) next.insert(Production{p.head, {p.body[0]}});
      }
    }
    if (nullable.count(start)) next.insert(Production{start, {}});
    prods = std::move(next);
  }

  // UNIT
  {
    auto is_unit = [&](const Production& p) {
      return p.body.size() == 1 && !g.is_terminal(p.body[0]);
    };
    std::map<Symbol, std::set<Symbol>> unit_edges;
    std::map<Symbol, std::vector<const Production*>> proper;
    for (const auto& p : prods) {
      if (is_unit(p)) {
        unit_edges[p.head].insert(p.body[0]);
      } else {
        proper[p.head].push_back(&p);
      }
    }
    std::set<Production> next;
    for (const auto& a : nonterminals) {
      std::set<Symbol> closure{a};
      std::vector<Symbol> work{a};
      while (!work.empty()) {
        Symbol b = work.back();
        work.pop_back();
        for (const auto& c : unit_edges[b]) {
          if (closure.insert(c).second) work.push_back(c);
        }
      }
      for (const auto& b : closure) {
        for (const auto* p : proper[b]) {
          if (p->body.empty() && a != start) continue;
          next.insert(Production{a, p->body});
        }
      }
    }
    prods = std::move(next);
  }

  return detail::trim(g.terminals(), nonterminals, start, prods);
}

/// CYK recognizer over the CNF image of a grammar. Construction does the
/// conversion once; `accepts` is const and keeps its table local, so one
/// recognizer may be shared between threads.
class CykRecognizer {
 public:
  explicit CykRecognizer(const Grammar& g) : cnf_(to_cnf(g)) {
    for (std::size_t i = 0; i < cnf_.nonterminals().size(); ++i) {
      nt_index_.emplace(cnf_.nonterminals()[i], static_cast<int>(i));
    }
    for (std::size_t i = 0; i < g.terminals().size(); ++i) {
      t_index_.emplace(g.terminals()[i], static_cast<int>(i));
    }
    by_terminal_.resize(g.terminals().size());
    words_ = (cnf_.nonterminals().size() + 63) / 64;
    start_ = nt_index_.at(cnf_.start());
    for (const auto& p : cnf_.productions()) {
      const int head = nt_index_.at(p.head);
      if (p.body.empty()) {
        accepts_empty_ = true;
      } else if (p.body.size() == 1) {
        by_terminal_[static_cast<std::size_t>(t_index_.at(p.body[0]))].push_back(head);
      } else {
        binary_.push_back({head, nt_index_.at(p.body[0]), nt_index_.at(p.body[1])});
      }
    }
    std::sort(binary_.begin(), binary_.end(),
              [](const Binary& a, const Binary& b) { return a.left < b.left; });
  }

  const Grammar& cnf() const { return cnf_; }

  /// Terminal indices in the original grammar's declaration order.
  std::vector<int> encode(const Sentence& w) const {
    std::vector<int> out;
    out.reserve(w.size());
    for (const auto& s : w) {
      auto it = t_index_.find(s);
      if (it == t_index_.end()) throw GrammarError("symbol '" + s + "' is not a terminal");
      out.push_back(it->second);
    }
    return out;
  }

  bool accepts(const Sentence& w) const { return accepts_encoded(encode(w)); }

  bool accepts_encoded(const std::vector<int>& w) const {
    const std::size_t n = w.size();
    if (n == 0) return accepts_empty_;
    // cell(i, len) holds the nonterminals deriving w[i, i+len).
    std::vector<std::uint64_t> table(n * (n + 1) * words_, 0);
    auto cell = [&](std::size_t i, std::size_t len) {
      return table.data() + (i * (n + 1) + len) * words_;
    };
    auto test = [](const std::uint64_t* bits, int k) {
      return (bits[k >> 6] >> (k & 63)) & 1U;
    };
    auto set = [](std::uint64_t* bits, int k) { bits[k >> 6] |= std::uint64_t{1} << (k & 63); };
    for (std::size_t i = 0; i < n; ++i) {
      for (int a : by_terminal_[static_cast<std::size_t>(w[i])]) set(cell(i, 1), a);
    }
    for (std::size_t len = 2; len <= n; ++len) {
      for (std::size_t i = 0; i + len <= n; ++i) {
        std::uint64_t* out = cell(i, len);
        for (std::size_t split = 1; split < len; ++split) {
          const std::uint64_t* lhs = cell(i, split);
          const std::uint64_t* rhs = cell(i + split, len - split);
          for (const auto& r : binary_) {
            if (test(lhs, r.left) && test(rhs, r.right)) set(out, r.head);
          }
        }
      }
    }
    return test(cell(0, n), start_) != 0;
  }

 private:
  struct Binary {
    int head;
    int left;
    int right;
  };

  Grammar cnf_;
  std::unordered_map<Symbol, int> nt_index_;
  std::unordered_map<Symbol, int> t_index_;
  std::vector<std::vector<int>> by_terminal_;
  std::vector<Binary> binary_;
  std::size_t words_ = 1;
  int start_ = 0;
  bool accepts_empty_ = false;
};

inline bool cyk_member(const Grammar& g, const Sentence& w) { return CykRecognizer(g).accepts(w); }

}  // namespace fimcowp

#endif  // FIMCOWP_CNF_HPP
