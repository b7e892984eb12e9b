#ifndef FIMCOWP_PAPER_GRAMMARS_HPP
#define FIMCOWP_PAPER_GRAMMARS_HPP

// Grammars over X^± (and '#') for the idempotents of FIM(X), the
// idempotents avoiding a letter, the K1 grammar and its mirror K2, the
// co-word problem of the free group, and their union: the co-word problem
// of FIM(X).
//
// Terminals are one-character letter names ("a", "A", ..., "#"). Nonterminal
// names: S, E, P(x), Q(x), Z(x); the free-group part uses N and R(x).

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fimcowp/derivation.hpp"
#include "fimcowp/grammar.hpp"
#include "fimcowp/words.hpp"

namespace fimcowp {

inline const Symbol kMarkerSymbol{kMarker};

inline Symbol letter_symbol(Letter l) { return Symbol(1, l.to_char()); }

inline Sentence to_sentence(const Word& w) {
  Sentence s;
  s.reserve(w.size());
  for (Letter l : w) s.push_back(letter_symbol(l));
  return s;
}

inline Sentence to_sentence(const MarkedWord& m) {
  Sentence s = to_sentence(m.left);
  s.push_back(kMarkerSymbol);
  for (Letter l : m.right) s.push_back(letter_symbol(l));
  return s;
}

/// Concatenated symbol names; inverse of to_sentence for letter grammars.
inline std::string sentence_text(const Sentence& s) {
  std::string out;
  for (const auto& sym : s) out += sym;
  return out;
}

inline Sentence parse_sentence(std::string_view text, int rank) {
  check_rank(rank);
  Sentence s;
  for (char c : text) {
    if (c == kMarker) {
      s.push_back(kMarkerSymbol);
    } else {
      s.push_back(letter_symbol(parse_letter(c, rank)));
    }
  }
  return s;
}

/// The involution x <-> x̄ on letter terminals; '#' is fixed.
inline std::map<Symbol, Symbol> letter_involution(int rank) {
  std::map<Symbol, Symbol> inv;
  for (Letter l : alphabet(rank)) inv.emplace(letter_symbol(l), letter_symbol(invert(l)));
  return inv;
}

namespace detail {

inline Symbol indexed(const char* stem, Letter l) {
  return std::string(stem) + "(" + l.to_char() + ")";
}

inline void declare_letters(GrammarBuilder& b, int rank) {
  for (Letter l : alphabet(rank)) b.terminal(letter_symbol(l));
}

/// E -> EE | xEx̄ | ε.
inline void add_idempotent_rules(GrammarBuilder& b, int rank) {
  b.nonterminal("E");
  b.rule("E", {"E", "E"});
  for (Letter x : alphabet(rank)) b.rule("E", {letter_symbol(x), "E", letter_symbol(invert(x))});
  b.rule("E", {});
}

/// Z_a -> Z_a Z_a | y Z_ȳ ȳ (y ≠ a) | ε, for every letter a.
inline void add_avoiding_rules(GrammarBuilder& b, int rank) {
  const auto letters = alphabet(rank);
  for (Letter a : letters) b.nonterminal(indexed("Z", a));
  for (Letter a : letters) {
    const Symbol za = indexed("Z", a);
    b.rule(za, {za, za});
    for (Letter y : letters) {
      if (y == a) continue;
      b.rule(za, {letter_symbol(y), indexed("Z", invert(y)), letter_symbol(invert(y))});
    }
    b.rule(za, {});
  }
}

}  // namespace detail

inline Grammar idempotent_grammar(int rank) {
  check_rank(rank);
  GrammarBuilder b;
  detail::declare_letters(b, rank);
  b.start("E");
  detail::add_idempotent_rules(b, rank);
  return b.build();
}

/// The Z-family over all letters, started at Z(x).
inline Grammar avoiding_grammar(int rank, Letter x) {
  check_rank(rank);
  if (x.generator >= rank) throw std::invalid_argument("letter out of range for rank");
  GrammarBuilder b;
  detail::declare_letters(b, rank);
  detail::add_avoiding_rules(b, rank);
  b.start(detail::indexed("Z", x));
  return b.build();
}

/// K1 = { u#v̄ : u =_FG v, T_u has an edge T_v lacks }.
inline Grammar k1_grammar(int rank) {
  check_rank(rank);
  using detail::indexed;
  const auto letters = alphabet(rank);
  GrammarBuilder b;
  detail::declare_letters(b, rank);
  b.terminal(kMarkerSymbol);
  b.start("S");
  b.nonterminal("E");
  for (Letter x : letters) b.nonterminal(indexed("P", x));
  for (Letter x : letters) b.nonterminal(indexed("Q", x));
  for (Letter x : letters) b.nonterminal(indexed("Z", x));

  for (Letter x : letters) b.rule("S", {indexed("P", x)});
  for (Letter x : letters) {
    const Symbol sx = letter_symbol(x);
    const Symbol sxbar = letter_symbol(invert(x));
    for (Letter y : letters) {
      if (y == invert(x)) continue;
      b.rule(indexed("P", x), {"E", sx, indexed("P", y), sxbar, indexed("Z", x)});
    }
    for (Letter y : letters) {
      if (y == x) continue;
      b.rule(indexed("P", x), {"E", sx, "E", sxbar, "E", indexed("Q", y), indexed("Z", x)});
    }
  }
  for (Letter x : letters) {
    const Symbol sx = letter_symbol(x);
    const Symbol sxbar = letter_symbol(invert(x));
    for (Letter y : letters) {
      if (y == invert(x)) continue;
      b.rule(indexed("Q", x), {sx, "E", indexed("Q", y), indexed("Z", invert(x)), sxbar});
    }
    b.rule(indexed("Q", x), {kMarkerSymbol});
  }
  detail::add_idempotent_rules(b, rank);
  detail::add_avoiding_rules(b, rank);
  return b.build();
}

/// K2 = { u#v̄ : u =_FG v, T_v has an edge T_u lacks }: the reverse-inverse
/// image of K1.
inline Grammar k2_grammar(int rank) {
  return reverse_invert_grammar(k1_grammar(rank), letter_involution(rank));
}

/// Words over X^± that are nontrivial in the free group:
/// N -> E x R(x);  R(x) -> E | E y R(y) for y ≠ x̄.
inline Grammar nontrivial_grammar(int rank) {
  check_rank(rank);
  using detail::indexed;
  const auto letters = alphabet(rank);
  GrammarBuilder b;
  detail::declare_letters(b, rank);
  b.start("N");
  detail::add_idempotent_rules(b, rank);
  for (Letter x : letters) b.nonterminal(indexed("R", x));
  for (Letter x : letters) b.rule("N", {"E", letter_symbol(x), indexed("R", x)});
  for (Letter x : letters) {
    b.rule(indexed("R", x), {"E"});
    for (Letter y : letters) {
      if (y == invert(x)) continue;
      b.rule(indexed("R", x), {"E", letter_symbol(y), indexed("R", y)});
    }
  }
  return b.build();
}

/// { u#t : u·t ≠ 1 in FG(X) }.
inline Grammar cowp_fg_grammar(int rank) {
  return insert_marker_grammar(nontrivial_grammar(rank), kMarkerSymbol);
}

inline Grammar cowp_fim_grammar(int rank) {
  return union_grammar({k1_grammar(rank), k2_grammar(rank), cowp_fg_grammar(rank)},
                       {"K1", "K2", "FG"});
}

/// Counts (m, n) when the derivation has the K1 shape: S -> P, m uses of the
/// recursive P production, one terminal P production, n recursive Q
/// productions, then Q -> #. Other nodes (E, Z) are not inspected.
inline std::optional<std::pair<int, int>> k1_derivation_shape(const DerivationTree& t) {
  auto starts_with = [](const Symbol& s, char c) { return !s.empty() && s[0] == c; };
  if (t.terminal || t.symbol != "S" || t.children.size() != 1) return std::nullopt;
  const DerivationTree* node = &t.children[0];
  int m = 0;
  while (!node->terminal && starts_with(node->symbol, 'P') && node->children.size() == 5) {
    ++m;
    node = &node->children[2];
  }
  if (node->terminal || !starts_with(node->symbol, 'P') || node->children.size() != 7) {
    return std::nullopt;
  }
  node = &node->children[5];
  int n = 0;
  while (!node->terminal && starts_with(node->symbol, 'Q') && node->children.size() == 5) {
    ++n;
    node = &node->children[2];
  }
  if (node->terminal || !starts_with(node->symbol, 'Q') || node->children.size() != 1 ||
      node->children[0].symbol != kMarkerSymbol) {
    return std::nullopt;
  }
  return std::make_pair(m, n);
}

/// Grammar names accepted on the command line: E, Zx:<letter>, K1, K2,
/// coWP-FG, coWP-FIM.
inline Grammar named_grammar(std::string_view which, int rank) {
  check_rank(rank);
  if (which == "E") return idempotent_grammar(rank);
  if (which == "K1") return k1_grammar(rank);
  if (which == "K2") return k2_grammar(rank);
  if (which == "coWP-FG") return cowp_fg_grammar(rank);
  if (which == "coWP-FIM") return cowp_fim_grammar(rank);
  constexpr std::string_view zx = "Zx:";
  if (which.substr(0, zx.size()) == zx && which.size() == zx.size() + 1) {
    return avoiding_grammar(rank, parse_letter(which.back(), rank));
  }
  throw std::invalid_argument("unknown grammar '" + std::string(which) + "'");
}

/// True for grammars whose words carry the '#' marker.
inline bool is_marked_grammar(std::string_view which) {
  return which == "K1" || which == "K2" || which == "coWP-FG" || which == "coWP-FIM";
}

}  // namespace fimcowp

#endif  // FIMCOWP_PAPER_GRAMMARS_HPP
