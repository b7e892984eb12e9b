#include <gtest/gtest.h>

#include "fimcowp/cnf.hpp"
#include "fimcowp/munn.hpp"
#include "fimcowp/oracle.hpp"
#include "fimcowp/paper_grammars.hpp"

namespace fimcowp {
namespace {

bool member(const Grammar& g, const char* text, int rank) {
  return cyk_member(g, parse_sentence(text, rank));
}

TEST(PaperGrammars, Idempotent) {
  EXPECT_EQ(idempotent_grammar(1).productions().size(), 4U);
  EXPECT_TRUE(member(idempotent_grammar(2), "aAbB", 2));
  EXPECT_FALSE(member(idempotent_grammar(2), "ab", 2));
  EXPECT_THROW(idempotent_grammar(0), std::invalid_argument);
}

TEST(PaperGrammars, Avoiding) {
  const Letter a(0, false);
  EXPECT_EQ(avoiding_grammar(1, a).start(), "Z(a)");
  EXPECT_TRUE(member(avoiding_grammar(1, a), "Aa", 1));
  EXPECT_FALSE(member(avoiding_grammar(1, a), "aA", 1));
  EXPECT_TRUE(member(avoiding_grammar(2, a), "bB", 2));
  EXPECT_THROW(avoiding_grammar(0, a), std::invalid_argument);
  EXPECT_THROW(avoiding_grammar(1, Letter(1, false)), std::invalid_argument);
}

TEST(PaperGrammars, K1) {
  const auto g = k1_grammar(1);
  EXPECT_EQ(grammar_stats(g), (GrammarStats{8, 20}));
  EXPECT_TRUE(member(g, "aA#", 1));
  EXPECT_FALSE(member(g, "a#A", 1));
  EXPECT_THROW(k1_grammar(0), std::invalid_argument);
  EXPECT_EQ(grammar_stats(k1_grammar(2)).nonterminals, 14U);
}

TEST(PaperGrammars, K1ProductionCountByRank) {
  // S: 2k; P: 2k(2k-1) twice; Q: 2k(2k-1) + 2k; E: 2k+2; Z: 2k(2k+1).
  for (int k = 1; k <= 3; ++k) {
    const std::size_t l = static_cast<std::size_t>(2 * k);
    const std::size_t expected = l + 2 * l * (l - 1) + l * (l - 1) + l + (l + 2) + l * (l + 1);
    EXPECT_EQ(grammar_stats(k1_grammar(k)).productions, expected) << k;
  }
}

TEST(PaperGrammars, K2) {
  const auto g = k2_grammar(1);
  EXPECT_TRUE(member(g, "#aA", 1));
  EXPECT_FALSE(member(g, "aA#", 1));
  EXPECT_FALSE(member(g, "a#A", 1));
  EXPECT_EQ(grammar_stats(g), grammar_stats(k1_grammar(1)));
}

TEST(PaperGrammars, CowpFreeGroup) {
  EXPECT_TRUE(member(cowp_fg_grammar(1), "a#", 1));
  EXPECT_FALSE(member(cowp_fg_grammar(1), "a#A", 1));
  EXPECT_TRUE(member(cowp_fg_grammar(2), "ab#A", 2));
  EXPECT_FALSE(member(cowp_fg_grammar(1), "#", 1));
  EXPECT_FALSE(member(cowp_fg_grammar(1), "aA#", 1));
}

TEST(PaperGrammars, CowpFim) {
  EXPECT_TRUE(member(cowp_fim_grammar(1), "aA#", 1));
  EXPECT_FALSE(member(cowp_fim_grammar(1), "aAa#A", 1));
  EXPECT_TRUE(member(cowp_fim_grammar(2), "a#B", 2));
  EXPECT_FALSE(member(cowp_fim_grammar(2), "#", 2));
}

TEST(PaperGrammars, NamedGrammar) {
  EXPECT_EQ(named_grammar("E", 1).start(), "E");
  EXPECT_EQ(named_grammar("Zx:A", 1).start(), "Z(A)");
  EXPECT_EQ(named_grammar("K1", 2).start(), "S");
  EXPECT_THROW(named_grammar("Zx:c", 2), std::invalid_argument);
  EXPECT_THROW(named_grammar("Zx:", 2), std::invalid_argument);
  EXPECT_THROW(named_grammar("K3", 2), std::invalid_argument);
}

TEST(PaperGrammars, NontrivialGrammarMatchesReduction) {
  for (int rank : {1, 2}) {
    const auto rec = CykRecognizer(nontrivial_grammar(rank));
    auto words = enumerate_words(rank, rank == 1 ? 10 : 6);
    while (auto w = words.next()) {
      ASSERT_EQ(rec.accepts(to_sentence(*w)), !free_reduce(*w).empty()) << w->str();
    }
  }
}

// Reduced-bound versions of the acceptance crosschecks.
TEST(PaperGrammars, LemmaOneCrosscheckSmall) {
  EXPECT_TRUE(crosscheck(idempotent_grammar(2), is_idempotent, enumerate_words(2, 6)).clean());
  for (Letter x : alphabet(2)) {
    const auto report = crosscheck(
        avoiding_grammar(2, x), [x](const Word& w) { return is_idempotent(w) && avoids(w, x); },
        enumerate_words(2, 6));
    EXPECT_TRUE(report.clean()) << x.to_char();
  }
}

TEST(PaperGrammars, K1K2CowpCrosscheckSmall) {
  for (int rank : {1, 2}) {
    const std::size_t n = rank == 1 ? 5 : 4;
    EXPECT_TRUE(crosscheck(k1_grammar(rank),
                           [](const MarkedWord& m) { return in_K1(m.left, m.v()); },
                           enumerate_marked(rank, n))
                    .clean());
    EXPECT_TRUE(crosscheck(k2_grammar(rank),
                           [](const MarkedWord& m) { return in_K2(m.left, m.v()); },
                           enumerate_marked(rank, n))
                    .clean());
    EXPECT_TRUE(crosscheck(cowp_fg_grammar(rank), in_cowp_fg, enumerate_marked(rank, n)).clean());
    EXPECT_TRUE(crosscheck(cowp_fim_grammar(rank), in_cowp, enumerate_marked(rank, n)).clean());
  }
}

}  // namespace
}  // namespace fimcowp

namespace fimcowp {
namespace {

// K1 with the Q-recursion condition read as y ≠ x instead of y ≠ x̄.
Grammar k1_with_literal_display_condition(int rank) {
  const auto g = k1_grammar(rank);
  std::vector<Production> prods;
  for (const auto& p : g.productions()) {
    if (p.head[0] == 'Q' && p.body.size() == 5) continue;
    prods.push_back(p);
  }
  auto q = [](Letter l) { return "Q(" + std::string(1, l.to_char()) + ")"; };
  auto z = [](Letter l) { return "Z(" + std::string(1, l.to_char()) + ")"; };
  for (Letter x : alphabet(rank)) {
    for (Letter y : alphabet(rank)) {
      if (y == x) continue;
      prods.push_back({q(x), {letter_symbol(x), "E", q(y), z(invert(x)), letter_symbol(invert(x))}});
    }
  }
  return Grammar(g.terminals(), g.nonterminals(), g.start(), prods);
}

TEST(PaperGrammars, QSideConditionAdjudicatedByOracle) {
  auto pred = [](const MarkedWord& m) { return in_K1(m.left, m.v()); };
  const auto literal = crosscheck(k1_with_literal_display_condition(1), pred, enumerate_marked(1, 6));
  EXPECT_FALSE(literal.clean());
  EXPECT_NE(std::find(literal.false_rejects.begin(), literal.false_rejects.end(), "aAAA#aa"),
            literal.false_rejects.end());
  EXPECT_TRUE(crosscheck(k1_grammar(1), pred, enumerate_marked(1, 6)).clean());
  EXPECT_TRUE(cyk_member(k1_grammar(1), parse_sentence("aAAA#aa", 1)));
}

}  // namespace
}  // namespace fimcowp
