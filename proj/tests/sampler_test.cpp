#include <gtest/gtest.h>

#include "fimcowp/cnf.hpp"
#include "fimcowp/derivation.hpp"
#include "fimcowp/munn.hpp"
#include "fimcowp/paper_grammars.hpp"
#include "fimcowp/sampler.hpp"

namespace fimcowp {
namespace {

TEST(Kmn, AssembleWithEmptyIdempotents) {
  KmnFactors k;
  k.pivot = Letter(0, false);
  EXPECT_EQ(assemble_kmn(k).str(), "aA#");
}

TEST(Kmn, AssembleRejectsBadSideConditions) {
  KmnFactors k;
  k.pivot = Letter(0, false);
  k.prefix = {Letter(0, true)};  // xm = x̄
  k.e = {Word{}};
  k.e_avoid = {Word{}};
  EXPECT_THROW(assemble_kmn(k), std::invalid_argument);

  KmnFactors s;
  s.pivot = Letter(0, false);
  s.suffix = {Letter(0, false)};  // y1 = x
  s.f = {Word{}};
  s.f_avoid = {Word{}};
  EXPECT_THROW(assemble_kmn(s), std::invalid_argument);

  KmnFactors r;
  r.pivot = Letter(0, false);
  r.prefix = {Letter(1, false), Letter(1, true)};  // not reduced
  r.e = {Word{}, Word{}};
  r.e_avoid = {Word{}, Word{}};
  EXPECT_THROW(assemble_kmn(r), std::invalid_argument);

  KmnFactors c;
  c.pivot = Letter(0, false);
  c.prefix = {Letter(1, false)};
  EXPECT_THROW(assemble_kmn(c), std::invalid_argument);
}

TEST(Kmn, HandBuiltOneOneExample) {
  // u = b · aA · a ... : m = 1 (x1 = b), x = a, n = 1 (y1 = b).
  KmnFactors k;
  k.prefix = {Letter(1, false)};
  k.pivot = Letter(0, false);
  k.suffix = {Letter(1, false)};
  k.e = {parse_word("aA", 2)};
  k.e_avoid = {parse_word("Bb", 2)};
  k.q = parse_word("AaBb", 2);
  k.f = {Word{}};
  k.f_avoid = {parse_word("bB", 2)};
  const auto m = assemble_kmn(k);
  EXPECT_EQ(m.left.str(), "aAbaAb");
  EXPECT_EQ(m.v().str(), "BbbAaBbbbB");
  EXPECT_TRUE(in_K1(m.left, m.v()));
  const auto t = derive(k1_grammar(2), to_sentence(m));
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(k1_derivation_shape(*t).has_value());
}

TEST(Kmn, PoolsMatchTheirPredicates) {
  const KmnSampler s(2);
  EXPECT_FALSE(s.idempotents().empty());
  for (const auto& w : s.idempotents()) {
    EXPECT_TRUE(is_idempotent(w));
    EXPECT_LE(w.size(), 4U);
  }
  for (Letter x : alphabet(2)) {
    for (const auto& w : s.avoiding(x)) EXPECT_TRUE(is_idempotent(w) && avoids(w, x));
    EXPECT_LT(s.avoiding(x).size(), s.idempotents().size());
  }
}

TEST(Kmn, SamplesAreDeterministicAndInK1) {
  for (int rank : {1, 2}) {
    const KmnSampler s(rank);
    const CykRecognizer k1(k1_grammar(rank));
    for (int m = 0; m <= 2; ++m) {
      for (int n = 0; n <= 2; ++n) {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
          const auto x = s.sample(m, n, seed);
          EXPECT_EQ(x, s.sample(m, n, seed));
          EXPECT_EQ(x, sample_kmn(rank, m, n, seed));
          EXPECT_TRUE(in_K1(x.left, x.v())) << x.str();
          EXPECT_TRUE(k1.accepts(to_sentence(x))) << x.str();
        }
      }
    }
  }
}

TEST(Kmn, InvalidCounts) {
  EXPECT_THROW(sample_kmn(1, -1, 0, 0), std::invalid_argument);
  EXPECT_THROW(sample_kmn(1, 0, -2, 0), std::invalid_argument);
  EXPECT_THROW(sample_kmn(0, 0, 0, 0), std::invalid_argument);
}

}  // namespace
}  // namespace fimcowp
