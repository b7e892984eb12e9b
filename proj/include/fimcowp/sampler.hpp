#ifndef FIMCOWP_SAMPLER_HPP
#define FIMCOWP_SAMPLER_HPP

// Structured generator for K_{m,n}: marked words u#v̄ with
//
//   u = e1 x1 ... em xm  p0 x p1 x̄ p2  y1 f1 ... yn fn
//   v = e1' x1 ... em' xm     q        y1 f1' ... yn fn'
//
// where x1..xm and y1..yn are reduced, xm ≠ x̄, y1 ≠ x, the e, p, f are
// idempotents, ei' avoids xi, fi' avoids ȳi and q avoids x.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "fimcowp/munn.hpp"
#include "fimcowp/oracle.hpp"
#include "fimcowp/words.hpp"

namespace fimcowp {

struct KmnFactors {
  std::vector<Letter> prefix;  // x1..xm
  Letter pivot;                // x
  std::vector<Letter> suffix;  // y1..yn
  std::vector<Word> e, e_avoid;  // size m each
  Word p0, p1, p2;
  Word q;
  std::vector<Word> f, f_avoid;  // size n each
};

/// Checks the letter side conditions and assembles u#v̄.
inline MarkedWord assemble_kmn(const KmnFactors& k) {
  const std::size_t m = k.prefix.size();
  const std::size_t n = k.suffix.size();
  if (k.e.size() != m || k.e_avoid.size() != m || k.f.size() != n || k.f_avoid.size() != n) {
    throw std::invalid_argument("K(m,n) factor counts do not match m and n");
  }
  if (!is_reduced(Word(k.prefix)) || !is_reduced(Word(k.suffix))) {
    throw std::invalid_argument("K(m,n) letter sequences must be reduced");
  }
  if (m > 0 && k.prefix.back() == invert(k.pivot)) {
    throw std::invalid_argument("last prefix letter must differ from the inverse pivot");
  }
  if (n > 0 && k.suffix.front() == k.pivot) {
    throw std::invalid_argument("first suffix letter must differ from the pivot");
  }
  Word u, v;
  for (std::size_t i = 0; i < m; ++i) {
    u += k.e[i];
    u += k.prefix[i];
    v += k.e_avoid[i];
    v += k.prefix[i];
  }
  u += k.p0;
  u += k.pivot;
  u += k.p1;
  u += invert(k.pivot);
  u += k.p2;
  v += k.q;
  for (std::size_t i = 0; i < n; ++i) {
    u += k.suffix[i];
    u += k.f[i];
    v += k.suffix[i];
    v += k.f_avoid[i];
  }
  return MarkedWord{std::move(u), rev_invert(v)};
}

/// Draws idempotent factors uniformly from all qualifying words of length
/// <= 2·cap, found by exhaustive enumeration and the Munn-tree predicates.
class KmnSampler {
 public:
  explicit KmnSampler(int rank, std::size_t cap = 2)
      : rank_(rank), avoiding_(static_cast<std::size_t>(2 * rank)) {
    check_rank(rank);
    auto words = enumerate_words(rank, 2 * cap);
    while (auto w = words.next()) {
      if (!is_idempotent(*w)) continue;
      idempotents_.push_back(*w);
      for (Letter x : alphabet(rank)) {
        if (avoids(*w, x)) avoiding_[static_cast<std::size_t>(x.index())].push_back(*w);
      }
    }
  }

  int rank() const { return rank_; }
  const std::vector<Word>& idempotents() const { return idempotents_; }
  const std::vector<Word>& avoiding(Letter x) const {
    return avoiding_[static_cast<std::size_t>(x.index())];
  }

  KmnFactors draw(int m, int n, std::uint64_t seed) const {
    if (m < 0 || n < 0) throw std::invalid_argument("m and n must be non-negative");
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t size) { return static_cast<std::size_t>(rng() % size); };
    const auto letters = alphabet(rank_);
    auto letter_except = [&](std::optional<Letter> forbid) {
      std::vector<Letter> ok;
      for (Letter l : letters) {
        if (l != forbid) ok.push_back(l);
      }
      return ok[pick(ok.size())];
    };
    auto idem = [&] { return idempotents_[pick(idempotents_.size())]; };
    auto avoid = [&](Letter x) {
      const auto& pool = avoiding(x);
      return pool[pick(pool.size())];
    };

    KmnFactors k;
    for (int i = 0; i < m; ++i) {
      std::optional<Letter> back;
      if (i > 0) back = invert(k.prefix.back());
      k.prefix.push_back(letter_except(back));
    }
    // Pivot x must satisfy xm ≠ x̄, i.e. x ≠ x̄m.
    std::optional<Letter> not_pivot;
    if (m > 0) not_pivot = invert(k.prefix.back());
    k.pivot = letter_except(not_pivot);
    for (int i = 0; i < n; ++i) {
      if (i == 0) {
        k.suffix.push_back(letter_except(k.pivot));
      } else {
        k.suffix.push_back(letter_except(invert(k.suffix.back())));
      }
    }
    for (int i = 0; i < m; ++i) {
      k.e.push_back(idem());
      k.e_avoid.push_back(avoid(k.prefix[static_cast<std::size_t>(i)]));
    }
    k.p0 = idem();
    k.p1 = idem();
    k.p2 = idem();
    k.q = avoid(k.pivot);
    for (int i = 0; i < n; ++i) {
      k.f.push_back(idem());
      k.f_avoid.push_back(avoid(invert(k.suffix[static_cast<std::size_t>(i)])));
    }
    return k;
  }

  MarkedWord sample(int m, int n, std::uint64_t seed) const { return assemble_kmn(draw(m, n, seed)); }

 private:
  int rank_;
  std::vector<Word> idempotents_;
  std::vector<std::vector<Word>> avoiding_;
};

inline MarkedWord sample_kmn(int rank, int m, int n, std::uint64_t seed, std::size_t cap = 2) {
  return KmnSampler(rank, cap).sample(m, n, seed);
}

}  // namespace fimcowp

#endif  // FIMCOWP_SAMPLER_HPP
