#ifndef FIMCOWP_ORACLE_HPP
#define FIMCOWP_ORACLE_HPP

// Exhaustive universes of words and marked words, and the grammar-vs-oracle
// crosscheck. Semantic predicates passed to `crosscheck` are expected to
// come from munn.hpp; nothing here feeds the grammar back into them.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fimcowp/cnf.hpp"
#include "fimcowp/paper_grammars.hpp"
#include "fimcowp/words.hpp"

namespace fimcowp {

/// All words of length <= bound over rank k, shortlex order.
class WordStream {
 public:
  using value_type = Word;

  WordStream(int rank, std::size_t bound) : letters_(2 * rank), bound_(bound) {
    check_rank(rank);
  }

  std::optional<Word> next() {
    if (done_) return std::nullopt;
    Word w;
    w.reserve(digits_.size());
    for (int d : digits_) w.push_back(Letter::from_index(d));
    advance();
    return w;
  }

 private:
  void advance() {
    for (std::size_t i = digits_.size(); i > 0; --i) {
      if (++digits_[i - 1] < letters_) return;
      digits_[i - 1] = 0;
    }
    if (digits_.size() == bound_) {
      done_ = true;
      return;
    }
    digits_.assign(digits_.size() + 1, 0);
  }

  int letters_;
  std::size_t bound_;
  std::vector<int> digits_;
  bool done_ = false;
};

/// All u#t with |u| + |t| <= bound: by total length, then by the word u·t,
/// then by marker position.
class MarkedStream {
 public:
  using value_type = MarkedWord;

  MarkedStream(int rank, std::size_t bound) : words_(rank, bound) {}

  std::optional<MarkedWord> next() {
    if (!current_ || split_ > current_->size()) {
      current_ = words_.next();
      split_ = 0;
      if (!current_) return std::nullopt;
    }
    const auto& w = current_->letters();
    MarkedWord m{Word(std::vector<Letter>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split_))),
                 Word(std::vector<Letter>(w.begin() + static_cast<std::ptrdiff_t>(split_), w.end()))};
    ++split_;
    return m;
  }

 private:
  WordStream words_;
  std::optional<Word> current_;
  std::size_t split_ = 0;
};

inline WordStream enumerate_words(int rank, std::size_t bound) { return WordStream(rank, bound); }
inline MarkedStream enumerate_marked(int rank, std::size_t bound) {
  return MarkedStream(rank, bound);
}

/// (2k)^0 + ... + (2k)^n.
inline std::uint64_t word_count(int rank, std::size_t bound) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t l = 0; l <= bound; ++l, power *= static_cast<std::uint64_t>(2 * rank)) {
    total += power;
  }
  return total;
}

/// Σ_{L<=n} (L+1)(2k)^L.
inline std::uint64_t marked_count(int rank, std::size_t bound) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t l = 0; l <= bound; ++l, power *= static_cast<std::uint64_t>(2 * rank)) {
    total += (l + 1) * power;
  }
  return total;
}

struct CrosscheckReport {
  static constexpr std::size_t kStoredLimit = 100;

  std::uint64_t universe = 0;
  std::uint64_t agreements = 0;
  std::uint64_t false_accept_count = 0;
  std::uint64_t false_reject_count = 0;
  // Shortlex-smallest counterexamples, at most kStoredLimit of each kind.
  std::vector<std::string> false_accepts;
  std::vector<std::string> false_rejects;
  std::chrono::milliseconds elapsed{0};

  std::uint64_t disagreements() const { return false_accept_count + false_reject_count; }
  bool clean() const { return disagreements() == 0; }

  void record(bool grammar, bool oracle, const std::string& text) {
    ++universe;
    if (grammar == oracle) {
      ++agreements;
    } else if (grammar) {
      ++false_accept_count;
      keep(false_accepts, text);
    } else {
      ++false_reject_count;
      keep(false_rejects, text);
    }
  }

  void merge(const CrosscheckReport& other) {
    universe += other.universe;
    agreements += other.agreements;
    false_accept_count += other.false_accept_count;
    false_reject_count += other.false_reject_count;
    for (const auto& s : other.false_accepts) keep(false_accepts, s);
    for (const auto& s : other.false_rejects) keep(false_rejects, s);
  }

  nlohmann::json to_json() const {
    return {{"universe", universe},
            {"agreements", agreements},
            {"false_accepts", false_accepts},
            {"false_rejects", false_rejects},
            {"false_accepts_total", false_accept_count},
            {"false_rejects_total", false_reject_count},
            {"elapsed_ms", elapsed.count()}};
  }

 private:
  static void keep(std::vector<std::string>& list, const std::string& s) {
    auto pos = std::lower_bound(list.begin(), list.end(), s,
                                [](const std::string& a, const std::string& b) {
                                  return shortlex_less(a, b);
                                });
    if (pos != list.end() && *pos == s) return;
    if (list.size() == kStoredLimit) {
      if (pos == list.end()) return;
      list.pop_back();
    }
    list.insert(pos, s);
  }
};

/// Runs the recognizer and the predicate on every element of the universe.
/// With jobs > 1, chunks of the stream are split across threads; the
/// report does not depend on the job count except for `elapsed`.
template <typename Stream, typename Predicate>
CrosscheckReport crosscheck(const CykRecognizer& recognizer, Predicate predicate, Stream universe,
                            unsigned jobs = 1) {
  using Item = typename Stream::value_type;
  const auto t0 = std::chrono::steady_clock::now();
  auto run = [&](const std::vector<Item>& items, std::size_t lo, std::size_t hi) {
    CrosscheckReport r;
    for (std::size_t i = lo; i < hi; ++i) {
      const bool grammar = recognizer.accepts(to_sentence(items[i]));
      const bool oracle = predicate(items[i]);
      r.record(grammar, oracle, to_string(items[i]));
    }
    return r;
  };

  CrosscheckReport total;
  jobs = std::max(1U, jobs);
  const std::size_t chunk = jobs == 1 ? 4096 : 4096 * jobs;
  std::vector<Item> items;
  for (bool more = true; more;) {
    items.clear();
    while (items.size() < chunk) {
      auto next = universe.next();
      if (!next) {
        more = false;
        break;
      }
      items.push_back(std::move(*next));
    }
    if (jobs == 1) {
      total.merge(run(items, 0, items.size()));
      continue;
    }
    std::vector<CrosscheckReport> parts(jobs);
    std::vector<std::thread> threads;
    const std::size_t per = (items.size() + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      const std::size_t lo = std::min(items.size(), j * per);
      const std::size_t hi = std::min(items.size(), lo + per);
      threads.emplace_back([&, j, lo, hi] { parts[j] = run(items, lo, hi); });
    }
    for (auto& t : threads) t.join();
    for (const auto& p : parts) total.merge(p);
  }
  total.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  return total;
}

template <typename Stream, typename Predicate>
CrosscheckReport crosscheck(const Grammar& g, Predicate predicate, Stream universe,
                            unsigned jobs = 1) {
  return crosscheck(CykRecognizer(g), std::move(predicate), std::move(universe), jobs);
}

}  // namespace fimcowp

#endif  // FIMCOWP_ORACLE_HPP
