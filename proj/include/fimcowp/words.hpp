#ifndef FIMCOWP_WORDS_HPP
#define FIMCOWP_WORDS_HPP

// Letters over a symmetric alphabet X ∪ X̄, words, free reduction and
// the u#t marked-word format.
//
// Text syntax: generator i is the lowercase letter 'a'+i, its formal
// inverse is the matching uppercase letter. The empty word is "".

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fimcowp {

inline constexpr int kMaxRank = 26;
inline constexpr char kMarker = '#';

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Letter {
  std::uint8_t generator = 0;
  bool inverted = false;

  constexpr Letter() = default;
  constexpr Letter(std::uint8_t gen, bool inv) : generator(gen), inverted(inv) {}

  /// Position in the alphabet order a < A < b < B < ...
  constexpr int index() const { return 2 * generator + (inverted ? 1 : 0); }
  static constexpr Letter from_index(int idx) {
    return Letter(static_cast<std::uint8_t>(idx / 2), (idx % 2) != 0);
  }

  constexpr char to_char() const {
    return static_cast<char>((inverted ? 'A' : 'a') + generator);
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter lhs, Letter rhs) {
    return lhs.index() <=> rhs.index();
  }
};

constexpr Letter invert(Letter l) { return Letter(l.generator, !l.inverted); }

/// All 2k letters of rank k, in alphabet order.
inline std::vector<Letter> alphabet(int rank) {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(2 * rank));
  for (int i = 0; i < 2 * rank; ++i) out.push_back(Letter::from_index(i));
  return out;
}

inline void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw std::invalid_argument("rank must be in 1.." + std::to_string(kMaxRank) +
                                ", got " + std::to_string(rank));
  }
}

inline Letter parse_letter(char c, int rank) {
  int gen = -1;
  bool inv = false;
  if (c >= 'a' && c <= 'z') {
    gen = c - 'a';
  } else if (c >= 'A' && c <= 'Z') {
    gen = c - 'A';
    inv = true;
  }
  if (gen < 0) {
    throw ParseError(std::string("invalid symbol '") + c + "' in word");
  }
  if (gen >= rank) {
    throw ParseError(std::string("generator '") + c + "' out of range for rank " +
                     std::to_string(rank));
  }
  return Letter(static_cast<std::uint8_t>(gen), inv);
}

/// A finite sequence of letters. Ordered shortlex (length, then letterwise).
class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> ls) : letters_(ls) {}
  explicit Word(std::vector<Letter> ls) : letters_(std::move(ls)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& back() const { return letters_.back(); }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }
  void pop_back() { letters_.pop_back(); }
  void reserve(std::size_t n) { letters_.reserve(n); }

  Word& operator+=(const Word& rhs) {
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
  }
  Word& operator+=(Letter l) {
    letters_.push_back(l);
    return *this;
  }
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
  friend Word operator+(Word lhs, Letter rhs) { return lhs += rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
    if (auto c = lhs.size() <=> rhs.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(lhs.begin(), lhs.end(), rhs.begin(),
                                                  rhs.end());
  }

  std::string str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_) s.push_back(l.to_char());
    return s;
  }

 private:
  std::vector<Letter> letters_;
};

inline std::string to_string(const Word& w) { return w.str(); }

/// Stack pass: push each letter, cancel against the top when inverse.
inline Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == invert(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

inline bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == invert(w[i - 1])) return false;
  }
  return true;
}

/// Reverse and invert every letter: the string form of w⁻¹.
inline Word rev_invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(invert(*it));
  }
  return Word(std::move(out));
}

inline Word parse_word(std::string_view s, int rank) {
  check_rank(rank);
  Word w;
  w.reserve(s.size());
  for (char c : s) {
    if (c == kMarker) throw ParseError("unexpected '#' in plain word");
    w.push_back(parse_letter(c, rank));
  }
  return w;
}

/// u#t, where t is read as v̄ = v⁻¹ spelled out.
struct MarkedWord {
  Word left;
  Word right;

  /// The word v with t = rev_invert(v).
  Word v() const { return rev_invert(right); }
  std::size_t size() const { return left.size() + right.size(); }

  std::string str() const { return left.str() + kMarker + right.str(); }

  friend bool operator==(const MarkedWord&, const MarkedWord&) = default;
};

inline std::string to_string(const MarkedWord& m) { return m.str(); }

inline MarkedWord parse_marked(std::string_view s, int rank) {
  const auto first = s.find(kMarker);
  if (first == std::string_view::npos) {
    throw ParseError("marked word needs exactly one '#', found none");
  }
  if (s.find(kMarker, first + 1) != std::string_view::npos) {
    throw ParseError("marked word needs exactly one '#', found several");
  }
  return MarkedWord{parse_word(s.substr(0, first), rank), parse_word(s.substr(first + 1), rank)};
}

/// Shortlex comparison on the text forms, using the alphabet order
/// a < A < b < B < ... and placing '#' after every letter.
inline bool shortlex_less(std::string_view lhs, std::string_view rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  auto key = [](char c) {
    if (c >= 'a' && c <= 'z') return 2 * (c - 'a');
    if (c >= 'A' && c <= 'Z') return 2 * (c - 'A') + 1;
    if (c == kMarker) return 1000;
    return 2000 + static_cast<unsigned char>(c);
  };
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] != rhs[i]) return key(lhs[i]) < key(rhs[i]);
  }
  return false;
}

}  // namespace fimcowp

#endif  // FIMCOWP_WORDS_HPP
