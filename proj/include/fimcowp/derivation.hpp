#ifndef FIMCOWP_DERIVATION_HPP
#define FIMCOWP_DERIVATION_HPP

// Derivation trees in the original (un-normalized) grammar.
//
// A chart over spans records, for each nonterminal A and span [i, j),
// whether A =>* w[i, j). Spans are closed in order of length; within a span
// length the productions are reapplied until nothing changes, which handles
// ε-bodies and unit chains. Each entry keeps the production and the split
// that first established it. An entry only ever depends on entries set
// before it, so following the back pointers always terminates.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "fimcowp/grammar.hpp"

namespace fimcowp {

struct DerivationTree {
  Symbol symbol;
  bool terminal = false;
  std::vector<DerivationTree> children;

  /// The production applied at this node (nonterminal nodes only).
  Production production() const {
    Production p{symbol, {}};
    for (const auto& c : children) p.body.push_back(c.symbol);
    return p;
  }

  Sentence frontier() const {
    Sentence out;
    collect(out);
    return out;
  }

  /// Preorder list of the productions used.
  std::vector<Production> trace() const {
    std::vector<Production> out;
    collect_trace(out);
    return out;
  }

 private:
  void collect(Sentence& out) const {
    if (terminal) {
      out.push_back(symbol);
      return;
    }
    for (const auto& c : children) c.collect(out);
  }
  void collect_trace(std::vector<Production>& out) const {
    if (terminal) return;
    out.push_back(production());
    for (const auto& c : children) c.collect_trace(out);
  }
};

/// One line per nonterminal node, `Head -> body` (ε as `1`), indented by depth.
inline std::string render_tree(const DerivationTree& t) {
  std::ostringstream os;
  auto visit = [&](auto&& self, const DerivationTree& node, int depth) -> void {
    if (node.terminal) return;
    os << std::string(static_cast<std::size_t>(2 * depth), ' ') << node.symbol << " ->";
    if (node.children.empty()) os << " 1";
    for (const auto& c : node.children) os << ' ' << c.symbol;
    os << '\n';
    for (const auto& c : node.children) self(self, c, depth + 1);
  };
  visit(visit, t, 0);
  return os.str();
}

namespace detail {

class SpanChart {
 public:
  SpanChart(const Grammar& g, const Sentence& w)
      : g_(g), w_(w), n_(w.size()), prods_(g.productions().begin(), g.productions().end()) {
    for (std::size_t i = 0; i < g.nonterminals().size(); ++i) {
      nt_.emplace(g.nonterminals()[i], i);
    }
    entries_.resize(g.nonterminals().size() * (n_ + 1) * (n_ + 1));
    fill();
  }

  std::optional<DerivationTree> tree() const {
    const auto& root = entry(nt_.at(g_.start()), 0, n_);
    if (!root) return std::nullopt;
    return build(nt_.at(g_.start()), 0, n_);
  }

 private:
  struct Entry {
    std::size_t production;
    std::vector<std::size_t> cuts;  // cuts[k] = start of body symbol k; cuts.back() = end
  };

  const std::optional<Entry>& entry(std::size_t a, std::size_t i, std::size_t j) const {
    return entries_[(a * (n_ + 1) + i) * (n_ + 1) + j];
  }
  std::optional<Entry>& entry(std::size_t a, std::size_t i, std::size_t j) {
    return entries_[(a * (n_ + 1) + i) * (n_ + 1) + j];
  }

  /// Positions reachable after each body prefix, with one predecessor each.
  std::optional<std::vector<std::size_t>> match(const Production& p, std::size_t i,
                                                std::size_t j) const {
    const std::size_t r = p.body.size();
    const std::size_t width = j - i + 1;
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    // pred[k][q - i]: position before symbol k-1 given we are at q after it.
    std::vector<std::vector<std::size_t>> pred(r + 1, std::vector<std::size_t>(width, kNone));
    pred[0][0] = i;
    for (std::size_t k = 0; k < r; ++k) {
      const Symbol& s = p.body[k];
      const bool is_t = g_.is_terminal(s);
      for (std::size_t pos = i; pos <= j; ++pos) {
        if (pred[k][pos - i] == kNone) continue;
        if (is_t) {
          if (pos < j && w_[pos] == s && pred[k + 1][pos + 1 - i] == kNone) {
            pred[k + 1][pos + 1 - i] = pos;
          }
          continue;
        }
        const std::size_t b = nt_.at(s);
        for (std::size_t q = pos; q <= j; ++q) {
          if (pred[k + 1][q - i] == kNone && entry(b, pos, q)) pred[k + 1][q - i] = pos;
        }
      }
    }
    if (pred[r][j - i] == kNone) return std::nullopt;
    std::vector<std::size_t> cuts(r + 1);
    cuts[r] = j;
    for (std::size_t k = r; k > 0; --k) cuts[k - 1] = pred[k][cuts[k] - i];
    return cuts;
  }

  void fill() {
    for (std::size_t len = 0; len <= n_; ++len) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        const std::size_t j = i + len;
        for (bool changed = true; changed;) {
          changed = false;
          for (std::size_t pi = 0; pi < prods_.size(); ++pi) {
            const auto& p = prods_[pi];
            auto& slot = entry(nt_.at(p.head), i, j);
            if (slot) continue;
            if (auto cuts = match(p, i, j)) {
              slot = Entry{pi, std::move(*cuts)};
              changed = true;
            }
          }
        }
      }
    }
  }

  DerivationTree build(std::size_t a, std::size_t i, std::size_t j) const {
    const Entry& e = *entry(a, i, j);
    const Production& p = prods_[e.production];
    DerivationTree node{p.head, false, {}};
    for (std::size_t k = 0; k < p.body.size(); ++k) {
      const Symbol& s = p.body[k];
      if (g_.is_terminal(s)) {
        node.children.push_back(DerivationTree{s, true, {}});
      } else {
        node.children.push_back(build(nt_.at(s), e.cuts[k], e.cuts[k + 1]));
      }
    }
    return node;
  }

  const Grammar& g_;
  const Sentence& w_;
  std::size_t n_;
  std::vector<Production> prods_;
  std::unordered_map<Symbol, std::size_t> nt_;
  std::vector<std::optional<Entry>> entries_;
};

}  // namespace detail

/// A derivation of w from the start symbol, or nullopt when w ∉ L(g).
inline std::optional<DerivationTree> derive(const Grammar& g, const Sentence& w) {
  for (const auto& s : w) {
    if (!g.is_terminal(s)) throw GrammarError("symbol '" + s + "' is not a terminal");
  }
  return detail::SpanChart(g, w).tree();
}

}  // namespace fimcowp

#endif  // FIMCOWP_DERIVATION_HPP
