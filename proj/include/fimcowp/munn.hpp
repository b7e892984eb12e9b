#ifndef FIMCOWP_MUNN_HPP
#define FIMCOWP_MUNN_HPP

// Munn trees: the canonical form of an element of the free inverse monoid
// FIM(X). A tree is a finite subtree of the Cayley graph of the free group
// containing the root ε, together with a terminal vertex.
//
// Vertices are identified with reduced words. Each edge is stored once, as
// (near, step): `near` is the endpoint closer to ε and `step` is the letter
// read from it away from ε, so the far endpoint is near·step (already
// reduced). Equality of trees is then plain set equality.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fimcowp/words.hpp"

namespace fimcowp {

struct MunnEdge {
  Word near;
  Letter step;

  Word far() const { return near + step; }

  friend bool operator==(const MunnEdge&, const MunnEdge&) = default;
  friend auto operator<=>(const MunnEdge& lhs, const MunnEdge& rhs) {
    if (auto c = lhs.near <=> rhs.near; c != 0) return c;
    return lhs.step <=> rhs.step;
  }
};

/// The edge of the Cayley graph joining the reduced words `from` and
/// from·l, in stored orientation.
inline MunnEdge cayley_edge(const Word& from, Letter l) {
  if (!from.empty() && from.back() == invert(l)) {
    Word near = from;
    near.pop_back();
    return MunnEdge{std::move(near), from.back()};
  }
  return MunnEdge{from, l};
}

class MunnTree {
 public:
  MunnTree() = default;
  MunnTree(std::set<MunnEdge> edges, Word terminal)
      : edges_(std::move(edges)), terminal_(std::move(terminal)) {}

  const std::set<MunnEdge>& edges() const { return edges_; }
  const Word& terminal() const { return terminal_; }

  bool contains(const MunnEdge& e) const { return edges_.count(e) != 0; }

  /// Root first, then the far endpoint of every edge; shortlex order.
  std::vector<Word> vertices() const {
    std::vector<Word> out;
    out.reserve(edges_.size() + 1);
    out.emplace_back();
    for (const auto& e : edges_) out.push_back(e.far());
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const MunnTree&, const MunnTree&) = default;

 private:
  std::set<MunnEdge> edges_;
  Word terminal_;
};

inline MunnTree build_munn(const Word& w) {
  std::set<MunnEdge> edges;
  Word at;
  for (Letter l : w) {
    auto e = cayley_edge(at, l);
    if (!at.empty() && at.back() == invert(l)) {
      at.pop_back();
    } else {
      at.push_back(l);
    }
    edges.insert(std::move(e));
  }
  return MunnTree(std::move(edges), std::move(at));
}

inline bool munn_equal(const MunnTree& s, const MunnTree& t) { return s == t; }

/// (ε, T_s ∪ g_s·T_t, g_s·g_t).
inline MunnTree munn_product(const MunnTree& s, const MunnTree& t) {
  std::set<MunnEdge> edges = s.edges();
  const Word& shift = s.terminal();
  for (const auto& e : t.edges()) {
    edges.insert(cayley_edge(free_reduce(shift + e.near), e.step));
  }
  return MunnTree(std::move(edges), free_reduce(shift + t.terminal()));
}

inline bool is_idempotent(const Word& w) { return free_reduce(w).empty(); }

/// True iff the tree of w lacks the edge joining ε and the vertex x.
inline bool avoids(const Word& w, Letter x) {
  return !build_munn(w).contains(MunnEdge{Word{}, x});
}

inline bool fim_equal(const Word& u, const Word& v) {
  return munn_equal(build_munn(u), build_munn(v));
}

inline bool fg_equal(const Word& u, const Word& v) { return free_reduce(u) == free_reduce(v); }

/// u =_FG v and T_u has an edge that T_v lacks.
inline bool in_K1(const Word& u, const Word& v) {
  if (!fg_equal(u, v)) return false;
  const auto tu = build_munn(u);
  const auto tv = build_munn(v);
  return !std::includes(tv.edges().begin(), tv.edges().end(), tu.edges().begin(),
                        tu.edges().end());
}

inline bool in_K2(const Word& u, const Word& v) { return in_K1(v, u); }

inline bool in_wp(const MarkedWord& m) { return fim_equal(m.left, m.v()); }
inline bool in_cowp(const MarkedWord& m) { return !in_wp(m); }

/// u#t with u·t nontrivial in the free group, i.e. u ≠_FG v.
inline bool in_cowp_fg(const MarkedWord& m) { return !free_reduce(m.left + m.right).empty(); }

namespace detail {
inline std::string vertex_name(const Word& w) { return w.empty() ? "1" : w.str(); }
}  // namespace detail

/// DOT text: root as a double circle, terminal filled. Vertices and edges
/// appear in shortlex order of their (far) endpoint.
inline std::string render_dot(const MunnTree& t) {
  std::ostringstream os;
  os << "graph munn {\n";
  for (const auto& v : t.vertices()) {
    os << "  \"" << detail::vertex_name(v) << "\" [shape="
       << (v.empty() ? "doublecircle" : "circle");
    if (v == t.terminal()) os << ", style=filled";
    os << "];\n";
  }
  std::vector<MunnEdge> edges(t.edges().begin(), t.edges().end());
  std::sort(edges.begin(), edges.end(),
            [](const MunnEdge& a, const MunnEdge& b) { return a.far() < b.far(); });
  for (const auto& e : edges) {
    os << "  \"" << detail::vertex_name(e.near) << "\" -- \"" << detail::vertex_name(e.far())
       << "\" [label=\"" << e.step.to_char() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

/// Indented outline, one vertex per line, children in alphabet order.
inline std::string render_ascii(const MunnTree& t) {
  std::map<Word, std::vector<Letter>> children;
  for (const auto& e : t.edges()) children[e.near].push_back(e.step);
  std::ostringstream os;
  auto visit = [&](auto&& self, const Word& v, int depth) -> void {
    os << std::string(static_cast<std::size_t>(2 * depth), ' ') << detail::vertex_name(v);
    if (v.empty()) os << " (root)";
    if (v == t.terminal()) os << " (terminal)";
    os << '\n';
    auto it = children.find(v);
    if (it == children.end()) return;
    auto steps = it->second;
    std::sort(steps.begin(), steps.end());
    for (Letter l : steps) self(self, v + l, depth + 1);
  };
  visit(visit, Word{}, 0);
  return os.str();
}

}  // namespace fimcowp

#endif  // FIMCOWP_MUNN_HPP
