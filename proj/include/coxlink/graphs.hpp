#pragma once

// Small simple graphs as adjacency bitmasks: isomorphism, automorphisms,
// canonical forms, and exhaustive enumeration of trees and graphs.

#include "coxlink/coxeter.hpp"
#include "coxlink/core.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace coxlink {

struct SimpleGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;  // adj[v] bit u set iff u ~ v

  SimpleGraph() = default;
  explicit SimpleGraph(int vertices) : n(vertices), adj(static_cast<std::size_t>(vertices), 0) {
    if (vertices < 0 || vertices > 32) throw DomainError("SimpleGraph supports at most 32 vertices");
  }

  void add_edge(int u, int v) {
    adj[static_cast<std::size_t>(u)] |= 1u << v;
    adj[static_cast<std::size_t>(v)] |= 1u << u;
  }
  bool adjacent(int u, int v) const { return (adj[static_cast<std::size_t>(u)] >> v) & 1u; }
  int degree(int v) const { return std::popcount(adj[static_cast<std::size_t>(v)]); }
  int edge_count() const {
    int e = 0;
    for (auto a : adj) e += std::popcount(a);
    return e / 2;
  }
  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

inline SimpleGraph to_simple(const CoxeterGraph& g) {
  SimpleGraph s(g.size());
  for (const auto& e : g.edges()) s.add_edge(e.u, e.v);
  return s;
}

inline CoxeterGraph to_coxeter(const SimpleGraph& s) {
  CoxeterGraph g(s.n);
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v)
      if (s.adjacent(u, v)) g.add_edge(u, v);
  return g;
}

// Labelled graph from an edge mask: bit k is the k-th pair in the order
// (0,1), (0,2), (1,2), (0,3), ...
inline SimpleGraph graph_from_mask(int n, std::uint64_t mask) {
  SimpleGraph g(n);
  int k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if ((mask >> k) & 1u) g.add_edge(u, v);
  return g;
}

inline bool is_connected(const SimpleGraph& g) {
  if (g.n == 0) return true;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= g.adj[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (g.n == 32 ? 0xffffffffu : ((1u << g.n) - 1));
}

inline bool is_tree(const SimpleGraph& g) { return g.n >= 1 && g.edge_count() == g.n - 1 && is_connected(g); }

namespace detail {

// Backtracking search for bijections f with adj_g(u,v) == adj_h(f u, f v).
// Calls `visit` for each one; stops when it returns false.
inline void isomorphisms(const SimpleGraph& g, const SimpleGraph& h,
                         const std::function<bool(const std::vector<int>&)>& visit) {
  if (g.n != h.n || g.edge_count() != h.edge_count()) return;
  const int n = g.n;
  // Assign g's vertices in BFS-ish order so constraints bite early.
  std::vector<int> order;
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (placed[static_cast<std::size_t>(s)]) continue;
    std::size_t head = order.size();
    order.push_back(s);
    placed[static_cast<std::size_t>(s)] = 1;
    while (head < order.size()) {
      int u = order[head++];
      for (int v = 0; v < n; ++v)
        if (g.adjacent(u, v) && !placed[static_cast<std::size_t>(v)]) {
          placed[static_cast<std::size_t>(v)] = 1;
          order.push_back(v);
        }
    }
  }
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::uint32_t used = 0;
  bool stop = false;
  std::function<void(int)> rec = [&](int k) {
    if (stop) return;
    if (k == n) {
      if (!visit(map)) stop = true;
      return;
    }
    const int u = order[static_cast<std::size_t>(k)];
    for (int x = 0; x < n && !stop; ++x) {
      if ((used >> x) & 1u) continue;
      if (g.degree(u) != h.degree(x)) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int w = order[static_cast<std::size_t>(j)];
        if (g.adjacent(u, w) != h.adjacent(x, map[static_cast<std::size_t>(w)])) ok = false;
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(u)] = x;
      used |= 1u << x;
      rec(k + 1);
      used &= ~(1u << x);
      map[static_cast<std::size_t>(u)] = -1;
    }
  };
  rec(0);
}

}  // namespace detail

inline std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h) {
  std::optional<std::vector<int>> out;
  detail::isomorphisms(g, h, [&](const std::vector<int>& m) {
    out = m;
    return false;
  });
  return out;
}

inline bool isomorphic(const SimpleGraph& g, const SimpleGraph& h) { return find_isomorphism(g, h).has_value(); }
inline bool isomorphic(const CoxeterGraph& g, const CoxeterGraph& h) {
  return g.simply_laced() && h.simply_laced() && isomorphic(to_simple(g), to_simple(h));
}

inline std::vector<std::vector<int>> automorphisms(const SimpleGraph& g) {
  std::vector<std::vector<int>> out;
  detail::isomorphisms(g, g, [&](const std::vector<int>& m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Canonical adjacency code: the largest lower-triangle bit string over all
// relabellings that list vertices by non-increasing degree. Intended for
// n <= 10.
inline std::uint64_t canonical_code(const SimpleGraph& g) {
  const int n = g.n;
  if (n > 11) throw DomainError("canonical_code supports at most 11 vertices");
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<int> sorted_deg = deg;
  std::sort(sorted_deg.rbegin(), sorted_deg.rend());
  // Bits are emitted position by position: for position k, the adjacency of
  // the vertex at k to positions 0..k-1.
  std::uint64_t best = 0;
  bool have = false;
  std::vector<int> at(static_cast<std::size_t>(n), -1);
  std::uint32_t used = 0;
  std::function<void(int, std::uint64_t, int)> rec = [&](int k, std::uint64_t code, int bits) {
    if (k == n) {
      if (!have || code > best) {
        best = code;
        have = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      if (deg[static_cast<std::size_t>(v)] != sorted_deg[static_cast<std::size_t>(k)]) continue;
      std::uint64_t c = code;
      for (int j = 0; j < k; ++j) c = (c << 1) | (g.adjacent(v, at[static_cast<std::size_t>(j)]) ? 1u : 0u);
      const int nb = bits + k;
      if (have) {
        // Compare against the same-length prefix of the best code.
        const int total = n * (n - 1) / 2;
        std::uint64_t best_prefix = best >> (total - nb);
        if (c < best_prefix) continue;
      }
      at[static_cast<std::size_t>(k)] = v;
      used |= 1u << v;
      rec(k + 1, c, nb);
      used &= ~(1u << v);
    }
  };
  rec(0, 0, 0);
  // Prefix the vertex count so graphs of different sizes never collide.
  return best | (static_cast<std::uint64_t>(n) << 58);
}

// All graphs on n vertices up to isomorphism (n <= 8), grown one vertex at
// a time and deduplicated by canonical code. Deterministic order.
inline std::vector<SimpleGraph> enumerate_graphs(int n, bool connected_only = false) {
  if (n < 0 || n > 8) throw DomainError("enumerate_graphs supports 0..8 vertices");
  std::vector<SimpleGraph> level{SimpleGraph(0)};
  for (int m = 1; m <= n; ++m) {
    std::set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, SimpleGraph>> next;
    for (const auto& g : level) {
      for (std::uint32_t nbrs = 0; nbrs < (1u << (m - 1)); ++nbrs) {
        SimpleGraph h(m);
        for (int v = 0; v < m - 1; ++v) h.adj[static_cast<std::size_t>(v)] = g.adj[static_cast<std::size_t>(v)];
        for (int v = 0; v < m - 1; ++v)
          if ((nbrs >> v) & 1u) h.add_edge(v, m - 1);
        std::uint64_t code = canonical_code(h);
        if (seen.insert(code).second) next.emplace_back(code, h);
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [code, h] : next) level.push_back(std::move(h));
  }
  if (connected_only) {
    std::vector<SimpleGraph> out;
    for (auto& g : level)
      if (is_connected(g)) out.push_back(std::move(g));
    return out;
  }
  return level;
}

// ---------------------------------------------------------------------------
// Free trees
// ---------------------------------------------------------------------------

namespace detail {

inline std::string rooted_code(const SimpleGraph& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int w = 0; w < t.n; ++w)
    if (w != parent && t.adjacent(v, w)) kids.push_back(rooted_code(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

inline std::vector<int> tree_centers(const SimpleGraph& t) {
  std::vector<int> deg(static_cast<std::size_t>(t.n));
  std::vector<int> leaves;
  for (int v = 0; v < t.n; ++v) {
    deg[static_cast<std::size_t>(v)] = t.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) leaves.push_back(v);
  }
  int remaining = t.n;
  while (remaining > 2) {
    remaining -= static_cast<int>(leaves.size());
    std::vector<int> next;
    for (int l : leaves) {
      deg[static_cast<std::size_t>(l)] = 0;
      for (int w = 0; w < t.n; ++w)
        if (t.adjacent(l, w) && deg[static_cast<std::size_t>(w)] > 0 && --deg[static_cast<std::size_t>(w)] == 1)
          next.push_back(w);
    }
    leaves = std::move(next);
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

inline void build_from_code(const std::string& code, std::size_t& pos, SimpleGraph& t, int parent) {
  // code[pos] == '('
  int me = t.n;
  t.n += 1;
  t.adj.push_back(0);
  if (parent >= 0) t.add_edge(parent, me);
  ++pos;
  while (code[pos] == '(') build_from_code(code, pos, t, me);
  ++pos;  // ')'
}

}  // namespace detail

// AHU code of the tree rooted at its center (the smaller code when there
// are two centers). Equal iff the trees are isomorphic.
inline std::string tree_code(const SimpleGraph& t) {
  if (!is_tree(t)) throw DomainError("tree_code: not a tree");
  std::string best;
  for (int c : detail::tree_centers(t)) {
    std::string s = detail::rooted_code(t, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// Tree from its code, numbered in depth-first preorder from the center.
inline SimpleGraph tree_from_code(const std::string& code) {
  SimpleGraph t;
  std::size_t pos = 0;
  detail::build_from_code(code, pos, t, -1);
  return t;
}

// All free trees with 1..nmax vertices up to isomorphism, ordered by size
// and then by code.
inline std::vector<SimpleGraph> enumerate_free_trees(int nmax) {
  if (nmax < 1 || nmax > 12) throw DomainError("tree enumeration supports 1 <= nmax <= 12");
  std::vector<SimpleGraph> out;
  std::vector<std::string> level{"()"};
  out.push_back(tree_from_code(level[0]));
  for (int n = 2; n <= nmax; ++n) {
    std::set<std::string> next;
    for (const auto& code : level) {
      SimpleGraph t = tree_from_code(code);
      for (int v = 0; v < t.n; ++v) {
        SimpleGraph u = t;
        u.n += 1;
        u.adj.push_back(0);
        u.add_edge(v, u.n - 1);
        next.insert(tree_code(u));
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& code : level) out.push_back(tree_from_code(code));
  }
  return out;
}

}  // namespace coxlink
