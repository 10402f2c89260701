#pragma once

// Chord diagrams on a disk and ordered chord systems.
//
// A diagram is a circular word of 2n endpoint slots; slot k sits at angle
// 2*pi*k/(2n) and chords are straight segments. Two chords cross iff their
// endpoints interleave in the word, so the core predicates are purely
// combinatorial; geometry only enters make_positive.
//
// Sign convention: A[i][j] = +1 when chord j crosses chord i from the left
// of i to the right of i (looking along i's direction). The counter-clockwise
// arc from i's tail to i's head lies on the right of i.

#include "coxlink/core.hpp"
#include "coxlink/coxeter.hpp"
#include "coxlink/graphs.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace coxlink {

struct Endpoint {
  int chord;
  bool head;  // false: tail
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

class ChordDiagram {
 public:
  ChordDiagram() = default;
  explicit ChordDiagram(std::vector<Endpoint> word) : word_(std::move(word)) {
    if (word_.size() % 2 != 0) throw DomainError("chord word must have even length");
    const std::size_t n = word_.size() / 2;
    tail_.assign(n, -1);
    head_.assign(n, -1);
    for (std::size_t k = 0; k < word_.size(); ++k) {
      const auto& e = word_[k];
      if (e.chord < 0 || static_cast<std::size_t>(e.chord) >= n)
        throw DomainError("chord id " + std::to_string(e.chord + 1) + " out of range");
      auto& slot = e.head ? head_[static_cast<std::size_t>(e.chord)] : tail_[static_cast<std::size_t>(e.chord)];
      if (slot != -1)
        throw DomainError("chord " + std::to_string(e.chord + 1) + " has two " + (e.head ? "heads" : "tails"));
      slot = static_cast<int>(k);
    }
  }

  int size() const { return static_cast<int>(tail_.size()); }
  const std::vector<Endpoint>& word() const { return word_; }
  int tail_pos(int c) const { return tail_.at(static_cast<std::size_t>(c)); }
  int head_pos(int c) const { return head_.at(static_cast<std::size_t>(c)); }

  bool crosses(int i, int j) const {
    if (i == j) return false;
    return in_right_arc(i, tail_pos(j)) != in_right_arc(i, head_pos(j));
  }

  // A[i][j] in chord ids.
  int signed_crossing(int i, int j) const {
    if (!crosses(i, j)) return 0;
    return in_right_arc(i, head_pos(j)) ? +1 : -1;
  }

  ChordDiagram reoriented(int c) const {
    std::vector<Endpoint> w = word_;
    for (auto& e : w)
      if (e.chord == c) e.head = !e.head;
    return ChordDiagram(std::move(w));
  }

  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) { return a.word_ == b.word_; }

 private:
  // Strictly inside the counter-clockwise arc from tail(i) to head(i).
  bool in_right_arc(int i, int p) const {
    const int a = tail_pos(i), b = head_pos(i);
    return a < b ? (a < p && p < b) : (p > a || p < b);
  }

  std::vector<Endpoint> word_;
  std::vector<int> tail_, head_;
};

// Chords plus an index for each chord (index[c] = position of c in the order).
class OrderedChordSystem {
 public:
  OrderedChordSystem() = default;
  OrderedChordSystem(ChordDiagram d, std::vector<int> index) : d_(std::move(d)), index_(std::move(index)) {
    if (static_cast<int>(index_.size()) != d_.size()) throw DomainError("order size does not match diagram");
    chord_at_.assign(index_.size(), -1);
    for (std::size_t c = 0; c < index_.size(); ++c) {
      int k = index_[c];
      if (k < 0 || k >= d_.size() || chord_at_[static_cast<std::size_t>(k)] != -1)
        throw DomainError("chord order is not a permutation");
      chord_at_[static_cast<std::size_t>(k)] = static_cast<int>(c);
    }
  }
  static OrderedChordSystem from_sequence(ChordDiagram d, const std::vector<int>& seq) {
    std::vector<int> index(seq.size(), -1);
    for (std::size_t k = 0; k < seq.size(); ++k) {
      int c = seq[k];
      if (c < 0 || static_cast<std::size_t>(c) >= seq.size() || index[static_cast<std::size_t>(c)] != -1)
        throw DomainError("chord sequence is not a permutation");
      index[static_cast<std::size_t>(c)] = static_cast<int>(k);
    }
    return OrderedChordSystem(std::move(d), std::move(index));
  }

  const ChordDiagram& diagram() const { return d_; }
  int size() const { return d_.size(); }
  int index(int chord) const { return index_.at(static_cast<std::size_t>(chord)); }
  int chord_at(int k) const { return chord_at_.at(static_cast<std::size_t>(k)); }
  const std::vector<int>& indices() const { return index_; }
  std::vector<int> sequence() const { return chord_at_; }
  Ordering ordering() const { return Ordering(index_); }

 private:
  ChordDiagram d_;
  std::vector<int> index_, chord_at_;
};

// A[a][b] for order indices a, b.
inline IntMatrix intersection_matrix(const OrderedChordSystem& sys) {
  const auto n = static_cast<std::size_t>(sys.size());
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) a(i, j) = sys.diagram().signed_crossing(sys.chord_at(static_cast<int>(i)), sys.chord_at(static_cast<int>(j)));
  return a;
}

// First (i, j) with i > j and A[i][j] < 0, in order indices.
inline std::optional<std::pair<int, int>> first_negative_crossing(const OrderedChordSystem& sys) {
  const auto& d = sys.diagram();
  for (int i = 0; i < sys.size(); ++i)
    for (int j = 0; j < i; ++j)
      if (d.signed_crossing(sys.chord_at(i), sys.chord_at(j)) < 0) return std::pair{i, j};
  return std::nullopt;
}

// Lower triangle of A non-negative.
inline bool is_positive(const OrderedChordSystem& sys) { return !first_negative_crossing(sys).has_value(); }

// Simply-laced graph with an edge for each crossing pair, on chord ids.
inline CoxeterGraph incidence_graph(const ChordDiagram& d) {
  CoxeterGraph g(d.size());
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j)
      if (d.crosses(i, j)) g.add_edge(i, j);
  return g;
}

// ---------------------------------------------------------------------------
// Positive-ordering construction
// ---------------------------------------------------------------------------

// Pick a generic direction v, orient every chord to have positive inner
// product with v, then order chords counter-clockwise by direction starting
// from the one pointing furthest to the right of v.
inline OrderedChordSystem make_positive(const ChordDiagram& d) {
  const int n = d.size();
  if (n == 0) return OrderedChordSystem(d, {});
  const int slots = 2 * n;
  bool perturbed = false;
  auto point = [&](int slot) {
    double theta = 2.0 * std::numbers::pi * slot / slots;
    if (perturbed) theta += 1e-9 * slot;
    return std::pair{std::cos(theta), std::sin(theta)};
  };
  // Fixed candidate directions; the golden-angle step avoids the finitely
  // many directions perpendicular to a chord.
  constexpr double golden = 2.399963229728653;
  for (int m = 0; m < 4096; ++m) {
    const double phi = 0.1 + golden * m;
    const double vx = std::cos(phi), vy = std::sin(phi);
    bool degenerate = false;
    std::vector<double> angle(static_cast<std::size_t>(n));
    std::vector<bool> flip(static_cast<std::size_t>(n));
    for (int c = 0; c < n && !degenerate; ++c) {
      auto [tx, ty] = point(d.tail_pos(c));
      auto [hx, hy] = point(d.head_pos(c));
      double dx = hx - tx, dy = hy - ty;
      double dot = dx * vx + dy * vy;
      if (std::fabs(dot) < 1e-12 * std::hypot(dx, dy)) {
        degenerate = true;
        break;
      }
      if (dot < 0) {
        dx = -dx;
        dy = -dy;
        flip[static_cast<std::size_t>(c)] = true;
      }
      angle[static_cast<std::size_t>(c)] = std::atan2(vx * dy - vy * dx, vx * dx + vy * dy);
    }
    if (degenerate) {
      perturbed = true;
      continue;
    }
    ChordDiagram oriented = d;
    for (int c = 0; c < n; ++c)
      if (flip[static_cast<std::size_t>(c)]) oriented = oriented.reoriented(c);
    std::vector<int> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 0);
    std::stable_sort(seq.begin(), seq.end(), [&](int a, int b) {
      return angle[static_cast<std::size_t>(a)] < angle[static_cast<std::size_t>(b)];
    });
    OrderedChordSystem sys = OrderedChordSystem::from_sequence(std::move(oriented), seq);
    if (!is_positive(sys)) throw Error(ErrorCode::internal, "make_positive produced a non-positive system");
    return sys;
  }
  throw Error(ErrorCode::internal, "make_positive found no generic direction");
}

// Orientation flips making the chords positive for a fixed chord sequence,
// or nullopt. Each crossing pair (later a, earlier b) forces
// s_a * s_b = A[a][b]; this is a 2-colouring problem on the crossing graph.
// `components` receives the number of free sign choices.
inline std::optional<ChordDiagram> positive_orientation(const ChordDiagram& d, const std::vector<int>& seq,
                                                        int* components = nullptr) {
  const int n = d.size();
  std::vector<int> index(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) index[static_cast<std::size_t>(seq[static_cast<std::size_t>(k)])] = k;
  std::vector<int> sign(static_cast<std::size_t>(n), 0);
  int comps = 0;
  for (int root = 0; root < n; ++root) {
    if (sign[static_cast<std::size_t>(root)] != 0) continue;
    ++comps;
    sign[static_cast<std::size_t>(root)] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (!d.crosses(u, w)) continue;
        int later = index[static_cast<std::size_t>(u)] > index[static_cast<std::size_t>(w)] ? u : w;
        int earlier = later == u ? w : u;
        int want = sign[static_cast<std::size_t>(u)] * d.signed_crossing(later, earlier);
        if (sign[static_cast<std::size_t>(w)] == 0) {
          sign[static_cast<std::size_t>(w)] = want;
          stack.push_back(w);
        } else if (sign[static_cast<std::size_t>(w)] != want) {
          return std::nullopt;
        }
      }
    }
  }
  if (components) *components = comps;
  ChordDiagram out = d;
  for (int c = 0; c < n; ++c)
    if (sign[static_cast<std::size_t>(c)] < 0) out = out.reoriented(c);
  return out;
}

// ---------------------------------------------------------------------------
// Realizability
// ---------------------------------------------------------------------------

namespace detail {

// Circular word of chord ids with rotation, reflection and relabelling by
// first occurrence factored out.
inline std::vector<int> unlabeled_canonical_word(const std::vector<int>& w) {
  const std::size_t len = w.size();
  std::vector<int> best;
  for (int refl = 0; refl < 2; ++refl)
    for (std::size_t r = 0; r < len; ++r) {
      std::map<int, int> relabel;
      std::vector<int> cand(len);
      for (std::size_t k = 0; k < len; ++k) {
        std::size_t src = refl ? (r + len - k) % len : (r + k) % len;
        int c = w[src];
        auto it = relabel.find(c);
        if (it == relabel.end()) it = relabel.emplace(c, static_cast<int>(relabel.size())).first;
        cand[k] = it->second;
      }
      if (best.empty() || cand < best) best = cand;
    }
  return best;
}

inline ChordDiagram diagram_from_ids(const std::vector<int>& w) {
  std::vector<Endpoint> word;
  std::set<int> seen;
  for (int c : w) word.push_back({c, !seen.insert(c).second});
  return ChordDiagram(std::move(word));
}

// Inserts chords one vertex at a time; any realization restricted to the
// first k vertices realizes their induced subgraph, so the search is
// complete. `visit` returns false to stop. Returns false if the budget ran
// out before the search finished.
inline bool realize_search(const SimpleGraph& g, std::uint64_t budget,
                           const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = g.n;
  if (n == 0) {
    visit({});
    return true;
  }
  // Insertion order: repeatedly take the unplaced vertex with most placed
  // neighbours (ties: higher degree, then lower id).
  std::vector<int> order;
  std::uint32_t placed = 0;
  for (int k = 0; k < n; ++k) {
    int best = -1, best_key1 = -1, best_key2 = -1;
    for (int v = 0; v < n; ++v) {
      if ((placed >> v) & 1u) continue;
      int k1 = std::popcount(g.adj[static_cast<std::size_t>(v)] & placed), k2 = g.degree(v);
      if (k1 > best_key1 || (k1 == best_key1 && k2 > best_key2)) {
        best = v;
        best_key1 = k1;
        best_key2 = k2;
      }
    }
    order.push_back(best);
    placed |= 1u << best;
  }
  std::uint64_t nodes = 0;
  bool exhausted = false, stop = false;
  std::vector<int> word;
  std::function<void(int, std::uint32_t)> rec = [&](int k, std::uint32_t have) {
    if (stop || exhausted) return;
    if (k == n) {
      if (!visit(word)) stop = true;
      return;
    }
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    const int v = order[static_cast<std::size_t>(k)];
    const std::uint32_t want = g.adj[static_cast<std::size_t>(v)] & have;
    const std::size_t len = word.size();
    if (len == 0) {
      word = {v, v};
      rec(k + 1, have | (1u << v));
      word.clear();
      return;
    }
    // Gap g sits before word[g]; gap 0 is also the wrap-around gap.
    for (std::size_t g1 = 0; g1 < len && !stop && !exhausted; ++g1) {
      std::uint32_t parity = 0;
      for (std::size_t g2 = g1; g2 < len && !stop && !exhausted; ++g2) {
        if (g2 > g1) parity ^= 1u << word[g2 - 1];
        if (parity != want) continue;
        std::vector<int> saved = word;
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(g2), v);
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(g1), v);
        rec(k + 1, have | (1u << v));
        word = std::move(saved);
      }
    }
  };
  rec(0, 0);
  return !exhausted;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultRealizeBudget = 50'000'000;

// A diagram whose incidence graph equals g (chord c realizes vertex c), or
// nullopt when the exhaustive search finds none. Throws InconclusiveError if
// the node budget runs out first.
inline std::optional<ChordDiagram> realize(const CoxeterGraph& g, std::uint64_t budget = kDefaultRealizeBudget) {
  if (!g.simply_laced()) throw DomainError("realize requires a simply-laced graph");
  if (g.size() > 16) throw DomainError("realize supports at most 16 vertices");
  std::optional<ChordDiagram> found;
  bool complete = detail::realize_search(to_simple(g), budget, [&](const std::vector<int>& w) {
    found = detail::diagram_from_ids(w);
    return false;
  });
  if (!found && !complete) throw InconclusiveError("realization search budget exhausted");
  return found;
}

// Every realization of g, up to rotation and reflection of the circular word
// (chords unlabelled), in canonical form.
inline std::vector<ChordDiagram> realize_all(const CoxeterGraph& g, std::uint64_t budget = kDefaultRealizeBudget) {
  if (!g.simply_laced()) throw DomainError("realize requires a simply-laced graph");
  std::set<std::vector<int>> canon;
  bool complete = detail::realize_search(to_simple(g), budget, [&](const std::vector<int>& w) {
    canon.insert(detail::unlabeled_canonical_word(w));
    return true;
  });
  if (!complete) throw InconclusiveError("realization search budget exhausted");
  std::vector<ChordDiagram> out;
  for (const auto& w : canon) out.push_back(detail::diagram_from_ids(w));
  return out;
}

// ---------------------------------------------------------------------------
// Non-realizability obstruction
// ---------------------------------------------------------------------------

struct ObstructionWitness {
  std::vector<int> independent;  // S': >= 3 pairwise non-adjacent vertices
  int hub = -1;                  // s: adjacent to every vertex of S'
  std::vector<int> cycle;        // induced cycle through S', in cyclic order
};

namespace detail {

// Vertices of an induced cycle in cyclic order, or empty if `mask` does not
// induce a cycle.
inline std::vector<int> induced_cycle_order(const SimpleGraph& g, std::uint32_t mask) {
  const int len = std::popcount(mask);
  if (len < 3) return {};
  for (std::uint32_t m = mask; m; m &= m - 1)
    if (std::popcount(g.adj[static_cast<std::size_t>(std::countr_zero(m))] & mask) != 2) return {};
  std::vector<int> cyc{std::countr_zero(mask)};
  int prev = -1;
  while (true) {
    int cur = cyc.back();
    std::uint32_t nb = g.adj[static_cast<std::size_t>(cur)] & mask;
    int next = std::countr_zero(nb);
    if (next == prev) next = std::countr_zero(nb & (nb - 1));
    if (next == cyc.front()) break;
    prev = cur;
    cyc.push_back(next);
  }
  if (static_cast<int>(cyc.size()) != len) return {};  // disconnected union of cycles
  return cyc;
}

}  // namespace detail

// Searches every induced cycle and every vertex off it for three pairwise
// non-adjacent cycle vertices sharing that vertex as a common neighbour.
inline std::optional<ObstructionWitness> obstruction(const CoxeterGraph& g) {
  if (!g.simply_laced()) throw DomainError("obstruction requires a simply-laced graph");
  if (g.size() > 24) throw DomainError("obstruction search supports at most 24 vertices");
  const SimpleGraph s = to_simple(g);
  const int n = s.n;
  // A vertex on an induced cycle has only two neighbours on it, so the hub
  // lies off the cycle; three pairwise non-adjacent cycle vertices need
  // length >= 6.
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 6) continue;
    auto cyc = detail::induced_cycle_order(s, mask);
    if (cyc.empty()) continue;
    for (int hub = 0; hub < n; ++hub) {
      if ((mask >> hub) & 1u) continue;
      std::vector<int> nb;
      for (int v : cyc)
        if (s.adjacent(hub, v)) nb.push_back(v);
      std::sort(nb.begin(), nb.end());
      for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
          if (s.adjacent(nb[a], nb[b])) continue;
          for (std::size_t c = b + 1; c < nb.size(); ++c) {
            if (s.adjacent(nb[a], nb[c]) || s.adjacent(nb[b], nb[c])) continue;
            return ObstructionWitness{{nb[a], nb[b], nb[c]}, hub, cyc};
          }
        }
    }
  }
  return std::nullopt;
}

// Independent check of the four conditions.
inline bool verify_witness(const CoxeterGraph& g, const ObstructionWitness& w) {
  const SimpleGraph s = to_simple(g);
  if (w.independent.size() < 3 || w.hub < 0 || w.hub >= s.n) return false;
  for (std::size_t a = 0; a < w.independent.size(); ++a) {
    if (!s.adjacent(w.hub, w.independent[a])) return false;
    for (std::size_t b = a + 1; b < w.independent.size(); ++b)
      if (s.adjacent(w.independent[a], w.independent[b])) return false;
  }
  std::uint32_t mask = 0;
  for (int v : w.cycle) mask |= 1u << v;
  if (detail::induced_cycle_order(s, mask).empty()) return false;
  for (int v : w.independent)
    if (!((mask >> v) & 1u)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Positive orderings up to equivalence
// ---------------------------------------------------------------------------

using ArcList = std::vector<std::pair<int, int>>;

// Arcs from the earlier to the later chord of every crossing pair.
inline ArcList directed_incidence(const ChordDiagram& d, const std::vector<int>& seq) {
  std::vector<int> index(seq.size());
  for (std::size_t k = 0; k < seq.size(); ++k) index[static_cast<std::size_t>(seq[k])] = static_cast<int>(k);
  ArcList arcs;
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j)
      if (d.crosses(i, j)) {
        if (index[static_cast<std::size_t>(i)] < index[static_cast<std::size_t>(j)])
          arcs.emplace_back(i, j);
        else
          arcs.emplace_back(j, i);
      }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

// Smallest image of the arc list under the given vertex permutations.
inline ArcList canonical_arcs(const ArcList& arcs, const std::vector<std::vector<int>>& autos) {
  ArcList best;
  for (const auto& p : autos) {
    ArcList m;
    m.reserve(arcs.size());
    for (auto [u, v] : arcs) m.emplace_back(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]);
    std::sort(m.begin(), m.end());
    if (best.empty() || m < best) best = std::move(m);
  }
  if (autos.empty()) best = arcs;
  return best;
}

// Moving the first chord of a positive system to the end (and reversing it)
// keeps the system positive and conjugates the monodromy. On the directed
// incidence graph this turns a source into a sink. Returns the smallest
// canonical arc list over the orbit of such moves in both directions.
inline ArcList flip_class_key(const ArcList& arcs, int n, const std::vector<std::vector<int>>& autos) {
  std::set<ArcList> seen{arcs};
  std::vector<ArcList> queue{arcs};
  ArcList best = canonical_arcs(arcs, autos);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ArcList cur = queue[head];
    std::vector<int> out(static_cast<std::size_t>(n), 0), in(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : cur) {
      ++out[static_cast<std::size_t>(u)];
      ++in[static_cast<std::size_t>(v)];
    }
    for (int v = 0; v < n; ++v) {
      if (out[static_cast<std::size_t>(v)] + in[static_cast<std::size_t>(v)] == 0) continue;
      if (out[static_cast<std::size_t>(v)] && in[static_cast<std::size_t>(v)]) continue;
      ArcList next;
      next.reserve(cur.size());
      for (auto [a, b] : cur) {
        if (a == v || b == v)
          next.emplace_back(b, a);
        else
          next.emplace_back(a, b);
      }
      std::sort(next.begin(), next.end());
      if (!seen.insert(next).second) continue;
      best = std::min(best, canonical_arcs(next, autos));
      queue.push_back(std::move(next));
    }
  }
  return best;
}

struct PositiveOrderingClass {
  ArcList key;                        // smallest canonical arc list in the class
  OrderedChordSystem representative;  // first positive system found
  std::size_t structures = 0;         // directed incidence structures in the class
  std::size_t orders = 0;             // chord sequences in the class
  std::size_t systems = 0;            // (orientation, sequence) pairs in the class
};

struct PositiveOrderings {
  std::vector<PositiveOrderingClass> classes;
  std::size_t structures = 0;  // directed incidence structures up to automorphism
  std::size_t positive_systems = 0;
};

// Calls visit(system, canonical arcs, orientations) once per chord sequence
// that admits a positive orientation, passing one such orientation and the
// number of them.
inline void for_each_positive_sequence(
    const ChordDiagram& d,
    const std::function<void(const OrderedChordSystem&, const ArcList&, std::size_t)>& visit) {
  const int n = d.size();
  const auto autos = automorphisms(to_simple(incidence_graph(d)));
  std::vector<int> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  do {
    int comps = 0;
    auto oriented = positive_orientation(d, seq, &comps);
    if (!oriented) continue;
    auto key = canonical_arcs(directed_incidence(d, seq), autos);
    visit(OrderedChordSystem::from_sequence(*oriented, seq), key, std::size_t{1} << comps);
  } while (std::next_permutation(seq.begin(), seq.end()));
}

// All positive (orientation, order) pairs. Pairs with isomorphic directed
// incidence structures are equivalent, and so are pairs related by moving
// the first chord to the end; classes are listed in order of discovery.
inline PositiveOrderings enumerate_positive_orderings(const ChordDiagram& d) {
  if (d.size() > 8) throw DomainError("enumerate_positive_orderings supports at most 8 chords");
  PositiveOrderings out;
  const auto autos = automorphisms(to_simple(incidence_graph(d)));
  std::map<ArcList, ArcList> class_of;  // structure key -> class key
  std::map<ArcList, std::size_t> where;
  for_each_positive_sequence(d, [&](const OrderedChordSystem& sys, const ArcList& key, std::size_t orientations) {
    auto cit = class_of.find(key);
    const bool new_structure = cit == class_of.end();
    if (new_structure) cit = class_of.emplace(key, flip_class_key(key, d.size(), autos)).first;
    auto [it, fresh] = where.emplace(cit->second, out.classes.size());
    if (fresh) out.classes.push_back({cit->second, sys, 0, 0, 0});
    auto& cls = out.classes[it->second];
    if (new_structure) {
      ++cls.structures;
      ++out.structures;
    }
    cls.orders += 1;
    cls.systems += orientations;
    out.positive_systems += orientations;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Text and JSON forms
// ---------------------------------------------------------------------------

// "+1 +2 -1 -2": +c is chord c's tail, -c its head (1-based).
inline ChordDiagram parse_diagram(const std::string& text) {
  std::istringstream in(text);
  std::vector<Endpoint> word;
  std::string tok;
  std::size_t pos = 0;
  while (in >> tok) {
    pos = text.find(tok, pos);
    if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-') ||
        tok.find_first_not_of("0123456789", 1) != std::string::npos)
      throw ParseError("expected +<chord> or -<chord>, got '" + tok + "'", pos);
    int id = std::stoi(tok.substr(1));
    if (id < 1) throw ParseError("chord ids start at 1", pos);
    word.push_back({id - 1, tok[0] == '-'});
    pos += tok.size();
  }
  return ChordDiagram(std::move(word));
}

inline std::string to_string(const ChordDiagram& d) {
  std::string s;
  for (const auto& e : d.word()) {
    if (!s.empty()) s += ' ';
    s += (e.head ? '-' : '+') + std::to_string(e.chord + 1);
  }
  return s;
}

inline nlohmann::json to_json(const ChordDiagram& d) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& e : d.word()) w.push_back({e.chord + 1, e.head ? "head" : "tail"});
  return {{"word", w}};
}

inline ChordDiagram diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("word") || !j["word"].is_array())
    throw DomainError("diagram JSON needs a \"word\" array");
  std::vector<Endpoint> word;
  for (const auto& e : j["word"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_string())
      throw DomainError("word entries must be [chord, \"tail\"|\"head\"]");
    const auto role = e[1].get<std::string>();
    if (role != "tail" && role != "head") throw DomainError("endpoint role must be \"tail\" or \"head\"");
    word.push_back({e[0].get<int>() - 1, role == "head"});
  }
  return ChordDiagram(std::move(word));
}

// {"word": [...], "order": [c_1, c_2, ...]} with the chords listed by index.
inline nlohmann::json to_json(const OrderedChordSystem& sys) {
  nlohmann::json j = to_json(sys.diagram());
  nlohmann::json order = nlohmann::json::array();
  for (int c : sys.sequence()) order.push_back(c + 1);
  j["order"] = order;
  return j;
}

inline OrderedChordSystem system_from_json(const nlohmann::json& j) {
  ChordDiagram d = diagram_from_json(j);
  if (!j.contains("order")) throw DomainError("chord system JSON needs an \"order\" array");
  std::vector<int> seq;
  for (const auto& c : j["order"]) {
    if (!c.is_number_integer()) throw DomainError("order entries must be integers");
    seq.push_back(c.get<int>() - 1);
  }
  return OrderedChordSystem::from_sequence(std::move(d), seq);
}

}  // namespace coxlink
