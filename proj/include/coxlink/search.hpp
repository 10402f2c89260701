#pragma once

// Exhaustive desk-scale searches: smallest Mahler measure among the
// polygonal-group denominators, smallest spectral radius among indefinite
// simply-laced Coxeter graphs, and Alexander-polynomial invariance over the
// positive orderings of a chord diagram.
//
// Work is split into fixed chunks that workers pull from a shared counter;
// chunk results are reduced in chunk order, so the worker count (environment
// variable COXLINK_WORKERS, default: hardware concurrency) never changes a
// report.

#include "coxlink/chords.hpp"
#include "coxlink/core.hpp"
#include "coxlink/coxeter.hpp"
#include "coxlink/graphs.hpp"
#include "coxlink/growth.hpp"
#include "coxlink/roots.hpp"
#include "coxlink/seifert.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace coxlink {

inline int worker_count() {
  if (const char* env = std::getenv("COXLINK_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// Runs body(chunk) for chunk in [0, chunks) on worker_count() threads.
// The first exception thrown by any chunk is rethrown.
inline void parallel_chunks(std::size_t chunks, const std::function<void(std::size_t)>& body) {
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(static_cast<std::size_t>(worker_count()), chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) body(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t c; (c = next.fetch_add(1)) < chunks;) {
        try {
          body(c);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct SearchReport {
  std::string family;
  std::size_t examined = 0;
  nlohmann::json minimizer;
  double min_value = std::numeric_limits<double>::infinity();
  double runner_up = std::numeric_limits<double>::infinity();
  double tol = 0.0;
  double elapsed_ms = 0.0;
};

inline nlohmann::json to_json(const SearchReport& r) {
  auto num = [&](double v) -> nlohmann::json {
    if (!std::isfinite(v)) return nullptr;
    return {{"value", v}, {"tol", r.tol}};
  };
  return {{"family", r.family},         {"examined", r.examined},   {"minimizer", r.minimizer},
          {"min_value", num(r.min_value)}, {"runner_up", num(r.runner_up)}, {"elapsed_ms", r.elapsed_ms}};
}

namespace detail {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Memoized spectral radius keyed by the characteristic polynomial.
class RadiusCache {
 public:
  explicit RadiusCache(double tol) : tol_(tol) {}
  double operator()(const IntPolynomial& p) {
    auto it = cache_.find(p.coeffs());
    if (it == cache_.end()) it = cache_.emplace(p.coeffs(), max_root_modulus(p, tol_)).first;
    return it->second;
  }

 private:
  double tol_;
  std::map<std::vector<BigInt>, double> cache_;
};

}  // namespace detail

// All free trees with at most nmax vertices, as simply-laced Coxeter graphs
// numbered in depth-first preorder from the center.
inline std::vector<CoxeterGraph> enumerate_trees(int nmax) {
  std::vector<CoxeterGraph> out;
  for (const auto& t : enumerate_free_trees(nmax)) out.push_back(to_coxeter(t));
  return out;
}

// Smallest Mahler measure of delta(p_1..p_k) over 3 <= k <= kmax,
// 2 <= p_1 <= ... <= p_k <= pmax with negative Euler characteristic.
// Ties go to the lexicographically smallest signature; the runner-up is
// the best value over the remaining signatures.
inline SearchReport min_mahler_delta(int kmax, int pmax, double tol = kDefaultModulusTol) {
  if (kmax < 3) throw DomainError("min_mahler_delta needs kmax >= 3");
  if (pmax < 7) throw DomainError("min_mahler_delta needs pmax >= 7");
  detail::Stopwatch clock;
  std::vector<std::vector<int>> sigs;
  for (int k = 3; k <= kmax; ++k) {
    std::vector<int> p(static_cast<std::size_t>(k), 2);
    while (true) {
      if (orbifold_chi(TupleSignature(p)) < 0) sigs.push_back(p);
      int i = k - 1;
      while (i >= 0 && p[static_cast<std::size_t>(i)] == pmax) --i;
      if (i < 0) break;
      ++p[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) p[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(i)];
    }
  }
  std::sort(sigs.begin(), sigs.end());
  std::vector<double> values(sigs.size());
  constexpr std::size_t kChunk = 64;
  parallel_chunks((sigs.size() + kChunk - 1) / kChunk, [&](std::size_t c) {
    for (std::size_t i = c * kChunk; i < std::min(sigs.size(), (c + 1) * kChunk); ++i) {
      const IntPolynomial d = delta(TupleSignature(sigs[i]));
      if (!d.is_monic() || !is_reciprocal(d))
        throw InvariantViolation("delta" + to_string(TupleSignature(sigs[i])) + " is not monic and reciprocal");
      values[i] = mahler_measure(d, tol);
    }
  });
  SearchReport r;
  r.family = "delta(p_1..p_k), 3 <= k <= " + std::to_string(kmax) + ", p_i <= " + std::to_string(pmax) + ", chi < 0";
  r.examined = sigs.size();
  r.tol = tol;
  std::size_t best = sigs.size();
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    if (best == sigs.size() || values[i] < values[best]) {
      if (best != sigs.size()) r.runner_up = std::min(r.runner_up, values[best]);
      best = i;
    } else {
      r.runner_up = std::min(r.runner_up, values[i]);
    }
  }
  if (best != sigs.size()) {
    r.min_value = values[best];
    r.minimizer = {{"signature", sigs[best]}, {"delta", to_json(delta(TupleSignature(sigs[best])))}};
  }
  r.elapsed_ms = clock.ms();
  return r;
}

enum class GraphMode { trees, all_graphs };

// Smallest spectral radius of a Coxeter element over indefinite connected
// simply-laced graphs with at most nmax vertices. Trees use one ordering
// (the characteristic polynomial of a tree does not depend on it). In
// all-graphs mode every labelled graph is taken with the identity ordering,
// which covers every (graph, acyclic orientation) pair. Ties go to the
// smallest (vertex count, encoding); the runner-up is the best value among
// graphs not isomorphic to the minimizer.
inline SearchReport min_spectral_radius(int nmax, GraphMode mode, double tol = kDefaultModulusTol) {
  if (mode == GraphMode::trees && (nmax < 1 || nmax > 10))
    throw DomainError("tree mode supports 1 <= nmax <= 10");
  if (mode == GraphMode::all_graphs && (nmax < 1 || nmax > 7))
    throw DomainError("all-graphs mode supports 1 <= nmax <= 7");
  detail::Stopwatch clock;

  // Each instance is a (vertex count, code) pair with code a tree index or
  // an edge mask.
  struct Bucket {
    double value;
    std::vector<std::pair<int, std::uint64_t>> instances;
  };
  using Buckets = std::map<std::vector<BigInt>, Bucket>;
  std::vector<CoxeterGraph> trees;
  std::vector<std::pair<int, std::uint64_t>> ranges;  // (n, first mask) per chunk
  constexpr std::uint64_t kMasksPerChunk = 1u << 14;
  if (mode == GraphMode::trees) {
    trees = enumerate_trees(nmax);
  } else {
    for (int n = 1; n <= nmax; ++n) {
      const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
      for (std::uint64_t m = 0; m < total; m += kMasksPerChunk) ranges.emplace_back(n, m);
    }
  }
  auto graph_of = [&](int n, std::uint64_t code) {
    return mode == GraphMode::trees ? trees[code] : to_coxeter(graph_from_mask(n, code));
  };

  const std::size_t chunks = mode == GraphMode::trees ? 1 : ranges.size();
  std::vector<Buckets> partial(chunks);
  std::vector<std::size_t> counted(chunks, 0);
  parallel_chunks(chunks, [&](std::size_t c) {
    detail::RadiusCache radius(tol);
    auto visit = [&](const CoxeterGraph& g, int n, std::uint64_t code) {
      if (classify_simply_laced(g) != Kind::indefinite) return;
      ++counted[c];
      IntPolynomial p = char_poly_coxeter(g, Ordering::identity(n));
      auto [it, fresh] = partial[c].try_emplace(p.coeffs());
      if (fresh) it->second.value = radius(p);
      it->second.instances.emplace_back(n, code);
    };
    if (mode == GraphMode::trees) {
      for (std::size_t i = 0; i < trees.size(); ++i) visit(trees[i], trees[i].size(), i);
    } else {
      const auto [n, first] = ranges[c];
      const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
      for (std::uint64_t m = first; m < std::min(total, first + kMasksPerChunk); ++m) {
        SimpleGraph s = graph_from_mask(n, m);
        if (!is_connected(s)) continue;
        visit(to_coxeter(s), n, m);
      }
    }
  });

  Buckets all;
  SearchReport r;
  for (std::size_t c = 0; c < chunks; ++c) {
    r.examined += counted[c];
    for (auto& [key, b] : partial[c]) {
      auto [it, fresh] = all.try_emplace(key, Bucket{b.value, {}});
      it->second.instances.insert(it->second.instances.end(), b.instances.begin(), b.instances.end());
    }
  }
  std::vector<const Bucket*> order;
  for (auto& [key, b] : all) {
    std::sort(b.instances.begin(), b.instances.end());
    order.push_back(&b);
  }
  std::sort(order.begin(), order.end(), [](const Bucket* a, const Bucket* b) {
    return a->value != b->value ? a->value < b->value : a->instances.front() < b->instances.front();
  });

  r.family = std::string(mode == GraphMode::trees ? "trees" : "connected graphs") + " with at most " +
             std::to_string(nmax) + " vertices, indefinite";
  r.tol = tol;
  if (!order.empty()) {
    // Among all buckets with the minimal value, the smallest instance.
    std::pair<int, std::uint64_t> best = order.front()->instances.front();
    for (const Bucket* b : order) {
      if (b->value != order.front()->value) break;
      best = std::min(best, b->instances.front());
    }
    r.min_value = order.front()->value;
    const CoxeterGraph g = graph_of(best.first, best.second);
    r.minimizer = {{"graph", to_json(g)}, {"order", to_json(Ordering::identity(g.size()))}};
    const SimpleGraph gs = to_simple(g);
    for (const Bucket* b : order) {
      bool other = false;
      for (const auto& [n, code] : b->instances)
        if (n != gs.n || !isomorphic(to_simple(graph_of(n, code)), gs)) {
          other = true;
          break;
        }
      if (other) {
        r.runner_up = b->value;
        break;
      }
    }
  }
  r.elapsed_ms = clock.ms();
  return r;
}

struct OrderingGroup {
  ArcList key;
  std::size_t structures = 0;
  std::size_t systems = 0;
  OrderedChordSystem representative;
  IntPolynomial alexander;
};

struct OrderingScan {
  std::string family;
  std::size_t examined = 0;  // positive (orientation, order) pairs
  std::vector<OrderingGroup> groups;
  double elapsed_ms = 0.0;
};

// Groups the positive systems on d as enumerate_positive_orderings does
// and checks that the Alexander polynomial is constant on every directed
// incidence structure and on every group. Throws InvariantViolation
// otherwise.
inline OrderingScan ordering_invariance_scan(const ChordDiagram& d) {
  if (d.size() > 8) throw DomainError("ordering_invariance_scan supports at most 8 chords");
  detail::Stopwatch clock;
  OrderingScan scan;
  scan.family = "positive orderings of " + to_string(d);
  const auto autos = automorphisms(to_simple(incidence_graph(d)));
  std::map<ArcList, IntPolynomial> per_structure;
  std::map<ArcList, std::size_t> group_of;
  for_each_positive_sequence(d, [&](const OrderedChordSystem& sys, const ArcList& key, std::size_t orientations) {
    scan.examined += orientations;
    const IntPolynomial a = alexander(seifert_matrix(sys));
    auto [sit, new_structure] = per_structure.try_emplace(key, a);
    if (!new_structure && sit->second != a)
      throw InvariantViolation("Alexander polynomial differs on one directed incidence structure: " +
                               to_string(sit->second) + " vs " + to_string(a));
    const ArcList ckey = flip_class_key(key, d.size(), autos);
    auto [git, fresh] = group_of.try_emplace(ckey, scan.groups.size());
    if (fresh) scan.groups.push_back({ckey, 0, 0, sys, a});
    auto& grp = scan.groups[git->second];
    if (grp.alexander != a)
      throw InvariantViolation("Alexander polynomial differs within one class of positive orderings: " +
                               to_string(grp.alexander) + " vs " + to_string(a));
    if (new_structure) ++grp.structures;
    grp.systems += orientations;
  });
  scan.elapsed_ms = clock.ms();
  return scan;
}

inline nlohmann::json to_json(const OrderingScan& s) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : s.groups) {
    nlohmann::json arcs = nlohmann::json::array();
    for (auto [u, v] : g.key) arcs.push_back({u + 1, v + 1});
    groups.push_back({{"arcs", arcs},
                      {"structures", g.structures},
                      {"systems", g.systems},
                      {"representative", to_json(g.representative)},
                      {"alexander", to_json(g.alexander)},
                      {"alexander_text", to_string(g.alexander)}});
  }
  return {{"family", s.family}, {"examined", s.examined}, {"groups", groups}, {"elapsed_ms", s.elapsed_ms}};
}

}  // namespace coxlink
