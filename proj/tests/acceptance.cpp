// Acceptance run: one PASS/FAIL line per criterion, with wall time and the
// time budget. Exit status is the number of failed criteria.

#include "coxlink/chords.hpp"
#include "coxlink/coxeter.hpp"
#include "coxlink/graphs.hpp"
#include "coxlink/growth.hpp"
#include "coxlink/intpoly.hpp"
#include "coxlink/roots.hpp"
#include "coxlink/search.hpp"
#include "coxlink/seifert.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace coxlink;

namespace {

constexpr double kLehmer = 1.17628081825991750654;

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }
  void note(const std::string& s) {
    if (out_.ok) out_.detail = s;
  }
  Outcome outcome() const { return out_; }

 private:
  Outcome out_;
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<void(Check&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const Outcome o = c.outcome();
  const bool ok = o.ok && secs < budget_s;
  if (!ok) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (ok ? "PASS" : "FAIL") << "  " << id << ". " << name << "  [" << secs << " s / " << budget_s << " s]";
  if (!o.detail.empty()) line << "  " << o.detail;
  if (o.ok && secs >= budget_s) line << "  over time budget";
  std::cout << line.str() << std::endl;
}

std::vector<int> random_sequence(int n, std::mt19937_64& rng) {
  std::vector<int> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  std::shuffle(seq.begin(), seq.end(), rng);
  return seq;
}

ChordDiagram random_diagram(int n, std::mt19937_64& rng) {
  std::vector<int> ids;
  for (int c = 0; c < n; ++c) ids.insert(ids.end(), {c, c});
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<Endpoint> word;
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int c : ids) word.push_back({c, seen[static_cast<std::size_t>(c)]++ > 0});
  return ChordDiagram(std::move(word));
}

// A random linear extension of the crossing order of `seq`.
std::vector<int> random_extension(const ChordDiagram& d, const std::vector<int>& seq, std::mt19937_64& rng) {
  const int n = d.size();
  std::vector<int> index(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) index[static_cast<std::size_t>(seq[static_cast<std::size_t>(k)])] = k;
  std::vector<int> indeg(static_cast<std::size_t>(n), 0), out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (d.crosses(a, b) && index[static_cast<std::size_t>(a)] < index[static_cast<std::size_t>(b)]) ++indeg[static_cast<std::size_t>(b)];
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  while (static_cast<int>(out.size()) < n) {
    std::vector<int> ready;
    for (int v = 0; v < n; ++v)
      if (!used[static_cast<std::size_t>(v)] && indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    const int v = ready[rng() % ready.size()];
    used[static_cast<std::size_t>(v)] = true;
    out.push_back(v);
    for (int b = 0; b < n; ++b)
      if (d.crosses(v, b) && index[static_cast<std::size_t>(v)] < index[static_cast<std::size_t>(b)]) --indeg[static_cast<std::size_t>(b)];
  }
  return out;
}

CoxeterGraph one_vertex_join(const CoxeterGraph& a, const CoxeterGraph& b) {
  // b's vertex 0 is identified with a's vertex 0.
  CoxeterGraph g(a.size() + b.size() - 1);
  for (const auto& e : a.edges()) g.add_edge(e.u, e.v);
  auto map = [&](int v) { return v == 0 ? 0 : a.size() + v - 1; };
  for (const auto& e : b.edges()) g.add_edge(map(e.u), map(e.v));
  return g;
}

CoxeterGraph cube() {
  CoxeterGraph q(8);
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit)
      if (v < (v ^ (1 << bit))) q.add_edge(v, v ^ (1 << bit));
  return q;
}

}  // namespace

int main() {
  const IntPolynomial pl = lehmer_polynomial();

  criterion(1, "Lehmer identity chain", 1.0, [&](Check& c) {
    c.expect(delta(TupleSignature{2, 3, 7}) == pl, "delta(2,3,7) != P_L");
    const CoxeterGraph e10 = dynkin_e(10);
    std::mt19937_64 rng(1);
    std::vector<std::vector<int>> orders{random_sequence(10, rng)};
    std::vector<int> rev(10);
    std::iota(rev.rbegin(), rev.rend(), 0);
    orders.push_back(rev);
    for (int i = 0; i < 48; ++i) orders.push_back(random_sequence(10, rng));
    for (const auto& seq : orders)
      c.expect(char_poly_coxeter(e10, Ordering::from_sequence(seq)) == pl, "E10 char poly != P_L for some ordering");
    c.expect(equal_up_to_unit(pretzel_alexander(TupleSignature{2, 3, 7}), pl.negate_variable()),
             "pretzel_alexander(2,3,7) != P_L(-x)");
    c.note("50 orderings of E10");
  });

  criterion(2, "Mahler values", 1.0, [&](Check& c) {
    const double m1 = mahler_measure(pl), m2 = mahler_measure(IntPolynomial{1, -1, 0, 1});
    c.expect(std::fabs(m1 - 1.17628) <= 1e-4, "M(P_L) = " + std::to_string(m1));
    c.expect(std::fabs(m2 - 1.32472) <= 1e-4, "M(x^3-x+1) = " + std::to_string(m2));
    std::ostringstream s;
    s.precision(12);
    s << "M(P_L)=" << m1 << " M(x^3-x+1)=" << m2;
    c.note(s.str());
  });

  criterion(3, "5-cycle fixtures", 5.0, [&](Check& c) {
    const auto first = system_from_json(nlohmann::json::parse(
        R"({"order":[1,2,3,4,5],"word":[[4,"head"],[5,"head"],[3,"tail"],[4,"tail"],[2,"head"],[3,"head"],[1,"tail"],[2,"tail"],[5,"tail"],[1,"head"]]})"));
    const auto second = system_from_json(nlohmann::json::parse(
        R"({"order":[1,3,2,5,4],"word":[[4,"tail"],[5,"head"],[3,"head"],[4,"head"],[2,"head"],[3,"tail"],[1,"tail"],[2,"tail"],[5,"tail"],[1,"head"]]})"));
    c.expect(first.diagram().word().size() == 10 && second.diagram().word().size() == 10, "bad fixture");
    const IntMatrix m1{{1, -1, 0, 0, -1}, {0, 1, -1, 0, 0}, {0, 0, 1, -1, 0}, {0, 0, 0, 1, -1}, {0, 0, 0, 0, 1}};
    const IntMatrix m2{{1, 0, -1, -1, 0}, {0, 1, -1, 0, -1}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, -1}, {0, 0, 0, 0, 1}};
    const SeifertMatrix s1 = seifert_matrix(first), s2 = seifert_matrix(second);
    c.expect(s1.matrix() == m1, "first Seifert matrix differs");
    c.expect(s2.matrix() == m2, "second Seifert matrix differs");
    c.expect(equal_up_to_unit(alexander(s1).negate_variable(), IntPolynomial{1, -1, 0, 0, -1, 1}), "Delta_1(-t) differs");
    c.expect(equal_up_to_unit(alexander(s2).negate_variable(), IntPolynomial{1, 0, -1, -1, 0, 1}), "Delta_2(-t) differs");
    const auto classes = enumerate_positive_orderings(first.diagram());
    c.expect(classes.classes.size() == 2, "C5 classes = " + std::to_string(classes.classes.size()));
    c.note("classes=" + std::to_string(classes.classes.size()) + " positive systems=" + std::to_string(classes.positive_systems));
  });

  criterion(4, "Classification suite", 120.0, [&](Check& c) {
    for (int n = 1; n <= 9; ++n) c.expect(classify(path_graph(n)).kind == Kind::spherical, "A" + std::to_string(n));
    for (int n = 4; n <= 9; ++n) c.expect(classify(dynkin_d(n)).kind == Kind::spherical, "D" + std::to_string(n));
    for (int n : {6, 7, 8}) c.expect(classify(dynkin_e(n)).kind == Kind::spherical, "E" + std::to_string(n));
    for (int n = 1; n <= 8; ++n) c.expect(classify(cycle_graph(n + 1)).kind == Kind::affine, "affine A" + std::to_string(n));
    for (int n : {6, 7, 8}) c.expect(classify(affine_e(n)).kind == Kind::affine, "affine E" + std::to_string(n));
    c.expect(classify(dynkin_e(10)).kind == Kind::indefinite, "E10");
    c.expect(classify(triangle_with_tail()).kind == Kind::indefinite, "triangle with tail");
    // Every labelled graph with the identity ordering realizes every
    // (graph, acyclic orientation) pair, and the Coxeter element's
    // characteristic polynomial depends only on that orientation.
    std::map<std::vector<BigInt>, double> radius;
    std::size_t graphs = 0, mismatches = 0;
    for (int n = 1; n <= 7; ++n)
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
        const CoxeterGraph g = to_coxeter(graph_from_mask(n, mask));
        const Kind kind = classify_simply_laced(g);
        const IntPolynomial p = char_poly_coxeter(g, Ordering::identity(n));
        auto it = radius.find(p.coeffs());
        if (it == radius.end()) it = radius.emplace(p.coeffs(), max_root_modulus(p)).first;
        const bool on_circle = std::fabs(it->second - 1.0) <= 1e-8;
        if (on_circle != (kind != Kind::indefinite)) ++mismatches;
        ++graphs;
      }
    c.expect(mismatches == 0, std::to_string(mismatches) + " radius/kind mismatches");
    c.note(std::to_string(graphs) + " labelled graphs, " + std::to_string(radius.size()) + " char polys, 0 mismatches");
  });

  criterion(5, "Eigenvalue location", 30.0, [&](Check& c) {
    std::mt19937_64 rng(5);
    double worst = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 7);
      const CoxeterGraph g = to_coxeter(graph_from_mask(n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1)));
      const auto ord = Ordering::from_sequence(random_sequence(n, rng));
      for (const auto& z : find_roots(char_poly_coxeter(g, ord)).roots)
        worst = std::max(worst, std::min(std::fabs(z.imag()), std::fabs(std::abs(z) - 1.0)));
    }
    c.expect(worst <= 1e-8, "worst distance " + std::to_string(worst));
    std::ostringstream s;
    s << "200 pairs, worst distance " << worst;
    c.note(s.str());
  });

  criterion(6, "Tuple minimality", 120.0, [&](Check& c) {
    const SearchReport r = min_mahler_delta(4, 16);
    c.expect(r.minimizer["signature"] == nlohmann::json::array({2, 3, 7}), "minimizer " + r.minimizer["signature"].dump());
    c.expect(std::fabs(r.min_value - 1.17628) <= 1e-4, "min " + std::to_string(r.min_value));
    c.expect(r.runner_up > r.min_value, "runner-up not larger");
    std::ostringstream s;
    s.precision(9);
    s << r.examined << " signatures, min " << r.min_value << ", runner-up " << r.runner_up;
    c.note(s.str());
  });

  criterion(7, "Tree minimality", 300.0, [&](Check& c) {
    const SearchReport trees = min_spectral_radius(10, GraphMode::trees);
    c.expect(isomorphic(graph_from_json(trees.minimizer["graph"]), dynkin_e(10)), "tree minimizer is not E10");
    c.expect(std::fabs(trees.min_value - 1.17628) <= 1e-4, "tree min " + std::to_string(trees.min_value));
    const SearchReport all = min_spectral_radius(7, GraphMode::all_graphs);
    c.expect(all.min_value >= kLehmer - 1e-9, "graph min " + std::to_string(all.min_value));
    std::ostringstream s;
    s.precision(9);
    s << "trees min " << trees.min_value << "; graphs (n<=7) min " << all.min_value;
    c.note(s.str());
  });

  criterion(8, "Excess minimality", 60.0, [&](Check& c) {
    // Excess rises with every p_i, so a prefix whose cheapest completion is
    // already no better than the best found can be cut.
    Rational best = -1;
    std::vector<std::vector<int>> argmin;
    std::size_t visited = 0, prefixes = 0;
    std::vector<int> ps;
    std::function<void(int, int, Rational)> rec = [&](int k, int lo, Rational used) {
      const int left = k - static_cast<int>(ps.size());
      if (left == 0) {
        ++visited;
        const Rational e = excess(TupleSignature(ps));
        if (e != Rational(k - 2) - used) throw std::logic_error("excess mismatch");
        if (e <= 0) return;
        if (best < 0 || e < best) {
          best = e;
          argmin = {ps};
        } else if (e == best) {
          argmin.push_back(ps);
        }
        return;
      }
      for (int q = lo; q <= 100; ++q) {
        const Rational cheapest = Rational(k - 2) - used - Rational(left, q);
        const Rational dearest = Rational(k - 2) - used - Rational(1, q) - Rational(left - 1, 100);
        if (best >= 0 && cheapest > best) break;
        if (dearest <= 0) continue;
        ++prefixes;
        ps.push_back(q);
        rec(k, q, used + Rational(1, q));
        ps.pop_back();
      }
    };
    for (int k = 2; k <= 6; ++k) rec(k, 2, 0);
    c.expect(best == Rational(1, 42), "minimum " + to_string(best));
    c.expect(argmin.size() == 1 && argmin[0] == std::vector<int>{2, 3, 7}, "minimizer is not unique (2,3,7)");
    c.note("min excess " + to_string(best) + " at (2,3,7), " + std::to_string(prefixes) + " prefixes explored, " +
           std::to_string(visited) + " complete signatures evaluated");
  });

  criterion(9, "Cross-module identities", 60.0, [&](Check& c) {
    std::mt19937_64 rng(9);
    std::size_t extensions = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 1 + trial % 7;
      const ChordDiagram d = random_diagram(n, rng);
      const OrderedChordSystem base = make_positive(d);
      std::vector<int> seq = random_extension(base.diagram(), base.sequence(), rng);
      const OrderedChordSystem sys = OrderedChordSystem::from_sequence(*positive_orientation(base.diagram(), seq), seq);
      const SeifertMatrix s = seifert_matrix(sys);
      const IntMatrix& m = s.matrix();
      const CoxeterGraph g = incidence_graph(sys.diagram());
      const IntMatrix b = bilinear_form(g).integer;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          c.expect(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) + m(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) ==
                       b(static_cast<std::size_t>(sys.chord_at(i)), static_cast<std::size_t>(sys.chord_at(j))),
                   "M + M^t != B");
      c.expect(char_poly(coxeter_from_link(s)) == char_poly_coxeter(g, sys.ordering()), "link and Coxeter char polys differ");
      const IntPolynomial a = alexander(s);
      const IntPolynomial rev(std::vector<BigInt>(a.coeffs().rbegin(), a.coeffs().rend()));
      c.expect(rev == a || rev == -a, "Alexander polynomial not reciprocal");
      const ArcList key = directed_incidence(sys.diagram(), sys.sequence());
      for (int k = 0; k < 20; ++k) {
        const std::vector<int> other = random_extension(sys.diagram(), sys.sequence(), rng);
        const auto oriented = positive_orientation(sys.diagram(), other);
        c.expect(oriented.has_value(), "linear extension admits no positive orientation");
        if (!oriented) continue;
        const OrderedChordSystem alt = OrderedChordSystem::from_sequence(*oriented, other);
        c.expect(directed_incidence(alt.diagram(), other) == key, "directed structure changed");
        c.expect(alexander(seifert_matrix(alt)) == a, "Alexander differs on equal directed structure");
        ++extensions;
      }
    }
    c.note("100 systems, " + std::to_string(extensions) + " same-structure reorderings");
  });

  criterion(10, "Realizability", 600.0, [&](Check& c) {
    std::vector<CoxeterGraph> base;
    for (const auto& t : enumerate_free_trees(8)) base.push_back(to_coxeter(t));
    const std::size_t trees = base.size();
    for (int n = 3; n <= 8; ++n) base.push_back(cycle_graph(n));
    for (int n = 3; n <= 5; ++n) base.push_back(complete_graph(n));
    std::vector<CoxeterGraph> targets = base;
    // One-vertex joins of the cycles and complete graphs with each other and
    // with the small trees, up to 10 vertices.
    for (std::size_t i = trees; i < base.size(); ++i)
      for (std::size_t j = 0; j < base.size(); ++j) {
        if (j < trees && base[j].size() > 5) continue;
        if (base[i].size() + base[j].size() - 1 <= 10) targets.push_back(one_vertex_join(base[i], base[j]));
      }
    std::size_t realized = 0;
    for (const auto& g : targets) {
      const auto d = realize(g);
      c.expect(d.has_value(), "no realization for " + to_json(g).dump());
      if (!d) continue;
      c.expect(isomorphic(incidence_graph(*d), g), "realization has the wrong incidence graph");
      ++realized;
    }
    const CoxeterGraph q3 = cube();
    const auto w = obstruction(q3);
    c.expect(w.has_value() && verify_witness(q3, *w), "no verified witness on Q3");
    bool definitive = false;
    try {
      definitive = !realize(q3).has_value();
    } catch (const InconclusiveError&) {
    }
    c.expect(definitive, "realize(Q3) is not a definitive none");
    std::size_t witnessed = 0, checked = 0;
    for (int n = 1; n <= 8; ++n)
      for (const auto& s : enumerate_graphs(n)) {
        const CoxeterGraph g = to_coxeter(s);
        ++checked;
        if (auto wit = obstruction(g)) {
          ++witnessed;
          c.expect(verify_witness(g, *wit), "unverifiable witness");
          c.expect(!realize(g).has_value(), "obstructed graph was realized");
        }
      }
    c.note(std::to_string(realized) + " graphs realized; Q3 obstructed and unrealizable; " + std::to_string(checked) +
           " graphs (n<=8) checked, " + std::to_string(witnessed) + " with witnesses, none realizable");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures;
}
