#pragma once

// Coxeter graphs, their bilinear forms, reflections and Coxeter elements.
//
// Vertices are 0-based in the C++ API and 1-based in JSON and on the
// command line. An absent edge means m_ij = 2; the label kInfinity (0)
// stands for m_ij = infinity.
//
// The Coxeter element for an ordering v_1, ..., v_n is the matrix product
// S_{v_1} S_{v_2} ... S_{v_n}, so S_{v_n} acts first on a column vector.
// Only conjugation-invariant data (characteristic polynomial, spectrum) is
// relied upon elsewhere.

#include "coxlink/algebra.hpp"
#include "coxlink/core.hpp"
#include "coxlink/intpoly.hpp"
#include "coxlink/roots.hpp"

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

namespace coxlink {

inline constexpr int kInfinity = 0;

struct Edge {
  int u;
  int v;  // u < v
  int label;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class CoxeterGraph {
 public:
  CoxeterGraph() = default;
  explicit CoxeterGraph(int n) : n_(n) {
    if (n < 0) throw DomainError("vertex count must be non-negative");
  }

  int size() const { return n_; }

  void add_edge(int u, int v, int label = 3) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u + 1));
    if (label != kInfinity && label < 3)
      throw DomainError("edge label must be >= 3 or infinity (0), got " + std::to_string(label));
    if (u > v) std::swap(u, v);
    if (!labels_.emplace(std::pair{u, v}, label).second)
      throw DomainError("duplicate edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1));
  }

  bool adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return labels_.count({u, v}) != 0;
  }

  // m_uv, with 2 for non-adjacent distinct vertices and 1 on the diagonal.
  int label(int u, int v) const {
    if (u == v) return 1;
    if (u > v) std::swap(u, v);
    auto it = labels_.find({u, v});
    return it == labels_.end() ? 2 : it->second;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(labels_.size());
    for (const auto& [key, lab] : labels_) out.push_back({key.first, key.second, lab});
    return out;
  }

  std::size_t edge_count() const { return labels_.size(); }

  std::vector<int> neighbors(int u) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
      if (v != u && adjacent(u, v)) out.push_back(v);
    return out;
  }

  bool simply_laced() const {
    return std::all_of(labels_.begin(), labels_.end(), [](const auto& kv) { return kv.second == 3; });
  }

  void check_vertex(int u) const {
    if (u < 0 || u >= n_)
      throw DomainError("vertex " + std::to_string(u + 1) + " out of range 1.." + std::to_string(n_));
  }

  friend bool operator==(const CoxeterGraph&, const CoxeterGraph&) = default;

 private:
  int n_ = 0;
  std::map<std::pair<int, int>, int> labels_;
};

// position[v] is the index of vertex v in the product s_1 ... s_n.
class Ordering {
 public:
  Ordering() = default;
  explicit Ordering(std::vector<int> position) : position_(std::move(position)) {
    std::vector<int> seen(position_.size(), 0);
    for (int p : position_) {
      if (p < 0 || p >= static_cast<int>(position_.size()) || seen[static_cast<std::size_t>(p)]++)
        throw DomainError("ordering is not a permutation");
    }
  }
  static Ordering identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return Ordering(std::move(p));
  }
  // seq[k] is the vertex placed k-th.
  static Ordering from_sequence(const std::vector<int>& seq) {
    std::vector<int> pos(seq.size(), -1);
    for (std::size_t k = 0; k < seq.size(); ++k) {
      int v = seq[k];
      if (v < 0 || v >= static_cast<int>(seq.size()) || pos[static_cast<std::size_t>(v)] != -1)
        throw DomainError("ordering sequence is not a permutation");
      pos[static_cast<std::size_t>(v)] = static_cast<int>(k);
    }
    return Ordering(std::move(pos));
  }

  int size() const { return static_cast<int>(position_.size()); }
  int position(int v) const { return position_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& positions() const { return position_; }
  std::vector<int> sequence() const {
    std::vector<int> seq(position_.size());
    for (std::size_t v = 0; v < position_.size(); ++v) seq[static_cast<std::size_t>(position_[v])] = static_cast<int>(v);
    return seq;
  }
  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  std::vector<int> position_;
};

struct BilinearForm {
  bool exact = false;    // simply-laced: integer entries 2, -1, 0
  IntMatrix integer;     // valid when exact
  Matrix<double> real;   // always valid
};

inline double form_entry(int m) {
  if (m == 1) return 2.0;
  if (m == 2) return 0.0;
  if (m == kInfinity) return -2.0;
  if (m == 3) return -1.0;
  return -2.0 * std::cos(std::numbers::pi / m);
}

inline BilinearForm bilinear_form(const CoxeterGraph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  BilinearForm b;
  b.exact = g.simply_laced();
  b.real = Matrix<double>(n, n);
  if (b.exact) b.integer = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int m = g.label(static_cast<int>(i), static_cast<int>(j));
      b.real(i, j) = form_entry(m);
      if (b.exact) b.integer(i, j) = m == 1 ? 2 : (m == 3 ? -1 : 0);
    }
  return b;
}

namespace detail {

inline void require_simply_laced(const CoxeterGraph& g, const char* what) {
  if (!g.simply_laced())
    throw UnsupportedError(std::string(what) +
                           " is exact only for simply-laced graphs; use the numeric spectral radius instead");
}

// C <- C * S_i where S_i = I - e_i B_i.
template <class T>
void right_multiply_reflection(Matrix<T>& c, const Matrix<T>& b, std::size_t i) {
  const std::size_t n = c.rows();
  for (std::size_t r = 0; r < n; ++r) {
    const T ci = c(r, i);
    if (ci == T(0)) continue;
    for (std::size_t j = 0; j < n; ++j) c(r, j) -= ci * b(i, j);
  }
}

template <class T>
Matrix<T> reflection_from_form(const Matrix<T>& b, std::size_t i) {
  Matrix<T> s = Matrix<T>::identity(b.rows());
  for (std::size_t j = 0; j < b.rows(); ++j) s(i, j) -= b(i, j);
  return s;
}

template <class T>
Matrix<T> coxeter_from_form(const Matrix<T>& b, const Ordering& ord) {
  Matrix<T> c = Matrix<T>::identity(b.rows());
  for (int v : ord.sequence()) right_multiply_reflection(c, b, static_cast<std::size_t>(v));
  return c;
}

}  // namespace detail

// s_i(e_j) = e_j - <e_i, e_j> e_i, as a matrix acting on column vectors.
inline Matrix<double> reflection_matrix(const CoxeterGraph& g, int i) {
  g.check_vertex(i);
  return detail::reflection_from_form(bilinear_form(g).real, static_cast<std::size_t>(i));
}

inline IntMatrix reflection_matrix_exact(const CoxeterGraph& g, int i) {
  g.check_vertex(i);
  detail::require_simply_laced(g, "integer reflection matrix");
  return detail::reflection_from_form(bilinear_form(g).integer, static_cast<std::size_t>(i));
}

inline void check_ordering(const CoxeterGraph& g, const Ordering& ord) {
  if (ord.size() != g.size()) throw DomainError("ordering size does not match the graph");
}

inline Matrix<double> coxeter_element(const CoxeterGraph& g, const Ordering& ord) {
  check_ordering(g, ord);
  return detail::coxeter_from_form(bilinear_form(g).real, ord);
}

inline IntMatrix coxeter_element_exact(const CoxeterGraph& g, const Ordering& ord) {
  check_ordering(g, ord);
  detail::require_simply_laced(g, "integer Coxeter element");
  return detail::coxeter_from_form(bilinear_form(g).integer, ord);
}

// det(tI - C), exact.
inline IntPolynomial char_poly_coxeter(const CoxeterGraph& g, const Ordering& ord) {
  detail::require_simply_laced(g, "characteristic polynomial");
  return char_poly(coxeter_element_exact(g, ord));
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

enum class Kind { spherical = 0, affine = 1, indefinite = 2 };

inline const char* to_string(Kind k) {
  switch (k) {
    case Kind::spherical: return "spherical";
    case Kind::affine: return "affine";
    case Kind::indefinite: return "indefinite";
  }
  return "?";
}

struct ComponentCertificate {
  std::vector<int> vertices;
  Kind kind = Kind::spherical;
  bool exact = false;
  // exact path
  std::vector<BigInt> minors;  // leading principal minors in vertex order
  std::vector<BigInt> kernel;  // primitive positive kernel vector (affine only)
  // numeric path
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

struct Classification {
  Kind kind = Kind::spherical;
  std::vector<ComponentCertificate> components;
};

inline constexpr double kEigenTol = 1e-9;

inline std::vector<std::vector<int>> connected_components(const CoxeterGraph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.size()), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.size(); ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<int> members{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int w : g.neighbors(members[k]))
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

namespace detail {

inline std::vector<BigInt> minors_of(const IntMatrix& b) {
  try {
    auto m = leading_principal_minors(convert<SafeInt>(b));
    std::vector<BigInt> out;
    for (auto v : m) out.emplace_back(v.value());
    return out;
  } catch (const Overflow&) {
    return leading_principal_minors(convert<BigInt>(b));
  }
}

// Connected, integer form: spherical iff every leading minor is positive;
// affine iff D_1..D_{n-1} > 0 and D_n = 0 (interlacing then forces a single
// zero eigenvalue); indefinite otherwise.
inline Kind kind_from_minors(const std::vector<BigInt>& minors) {
  const std::size_t n = minors.size();
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (minors[k] <= 0) return Kind::indefinite;
  if (n == 0 || minors[n - 1] > 0) return Kind::spherical;
  return minors[n - 1] == 0 ? Kind::affine : Kind::indefinite;
}

// Last column of the adjugate, reduced: spans the kernel of a corank-one form.
inline std::vector<BigInt> kernel_vector(const IntMatrix& b) {
  const std::size_t n = b.rows();
  std::vector<BigInt> k(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigMatrix minor(n - 1, n - 1);
    for (std::size_t r = 0, rr = 0; r < n; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0; c + 1 < n; ++c) minor(rr, c) = b(r, c);
      ++rr;
    }
    BigInt d = bareiss_determinant(minor);
    k[i] = ((i + n - 1) % 2 == 0) ? d : BigInt(-d);
  }
  BigInt g = 0;
  for (const auto& v : k) g = boost::multiprecision::gcd(g, v);
  if (g != 0) {
    for (auto& v : k) v /= g;
    if (k.back() < 0)
      for (auto& v : k) v = -v;
  }
  return k;
}

template <class Real>
std::pair<Real, Real> extreme_eigenvalues(const Matrix<double>& b) {
  using M = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  const auto n = static_cast<Eigen::Index>(b.rows());
  M m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = static_cast<Real>(b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  Eigen::SelfAdjointEigenSolver<M> es(m, Eigen::EigenvaluesOnly);
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

inline ComponentCertificate classify_component(const CoxeterGraph& g, const std::vector<int>& verts) {
  ComponentCertificate cert;
  cert.vertices = verts;
  const std::size_t n = verts.size();
  CoxeterGraph sub(static_cast<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      int m = g.label(verts[a], verts[b]);
      if (m != 2) sub.add_edge(static_cast<int>(a), static_cast<int>(b), m);
    }
  BilinearForm form = bilinear_form(sub);
  if (form.exact) {
    cert.exact = true;
    cert.minors = minors_of(form.integer);
    cert.kind = kind_from_minors(cert.minors);
    if (cert.kind == Kind::affine) cert.kernel = kernel_vector(form.integer);
    return cert;
  }
  auto [lo, hi] = extreme_eigenvalues<double>(form.real);
  if (std::fabs(lo) > 1e-12 && std::fabs(lo) <= kEigenTol) {
    auto [lo_ld, hi_ld] = extreme_eigenvalues<long double>(form.real);
    lo = static_cast<double>(lo_ld);
    hi = static_cast<double>(hi_ld);
    if (std::fabs(lo) > 1e-15 && std::fabs(lo) <= kEigenTol)
      throw AmbiguityError("smallest eigenvalue " + std::to_string(lo) + " cannot be separated from 0");
  }
  cert.min_eigenvalue = lo;
  cert.max_eigenvalue = hi;
  cert.kind = lo > kEigenTol ? Kind::spherical : (lo < -kEigenTol ? Kind::indefinite : Kind::affine);
  return cert;
}

}  // namespace detail

// Spherical iff B is positive definite, affine iff positive semidefinite and
// singular; decided per connected component, the overall kind being the
// worst one.
inline Classification classify(const CoxeterGraph& g) {
  Classification c;
  for (const auto& comp : connected_components(g)) {
    c.components.push_back(detail::classify_component(g, comp));
    c.kind = std::max(c.kind, c.components.back().kind);
  }
  return c;
}

// Fast exact kind for a simply-laced integer form (all components at once).
inline Kind classify_simply_laced(const CoxeterGraph& g) {
  Kind k = Kind::spherical;
  for (const auto& comp : connected_components(g)) {
    const std::size_t n = comp.size();
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        b(i, j) = i == j ? 2 : (g.adjacent(comp[i], comp[j]) ? -1 : 0);
    k = std::max(k, detail::kind_from_minors(detail::minors_of(b)));
    if (k == Kind::indefinite) break;
  }
  return k;
}

// Largest |eigenvalue| of the Coxeter element. Simply-laced graphs go
// through the exact characteristic polynomial and certified roots; other
// labels use a long double eigensolver, whose accuracy on defective
// eigenvalues (affine Jordan blocks) is about sqrt(machine epsilon).
inline double spectral_radius(const CoxeterGraph& g, const Ordering& ord, double tol = kDefaultRootTol) {
  check_ordering(g, ord);
  if (g.size() == 0) return 0.0;
  if (g.simply_laced()) return max_root_modulus(char_poly_coxeter(g, ord), tol);
  using M = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const auto n = static_cast<Eigen::Index>(g.size());
  Matrix<long double> bl(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < bl.rows(); ++i)
    for (std::size_t j = 0; j < bl.cols(); ++j) {
      int m = g.label(static_cast<int>(i), static_cast<int>(j));
      bl(i, j) = m == 1 ? 2.0L
                 : m == 2 ? 0.0L
                 : m == kInfinity ? -2.0L
                 : -2.0L * std::cos(std::numbers::pi_v<long double> / m);
    }
  Matrix<long double> cl = detail::coxeter_from_form(bl, ord);
  M m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = cl(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  Eigen::EigenSolver<M> es(m, false);
  long double r = 0;
  for (Eigen::Index i = 0; i < n; ++i) r = std::max(r, std::abs(es.eigenvalues()[i]));
  return static_cast<double>(r);
}

// ---------------------------------------------------------------------------
// Directed graphs
// ---------------------------------------------------------------------------

struct Arc {
  int from;
  int to;
  int label;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct DirectedCoxeterGraph {
  CoxeterGraph graph;
  std::vector<Arc> arcs;  // sorted
  friend bool operator==(const DirectedCoxeterGraph& a, const DirectedCoxeterGraph& b) {
    return a.graph == b.graph && a.arcs == b.arcs;
  }
};

// Every edge points to the endpoint placed later in the ordering.
inline DirectedCoxeterGraph directed_graph(const CoxeterGraph& g, const Ordering& ord) {
  check_ordering(g, ord);
  DirectedCoxeterGraph d{g, {}};
  for (const auto& e : g.edges()) {
    if (ord.position(e.u) < ord.position(e.v))
      d.arcs.push_back({e.u, e.v, e.label});
    else
      d.arcs.push_back({e.v, e.u, e.label});
  }
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

// ---------------------------------------------------------------------------
// Families. Numbering is frozen: paths and cycles run 0, 1, 2, ...; a star
// has its center at 0 followed by each arm in turn, listed outward.
// ---------------------------------------------------------------------------

inline CoxeterGraph path_graph(int n) {
  if (n < 1) throw DomainError("path needs at least one vertex");
  CoxeterGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// n-vertex cycle (affine A_{n-1}); n = 2 is the infinity-labelled edge.
inline CoxeterGraph cycle_graph(int n) {
  if (n < 2) throw DomainError("cycle needs at least two vertices");
  CoxeterGraph g(n);
  if (n == 2) {
    g.add_edge(0, 1, kInfinity);
    return g;
  }
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline CoxeterGraph complete_graph(int n) {
  if (n < 1) throw DomainError("complete graph needs at least one vertex");
  CoxeterGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// Center plus k arms of p_i - 1 vertices each.
inline CoxeterGraph star_graph(const std::vector<int>& ps) {
  if (ps.empty()) throw DomainError("star needs at least one arm");
  int n = 1;
  for (int p : ps) {
    if (p < 2) throw DomainError("star arm parameter must be >= 2");
    n += p - 1;
  }
  CoxeterGraph g(n);
  int next = 1;
  for (int p : ps) {
    int prev = 0;
    for (int k = 0; k < p - 1; ++k) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

inline CoxeterGraph dynkin_d(int n) {
  if (n < 4) throw DomainError("D_n needs n >= 4");
  return star_graph({2, 2, n - 2});
}

inline CoxeterGraph dynkin_e(int n) {
  if (n < 6) throw DomainError("E_n needs n >= 6");
  return star_graph({2, 3, n - 3});
}

// Affine D_n on n + 1 vertices: a path 0..n-2 with an extra leaf on vertex
// 1 and one on vertex n-3.
inline CoxeterGraph affine_d(int n) {
  if (n < 4) throw DomainError("affine D_n needs n >= 4");
  CoxeterGraph g(n + 1);
  for (int i = 0; i + 1 <= n - 2; ++i) g.add_edge(i, i + 1);
  g.add_edge(1, n - 1);
  g.add_edge(n - 3, n);
  return g;
}

// Affine E6, E7, E8 as the stars (3,3,3), (2,4,4), (2,3,6).
inline CoxeterGraph affine_e(int n) {
  switch (n) {
    case 6: return star_graph({3, 3, 3});
    case 7: return star_graph({2, 4, 4});
    case 8: return star_graph({2, 3, 6});
    default: throw DomainError("affine E_n needs n in {6, 7, 8}");
  }
}

// Triangle 0-1-2 with the tail 2-3.
inline CoxeterGraph triangle_with_tail() {
  CoxeterGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  return g;
}

// Named family dispatcher: "path", "cycle", "complete", "star", "D", "E",
// "affine-D", "affine-E", "triangle-tail".
inline CoxeterGraph family(const std::string& kind, const std::vector<int>& params) {
  auto one = [&]() {
    if (params.size() != 1) throw DomainError("family '" + kind + "' takes one parameter");
    return params[0];
  };
  if (kind == "path" || kind == "A") return path_graph(one());
  if (kind == "cycle" || kind == "affine-A") return cycle_graph(kind == "affine-A" ? one() + 1 : one());
  if (kind == "complete" || kind == "K") return complete_graph(one());
  if (kind == "star") return star_graph(params);
  if (kind == "D") return dynkin_d(one());
  if (kind == "E") return dynkin_e(one());
  if (kind == "affine-D") return affine_d(one());
  if (kind == "affine-E") return affine_e(one());
  if (kind == "triangle-tail") {
    if (!params.empty()) throw DomainError("triangle-tail takes no parameters");
    return triangle_with_tail();
  }
  throw DomainError("unknown graph family '" + kind + "'");
}

// ---------------------------------------------------------------------------
// JSON: {"n": 3, "edges": [[1, 2], [2, 3, 4]]}, 1-based, label 3 omitted,
// label 0 for infinity.
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const CoxeterGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    if (e.label == 3)
      edges.push_back({e.u + 1, e.v + 1});
    else
      edges.push_back({e.u + 1, e.v + 1, e.label});
  }
  return {{"n", g.size()}, {"edges", edges}};
}

inline CoxeterGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw DomainError("graph JSON needs an integer \"n\"");
  CoxeterGraph g(j["n"].get<int>());
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw DomainError("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) throw DomainError("edge must be [i, j] or [i, j, label]");
      for (const auto& x : e)
        if (!x.is_number_integer()) throw DomainError("edge entries must be integers");
      int label = e.size() == 3 ? e[2].get<int>() : 3;
      g.add_edge(e[0].get<int>() - 1, e[1].get<int>() - 1, label);
    }
  }
  return g;
}

inline nlohmann::json to_json(const Ordering& o) {
  nlohmann::json seq = nlohmann::json::array();
  for (int v : o.sequence()) seq.push_back(v + 1);
  return seq;
}

template <class T>
nlohmann::json matrix_to_json(const Matrix<T>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if constexpr (std::is_same_v<T, BigInt>)
        row.push_back(m(r, c).str());
      else
        row.push_back(m(r, c));
    }
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::json to_json(const Classification& c) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& comp : c.components) {
    nlohmann::json verts = nlohmann::json::array();
    for (int v : comp.vertices) verts.push_back(v + 1);
    nlohmann::json j{{"vertices", verts}, {"kind", to_string(comp.kind)}, {"exact", comp.exact}};
    if (comp.exact) {
      nlohmann::json minors = nlohmann::json::array();
      for (const auto& m : comp.minors) minors.push_back(m.str());
      j["leading_minors"] = minors;
      if (!comp.kernel.empty()) {
        nlohmann::json k = nlohmann::json::array();
        for (const auto& v : comp.kernel) k.push_back(v.str());
        j["kernel"] = k;
      }
    } else {
      j["min_eigenvalue"] = {{"value", comp.min_eigenvalue}, {"tol", kEigenTol}};
      j["max_eigenvalue"] = {{"value", comp.max_eigenvalue}, {"tol", kEigenTol}};
    }
    comps.push_back(j);
  }
  return {{"kind", to_string(c.kind)}, {"components", comps}};
}

}  // namespace coxlink
