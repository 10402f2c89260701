#pragma once

// Seifert matrices M = I + A+ of positive ordered chord systems, where A+ is
// the strictly upper triangular part of the intersection matrix, and the
// invariants derived from them: monodromy M^t M^-1, the Coxeter element
// -M^t M^-1 and the Alexander polynomial det(tM - M^t).

#include "coxlink/algebra.hpp"
#include "coxlink/chords.hpp"
#include "coxlink/core.hpp"
#include "coxlink/coxeter.hpp"
#include "coxlink/growth.hpp"
#include "coxlink/intpoly.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace coxlink {

class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  explicit SeifertMatrix(IntMatrix m) : m_(std::move(m)) {
    if (!m_.square()) throw DomainError("Seifert matrix must be square");
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const long long want = i == j ? 1 : 0;
        if (m_(i, j) != want)
          throw DomainError("Seifert matrix must be upper unitriangular; entry (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") is " + std::to_string(m_(i, j)));
      }
  }

  int size() const { return static_cast<int>(m_.rows()); }
  const IntMatrix& matrix() const { return m_; }
  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  IntMatrix m_;
};

inline SeifertMatrix seifert_matrix(const OrderedChordSystem& sys) {
  if (auto bad = first_negative_crossing(sys)) {
    throw DomainError("chord system is not positive: A[" + std::to_string(bad->first + 1) + "][" +
                      std::to_string(bad->second + 1) + "] < 0");
  }
  const IntMatrix a = intersection_matrix(sys);
  const std::size_t n = a.rows();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = a(i, j);
  return SeifertMatrix(std::move(m));
}

// M^t M^-1. M is unimodular, so the entries are integers.
inline BigMatrix monodromy(const SeifertMatrix& s) {
  const BigMatrix m = convert<BigInt>(s.matrix());
  return m.transposed() * unitriangular_inverse(m);
}

inline BigMatrix coxeter_from_link(const SeifertMatrix& s) { return -monodromy(s); }

// det(tM - M^t) with positive leading coefficient.
inline IntPolynomial alexander(const SeifertMatrix& s) {
  const IntMatrix& m = s.matrix();
  const std::size_t n = m.rows();
  Matrix<IntPolynomial> tm(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tm(i, j) = IntPolynomial{-m(j, i), m(i, j)};
  return bareiss_determinant(std::move(tm)).with_positive_lead();
}

// Alexander polynomial of the pretzel link: delta(-x), positive lead.
inline IntPolynomial pretzel_alexander(const TupleSignature& sig) {
  return delta(sig).negate_variable().with_positive_lead();
}

// Chord diagram realizing star(p_1..p_k) with the star_graph numbering for
// the sorted arms: the center chord, then the first chord of every arm
// nested inside it, then each arm as a zigzag of consecutive crossings.
// make_positive picks the orientation and order.
inline OrderedChordSystem star_positive_system(const std::vector<int>& ps) {
  if (ps.empty()) throw DomainError("star needs at least one arm");
  std::vector<int> sorted = ps;
  std::sort(sorted.begin(), sorted.end());
  for (int p : sorted)
    if (p < 2) throw DomainError("star arm parameter must be >= 2");
  std::vector<std::vector<int>> arms;
  int next = 1;
  for (int p : sorted) {
    std::vector<int> arm;
    for (int k = 0; k < p - 1; ++k) arm.push_back(next++);
    arms.push_back(std::move(arm));
  }
  std::vector<int> word{0};
  for (const auto& arm : arms) word.push_back(arm.front());
  word.push_back(0);
  for (auto it = arms.rbegin(); it != arms.rend(); ++it) {
    const auto& arm = *it;
    // a1 a2 a1 a3 a2 ... am a(m-1) am, minus the leading a1
    for (std::size_t k = 1; k < arm.size(); ++k) {
      word.push_back(arm[k]);
      word.push_back(arm[k - 1]);
    }
    word.push_back(arm.back());
  }
  return make_positive(detail::diagram_from_ids(word));
}

inline nlohmann::json to_json(const SeifertMatrix& s) { return matrix_to_json(s.matrix()); }

inline SeifertMatrix seifert_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("matrix JSON must be an array of rows");
  const std::size_t n = j.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw DomainError("matrix JSON must be square");
    for (std::size_t k = 0; k < n; ++k) {
      if (!j[i][k].is_number_integer()) throw DomainError("matrix entries must be integers");
      m(i, k) = j[i][k].get<long long>();
    }
  }
  return SeifertMatrix(std::move(m));
}

}  // namespace coxlink
