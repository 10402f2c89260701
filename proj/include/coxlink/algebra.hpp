#pragma once

// Division-free and fraction-free exact linear algebra over integral
// domains: Berkowitz characteristic polynomials, Bareiss determinants and
// leading principal minors.

#include "coxlink/core.hpp"
#include "coxlink/intpoly.hpp"

#include <vector>

namespace coxlink {

// Coefficients of det(tI - a), ascending. Uses only ring operations, so it
// is exact for any integer type T.
template <class T>
std::vector<T> berkowitz(const Matrix<T>& a) {
  if (!a.square()) throw DomainError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return {T(1)};
  // Descending coefficients while accumulating.
  std::vector<T> v{T(1), T(-a(0, 0))};
  std::vector<T> col, next, q;
  for (std::size_t r = 1; r < n; ++r) {
    // q = [1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C]
    q.assign(r + 2, T(0));
    q[0] = T(1);
    q[1] = -a(r, r);
    col.assign(r, T(0));
    for (std::size_t i = 0; i < r; ++i) col[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      T dot = T(0);
      for (std::size_t i = 0; i < r; ++i) dot += a(r, i) * col[i];
      q[k + 2] = -dot;
      if (k + 1 < r) {
        next.assign(r, T(0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) next[i] += a(i, j) * col[j];
        col.swap(next);
      }
    }
    std::vector<T> w(r + 2, T(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) w[i] += q[i - j] * v[j];
    v.swap(w);
  }
  return {v.rbegin(), v.rend()};
}

inline IntPolynomial char_poly(const BigMatrix& a) {
  return IntPolynomial(berkowitz(a));
}

// Exact characteristic polynomial of a small integer matrix: runs in int64
// and redoes the computation with big integers if anything overflows.
inline IntPolynomial char_poly(const IntMatrix& a) {
  try {
    auto c = berkowitz(convert<SafeInt>(a));
    std::vector<BigInt> out;
    out.reserve(c.size());
    for (auto v : c) out.emplace_back(v.value());
    return IntPolynomial(std::move(out));
  } catch (const Overflow&) {
    return char_poly(convert<BigInt>(a));
  }
}

namespace detail {

template <class T>
T exact_div(const T& a, const T& b) {
  return a / b;
}
inline IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) {
  return exact_quotient(a, b);
}

}  // namespace detail

// Bareiss fraction-free determinant with row pivoting.
template <class T>
T bareiss_determinant(Matrix<T> m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T prev = T(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == T(0)) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == T(0)) ++p;
      if (p == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = detail::exact_div(T(m(k, k) * m(i, j) - m(i, k) * m(k, j)), prev);
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return negate ? T(-d) : d;
}

// Leading principal minors D_1..D_n. Bareiss without pivoting while the
// pivots stay nonzero; a zero pivot falls back to block determinants.
template <class T>
std::vector<T> leading_principal_minors(const Matrix<T>& a) {
  if (!a.square()) throw DomainError("minors of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<T> minors;
  minors.reserve(n);
  Matrix<T> m = a;
  T prev = T(1);
  std::size_t k = 0;
  for (; k < n; ++k) {
    minors.push_back(m(k, k));
    if (m(k, k) == T(0)) break;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = detail::exact_div(T(m(k, k) * m(i, j) - m(i, k) * m(k, j)), prev);
    prev = m(k, k);
  }
  for (std::size_t s = k + 2; s <= n; ++s) {
    Matrix<T> block(s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) block(i, j) = a(i, j);
    minors.push_back(bareiss_determinant(block));
  }
  return minors;
}

// Inverse of an upper unitriangular integer matrix by back substitution.
inline BigMatrix unitriangular_inverse(const BigMatrix& m) {
  const std::size_t n = m.rows();
  BigMatrix inv = BigMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = c; r-- > 0;) {
      BigInt s = 0;
      for (std::size_t k = r + 1; k <= c; ++k) s += m(r, k) * inv(k, c);
      inv(r, c) = -s;
    }
  return inv;
}

}  // namespace coxlink
