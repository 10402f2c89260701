#pragma once

// Shared numeric types, error hierarchy and a small dense matrix used by
// every coxlink module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coxlink {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class ErrorCode {
  domain,        // invalid argument or precondition
  parse,         // malformed text input
  convergence,   // numerical refinement did not reach the requested radius
  ambiguity,     // a modulus/eigenvalue sits inside the undecidable band
  unsupported,   // operation not defined for this input class
  inconclusive,  // search budget exhausted
  invariant,     // a checked mathematical identity failed
  internal,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::domain: return "domain";
    case ErrorCode::parse: return "parse";
    case ErrorCode::convergence: return "convergence";
    case ErrorCode::ambiguity: return "ambiguity";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::inconclusive: return "inconclusive";
    case ErrorCode::invariant: return "invariant";
    case ErrorCode::internal: return "internal";
  }
  return "internal";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error(ErrorCode::domain, m) {}
};

struct ParseError : Error {
  ParseError(const std::string& m, std::size_t pos)
      : Error(ErrorCode::parse, m + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

struct ConvergenceError : Error {
  ConvergenceError(const std::string& m, double achieved)
      : Error(ErrorCode::convergence, m), achieved_radius(achieved) {}
  double achieved_radius;
};

struct AmbiguityError : Error {
  explicit AmbiguityError(const std::string& m) : Error(ErrorCode::ambiguity, m) {}
};

struct UnsupportedError : Error {
  explicit UnsupportedError(const std::string& m) : Error(ErrorCode::unsupported, m) {}
};

struct InconclusiveError : Error {
  explicit InconclusiveError(const std::string& m) : Error(ErrorCode::inconclusive, m) {}
};

struct InvariantViolation : Error {
  explicit InvariantViolation(const std::string& m) : Error(ErrorCode::invariant, m) {}
};

// ---------------------------------------------------------------------------
// SafeInt: int64 with overflow detection. The exact algorithms are templates;
// hot paths instantiate them with SafeInt and retry with BigInt on overflow.
// ---------------------------------------------------------------------------

struct Overflow : std::exception {
  const char* what() const noexcept override { return "int64 overflow"; }
};

class SafeInt {
 public:
  constexpr SafeInt() = default;
  constexpr SafeInt(std::int64_t v) : v_(v) {}  // NOLINT: implicit by design of the arithmetic templates

  std::int64_t value() const { return v_; }

  friend SafeInt operator+(SafeInt a, SafeInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend SafeInt operator-(SafeInt a, SafeInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend SafeInt operator*(SafeInt a, SafeInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  // Exact division only.
  friend SafeInt operator/(SafeInt a, SafeInt b) {
    if (b.v_ == -1 && a.v_ == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    return a.v_ / b.v_;
  }
  SafeInt operator-() const {
    if (v_ == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    return -v_;
  }
  SafeInt& operator+=(SafeInt o) { return *this = *this + o; }
  SafeInt& operator-=(SafeInt o) { return *this = *this - o; }
  SafeInt& operator*=(SafeInt o) { return *this = *this * o; }

  friend bool operator==(SafeInt a, SafeInt b) = default;
  friend auto operator<=>(SafeInt a, SafeInt b) = default;

 private:
  std::int64_t v_ = 0;
};

inline BigInt to_bigint(SafeInt v) { return BigInt(v.value()); }
inline BigInt to_bigint(const BigInt& v) { return v; }
inline BigInt to_bigint(long long v) { return BigInt(v); }

// ---------------------------------------------------------------------------
// Matrix: row-major dense matrix with value semantics.
// ---------------------------------------------------------------------------

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DomainError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  template <class U, class F>
  Matrix<U> map(F f) const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) x = -x;
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<long long>;
using BigMatrix = Matrix<BigInt>;

template <class To, class From>
Matrix<To> convert(const Matrix<From>& m) {
  return m.template map<To>([](const From& x) { return To(x); });
}

}  // namespace coxlink
