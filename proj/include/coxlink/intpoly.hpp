#pragma once

// Exact univariate polynomials over the integers.
//
// Coefficients are stored ascending (coeffs()[i] multiplies x^i) as
// arbitrary-precision integers. The zero polynomial has no stored
// coefficients; otherwise the highest stored coefficient is nonzero.

#include "coxlink/core.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <complex>
#include <initializer_list>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace coxlink {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(long long c) { if (c != 0) c_.emplace_back(c); }
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long long> coeffs) {
    c_.reserve(coeffs.size());
    for (long long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPolynomial constant(const BigInt& v) { return IntPolynomial(std::vector<BigInt>{v}); }
  static IntPolynomial monomial(const BigInt& v, std::size_t k) {
    std::vector<BigInt> c(k + 1);
    c[k] = v;
    return IntPolynomial(std::move(c));
  }
  static IntPolynomial x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& lead() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  // Multiplicity of the root 0.
  std::size_t low_order() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return k;
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(IntPolynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(out));
  }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial p) {
    for (auto& v : p.c_) v *= s;
    p.trim();
    return p;
  }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  BigInt operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  template <class Real>
  std::complex<Real> eval(std::complex<Real> z) const {
    std::complex<Real> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + static_cast<Real>(*it);
    return acc;
  }

  IntPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigInt(i);
    return IntPolynomial(std::move(d));
  }

  // p(-x)
  IntPolynomial negate_variable() const {
    IntPolynomial r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  // x^deg * p(1/x)
  IntPolynomial reversed() const {
    std::vector<BigInt> r(c_.rbegin(), c_.rend());
    return IntPolynomial(std::move(r));
  }

  // Divides out the largest power of x.
  IntPolynomial without_zero_roots() const {
    std::size_t k = low_order();
    return IntPolynomial(std::vector<BigInt>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
    return g;
  }

  // Content removed, leading coefficient made positive.
  IntPolynomial primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (c_.back() < 0) g = -g;
    IntPolynomial r = *this;
    for (auto& v : r.c_) v /= g;
    return r;
  }

  // Sign flipped if needed so the leading coefficient is positive.
  IntPolynomial with_positive_lead() const {
    if (!is_zero() && c_.back() < 0) return -*this;
    return *this;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

// Equality up to multiplication by a unit +-x^k of the Laurent ring.
inline bool equal_up_to_unit(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial ra = a.without_zero_roots().with_positive_lead();
  IntPolynomial rb = b.without_zero_roots().with_positive_lead();
  return ra == rb;
}

// ---------------------------------------------------------------------------
// Division
// ---------------------------------------------------------------------------

// Quotient and remainder of a / b over Z, requiring every step to divide
// exactly by lead(b). Throws DomainError when that fails.
inline std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (r.size() < bc.size()) return {IntPolynomial{}, a};
  std::vector<BigInt> q(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    if (r[k] % bc.back() != 0) throw DomainError("inexact polynomial division over Z");
    BigInt f = r[k] / bc.back();
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * bc[j];
  }
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

inline bool divides(const IntPolynomial& b, const IntPolynomial& a) {
  if (b.is_zero()) return a.is_zero();
  try {
    return divmod(a, b).second.is_zero();
  } catch (const DomainError&) {
    return false;
  }
}

// a / b where b is known to divide a exactly over Z.
inline IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("exact_quotient: nonzero remainder");
  return q;
}

// lead(b)^(deg a - deg b + 1) * a mod b
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  for (std::size_t k = r.size(); k-- > db;) {
    BigInt f = r[k];
    for (auto& v : r) v *= bc.back();
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * bc[j];
  }
  return IntPolynomial(std::move(r));
}

// Primitive gcd over Q[x], scaled into Z[x] with positive leading
// coefficient (primitive part times the gcd of the contents).
inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.with_positive_lead();
  if (b.is_zero()) return a.with_positive_lead();
  BigInt cont = boost::multiprecision::gcd(a.content(), b.content());
  IntPolynomial u = a.primitive_part();
  IntPolynomial v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive_part();
  }
  return cont * u.primitive_part();
}

// Yun's algorithm. Returns primitive squarefree factors q_i with their
// multiplicities so that the input equals c * prod q_i^{m_i} for a rational
// constant c. Factors of degree 0 are omitted.
inline std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<std::pair<IntPolynomial, int>> out;
  IntPolynomial f = p.primitive_part();
  if (f.degree() < 1) return out;
  IntPolynomial fp = f.derivative();
  IntPolynomial a = gcd(f, fp).primitive_part();
  IntPolynomial b = exact_quotient(f, a);
  IntPolynomial c = exact_quotient(fp, a);
  IntPolynomial d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    a = gcd(b, d).primitive_part();
    if (a.degree() >= 1) out.emplace_back(a, i);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and classification
// ---------------------------------------------------------------------------

inline unsigned long long euler_phi(unsigned long long n) {
  unsigned long long r = n;
  for (unsigned long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace detail {

inline IntPolynomial substitute_power(const IntPolynomial& p, std::size_t e) {
  if (p.is_zero()) return p;
  std::vector<BigInt> c(static_cast<std::size_t>(p.degree()) * e + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i * e] = p.coeffs()[i];
  return IntPolynomial(std::move(c));
}

}  // namespace detail

// The d-th cyclotomic polynomial, via Phi_{rp}(x) = Phi_r(x^p)/Phi_r(x) on
// the radical and Phi_d(x) = Phi_rad(d)(x^{d/rad(d)}).
inline IntPolynomial cyclotomic(unsigned long long d) {
  if (d == 0) throw DomainError("cyclotomic index must be positive");
  std::vector<unsigned long long> primes;
  unsigned long long m = d;
  for (unsigned long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) primes.push_back(m);
  IntPolynomial phi{-1, 1};  // Phi_1
  unsigned long long rad = 1;
  for (auto p : primes) {
    phi = exact_quotient(detail::substitute_power(phi, p), phi);
    rad *= p;
  }
  return detail::substitute_power(phi, d / rad);
}

// Palindromic coefficient sequence.
inline bool is_reciprocal(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("is_reciprocal: zero polynomial");
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

// Exact: trial division by every Phi_d with phi(d) <= deg p until the
// quotient is constant.
inline bool is_cyclotomic_product(const IntPolynomial& p) {
  if (p.is_zero() || !p.is_monic()) throw DomainError("is_cyclotomic_product requires a monic polynomial");
  IntPolynomial q = p;
  if (q.coeff(0) != 1 && q.coeff(0) != -1) return false;
  const auto n = static_cast<unsigned long long>(q.degree());
  // phi(d) >= sqrt(d/2), so phi(d) <= n forces d <= 2 n^2.
  for (unsigned long long d = 1; d <= 2 * n * n + 2 && q.degree() > 0; ++d) {
    if (euler_phi(d) > static_cast<unsigned long long>(q.degree())) continue;
    IntPolynomial phi = cyclotomic(d);
    while (q.degree() >= phi.degree()) {
      auto [quot, rem] = divmod(q, phi);
      if (!rem.is_zero()) break;
      q = std::move(quot);
    }
  }
  return q.degree() == 0;
}

// ---------------------------------------------------------------------------
// Text and JSON forms
// ---------------------------------------------------------------------------

// Symbolic rendering in x, descending powers, e.g. "x^3 - x + 1".
inline std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    BigInt mag = boost::multiprecision::abs(c[k]);
    if (first) {
      if (c[k] < 0) os << '-';
    } else {
      os << (c[k] < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << 'x';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

// Ascending comma-separated coefficients, e.g. "1,-1,0,1".
inline std::string to_csv(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ',';
    os << p.coeffs()[i];
  }
  return os.str();
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  IntPolynomial parse_symbolic() {
    std::map<std::size_t, BigInt> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      auto [coef, power] = parse_term();
      terms[power] += sign * coef;
      skip_ws();
    }
    std::size_t deg = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<BigInt> c(deg + 1);
    for (auto& [k, v] : terms) c[k] += v;
    return IntPolynomial(std::move(c));
  }

  IntPolynomial parse_csv() {
    std::vector<BigInt> c;
    while (true) {
      skip_ws();
      bool neg = false;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        neg = peek() == '-';
        ++pos_;
      }
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected integer coefficient", pos_);
      BigInt v = parse_digits();
      c.push_back(neg ? BigInt(-v) : v);
      skip_ws();
      if (at_end()) break;
      if (peek() != ',') throw ParseError("expected ','", pos_);
      ++pos_;
    }
    return IntPolynomial(std::move(c));
  }

 private:
  std::pair<BigInt, std::size_t> parse_term() {
    BigInt coef = 1;
    bool have_coef = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = parse_digits();
      have_coef = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'x') throw ParseError("expected 'x' after '*'", pos_);
      }
    }
    if (!at_end() && peek() == 'x') {
      ++pos_;
      skip_ws();
      std::size_t power = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError("expected exponent", pos_);
        BigInt e = parse_digits();
        if (e > 100000) throw DomainError("exponent too large");
        power = static_cast<std::size_t>(e);
      }
      return {coef, power};
    }
    if (!have_coef) {
      if (!at_end() && std::isalpha(static_cast<unsigned char>(peek())))
        throw ParseError(std::string("unknown variable '") + peek() + "', expected 'x'", pos_);
      throw ParseError("expected a term", pos_);
    }
    return {coef, 0};
  }

  BigInt parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && (peek() == '.' || peek() == '/' || peek() == 'e' || peek() == 'E')) {
      throw DomainError("non-integer coefficient at position " + std::to_string(start));
    }
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Accepts "x^3 - x + 1" style expressions in x, or an ascending CSV list
// "1,-1,0,1". A lone integer is a constant polynomial.
inline IntPolynomial parse_poly(std::string_view text) {
  detail::PolyParser parser(text);
  if (text.find(',') != std::string_view::npos) return parser.parse_csv();
  return parser.parse_symbolic();
}

inline nlohmann::json to_json(const IntPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return nlohmann::json{{"coeffs", arr}};
}

inline IntPolynomial poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw DomainError("polynomial JSON must be an object with a \"coeffs\" array");
  std::vector<BigInt> c;
  for (const auto& v : j["coeffs"]) {
    if (v.is_string()) {
      const auto& s = v.get_ref<const std::string&>();
      if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
        throw DomainError("coefficient is not a decimal integer: " + s);
      c.emplace_back(s);
    } else if (v.is_number_integer()) {
      c.emplace_back(v.get<long long>());
    } else {
      throw DomainError("coefficient must be an integer or decimal string");
    }
  }
  return IntPolynomial(std::move(c));
}

// Lehmer's polynomial x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1.
inline IntPolynomial lehmer_polynomial() { return IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}; }

}  // namespace coxlink
