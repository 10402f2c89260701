#pragma once

// Growth-series denominators of the polygonal reflection groups
// T_{p_1..p_k}, their orbifold Euler characteristic and growth rate.

#include "coxlink/core.hpp"
#include "coxlink/intpoly.hpp"
#include "coxlink/roots.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace coxlink {

class TupleSignature {
 public:
  TupleSignature() = default;
  explicit TupleSignature(std::vector<int> ps) : original_(std::move(ps)) {
    if (original_.size() < 2) throw DomainError("a signature needs k >= 2 entries");
    for (int p : original_)
      if (p < 2) throw DomainError("signature entries must be >= 2, got " + std::to_string(p));
    sorted_ = original_;
    std::sort(sorted_.begin(), sorted_.end());
  }
  TupleSignature(std::initializer_list<int> ps) : TupleSignature(std::vector<int>(ps)) {}

  int k() const { return static_cast<int>(sorted_.size()); }
  const std::vector<int>& ps() const { return sorted_; }
  const std::vector<int>& original() const { return original_; }

  friend bool operator==(const TupleSignature& a, const TupleSignature& b) { return a.sorted_ == b.sorted_; }
  friend bool operator<(const TupleSignature& a, const TupleSignature& b) { return a.sorted_ < b.sorted_; }

 private:
  std::vector<int> original_, sorted_;
};

inline std::string to_string(const TupleSignature& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.original().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.original()[i]);
  }
  return out + ")";
}

// [p] = 1 + x + ... + x^{p-1}
inline IntPolynomial bracket(int p) {
  if (p < 1) throw DomainError("[p] needs p >= 1");
  return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(p), BigInt(1)));
}

// (x - k + 1) prod [p_i] + sum_i prod_{j != i} [p_j]
inline IntPolynomial delta(const TupleSignature& sig) {
  const auto& ps = sig.ps();
  const std::size_t k = ps.size();
  // prefix[i] = [p_0]...[p_{i-1}], suffix[i] = [p_i]...[p_{k-1}]
  std::vector<IntPolynomial> prefix(k + 1, IntPolynomial(1)), suffix(k + 1, IntPolynomial(1));
  for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * bracket(ps[i]);
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * bracket(ps[i]);
  IntPolynomial out = IntPolynomial{-static_cast<long long>(k) + 1, 1} * prefix[k];
  for (std::size_t i = 0; i < k; ++i) out += prefix[i] * suffix[i + 1];
  return out;
}

inline Rational orbifold_chi(const TupleSignature& sig) {
  Rational chi = -Rational(sig.k() - 2);
  for (int p : sig.ps()) chi += Rational(1, p);
  return chi;
}

inline Rational excess(const TupleSignature& sig) { return -orbifold_chi(sig); }

struct GrowthRate {
  double value = 1.0;
  bool salem = false;
};

// For chi < 0, the real root of delta greater than one; otherwise 1.
inline GrowthRate growth_rate(const TupleSignature& sig, double tol = kDefaultRootTol) {
  if (orbifold_chi(sig) >= 0) return {1.0, false};
  const IntPolynomial d = delta(sig);
  RootSet rs = find_roots(d, std::min(tol, kDefaultModulusTol / 100));
  double best = 1.0;
  for (const auto& z : rs.roots)
    if (z.imag() == 0.0 && z.real() > best) best = z.real();
  if (best <= 1.0) throw Error(ErrorCode::internal, "no real root above 1 for " + to_string(sig));
  return {best, is_reciprocal(d) && detail::salem_roots(rs, kDefaultModulusTol)};
}

inline nlohmann::json to_json(const TupleSignature& s) { return s.original(); }

inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace coxlink
