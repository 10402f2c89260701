#pragma once

// Certified complex roots of integer polynomials and the numerical
// invariants built on them: Mahler measure and Salem classification.
//
// Pipeline: strip x^k, split into squarefree factors (exact, Yun), seed each
// factor with companion-matrix eigenvalues, polish with Aberth iterations in
// long double (quad precision if that is not enough), then certify with
// Weierstrass inclusion disks: the disks D(z_i, n|W_i|) cover all roots and
// a component made of m disks holds exactly m roots. The reported radius is only accepted when the disks are
// pairwise disjoint.

#include "coxlink/core.hpp"
#include "coxlink/intpoly.hpp"

#include <boost/multiprecision/float128.hpp>
#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <vector>

namespace coxlink {

struct RootSet {
  // With multiplicity; sorted by real part, then imaginary part.
  std::vector<std::complex<double>> roots;
  // Every true root lies within `radius` of its listed approximation.
  double radius = 0.0;
};

inline constexpr double kDefaultRootTol = 1e-10;
inline constexpr double kDefaultModulusTol = 1e-8;

namespace detail {

using cld = std::complex<long double>;
// Quad precision, used when long double cannot separate the roots.
using Wide = boost::multiprecision::float128;
using cwide = std::complex<Wide>;

template <class Real>
Real unit_roundoff() {
  return std::numeric_limits<Real>::epsilon() / 2;
}

template <class Real>
struct Evaluation {
  std::complex<Real> value;
  std::complex<Real> deriv;
  Real error;  // bound on |computed value - true value|
};

template <class Real>
Evaluation<Real> evaluate(const std::vector<Real>& c, std::complex<Real> z) {
  using std::abs;
  std::complex<Real> p(0), dp(0);
  Real absum = 0;
  const Real az = abs(z);
  for (std::size_t k = c.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
    absum = absum * az + abs(c[k]);
  }
  const Real n = static_cast<Real>(c.size());
  return {p, dp, (4 * n + 4) * unit_roundoff<Real>() * absum};
}

template <class Real>
struct Certificate {
  std::vector<Real> radii;
  bool disjoint = false;
  Real max_radius = std::numeric_limits<Real>::infinity();
};

template <class Real>
Certificate<Real> certify(const std::vector<Real>& c, const std::vector<std::complex<Real>>& z) {
  using std::abs;
  const std::size_t n = z.size();
  Certificate<Real> cert;
  cert.radii.assign(n, Real(0));
  const Real lead = abs(c.back());
  for (std::size_t i = 0; i < n; ++i) {
    Evaluation<Real> e = evaluate(c, z[i]);
    Real denom = lead;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom *= abs(z[i] - z[j]);
    cert.radii[i] = denom > 0 ? static_cast<Real>(n) * (abs(e.value) + e.error) / denom
                              : std::numeric_limits<Real>::infinity();
    // Rounding of the approximation itself.
    cert.radii[i] += 4 * unit_roundoff<Real>() * abs(z[i]);
  }
  cert.disjoint = true;
  for (std::size_t i = 0; i < n && cert.disjoint; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (abs(z[i] - z[j]) <= cert.radii[i] + cert.radii[j]) {
        cert.disjoint = false;
        break;
      }
  cert.max_radius = n ? *std::max_element(cert.radii.begin(), cert.radii.end()) : Real(0);
  return cert;
}

// One Aberth sweep (Gauss-Seidel style); returns the largest relative step.
template <class Real>
Real aberth_sweep(const std::vector<Real>& c, std::vector<std::complex<Real>>& z) {
  using std::abs;
  using std::isfinite;
  using C = std::complex<Real>;
  Real worst = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    Evaluation<Real> e = evaluate(c, z[i]);
    if (e.value == C(0)) continue;
    C ratio = e.value / e.deriv;
    C sum(0);
    for (std::size_t j = 0; j < z.size(); ++j)
      if (j != i) sum += C(1) / (z[i] - z[j]);
    C step = ratio / (C(1) - ratio * sum);
    if (!isfinite(step.real()) || !isfinite(step.imag())) continue;
    z[i] -= step;
    worst = std::max(worst, Real(abs(step) / (1 + abs(z[i]))));
  }
  return worst;
}

// Polishes z in place; returns the final certificate. Certifies as soon as
// the Aberth steps drop below tol, which usually ends the work early.
template <class Real>
Certificate<Real> polish(const std::vector<Real>& c, std::vector<std::complex<Real>>& z, double tol, int rounds) {
  Certificate<Real> cert;
  for (int round = 0; round < rounds; ++round) {
    for (int it = 0; it < 60; ++it) {
      const Real step = aberth_sweep(c, z);
      if (step < 16 * unit_roundoff<Real>()) break;
      if (step < Real(tol)) {
        cert = certify(c, z);
        if (cert.disjoint && cert.max_radius <= tol) return cert;
      }
    }
    cert = certify(c, z);
    if (cert.disjoint && cert.max_radius <= tol) break;
    // Nudge off a fixed point before another round.
    for (std::size_t i = 0; i < z.size(); ++i)
      z[i] *= std::complex<Real>(1 + Real(1e-12) * static_cast<Real>(i + 1), Real(1e-12));
  }
  return cert;
}

// Certified simple roots of a squarefree polynomial of degree >= 1.
inline std::pair<std::vector<cld>, long double> squarefree_roots(const IntPolynomial& f, double tol) {
  const std::size_t n = static_cast<std::size_t>(f.degree());
  std::vector<long double> c;
  c.reserve(n + 1);
  for (const auto& v : f.coeffs()) c.push_back(static_cast<long double>(v));
  for (auto v : c)
    if (!std::isfinite(v)) throw DomainError("coefficient exceeds floating-point range");

  if (n == 1) {
    cld z = -c[0] / c[1];
    return {{z}, 4 * unit_roundoff<long double>() * std::abs(z) + std::numeric_limits<long double>::denorm_min()};
  }

  std::vector<cld> z(n);
  {
    Eigen::VectorXd coeffs(static_cast<Eigen::Index>(n + 1));
    for (std::size_t i = 0; i <= n; ++i) coeffs[static_cast<Eigen::Index>(i)] = static_cast<double>(c[i]);
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
    const auto& r = solver.roots();
    for (std::size_t i = 0; i < n; ++i)
      z[i] = cld(r[static_cast<Eigen::Index>(i)].real(), r[static_cast<Eigen::Index>(i)].imag());
  }

  Certificate<long double> cert = polish(c, z, tol, 2);
  if (!(cert.disjoint && cert.max_radius <= tol)) {
    std::vector<Wide> cw;
    cw.reserve(n + 1);
    for (const auto& v : f.coeffs()) cw.emplace_back(v);
    std::vector<cwide> zw;
    zw.reserve(n);
    for (const auto& v : z) zw.emplace_back(Wide(v.real()), Wide(v.imag()));
    Certificate<Wide> wide = polish(cw, zw, tol, 8);
    if (!(wide.disjoint && wide.max_radius <= tol)) {
      std::ostringstream msg;
      msg << "root isolation failed to reach radius " << tol << " (achieved " << static_cast<double>(wide.max_radius)
          << (wide.disjoint ? "" : ", disks overlap") << ")";
      throw ConvergenceError(msg.str(), static_cast<double>(wide.max_radius));
    }
    cert.disjoint = true;
    cert.max_radius = static_cast<long double>(wide.max_radius);
    for (std::size_t i = 0; i < n; ++i) {
      z[i] = cld(static_cast<long double>(zw[i].real()), static_cast<long double>(zw[i].imag()));
      // the long double copy adds its own rounding
      cert.radii[i] = static_cast<long double>(wide.radii[i]) + 2 * unit_roundoff<long double>() * std::abs(z[i]);
    }
    cert.max_radius = *std::max_element(cert.radii.begin(), cert.radii.end());
  }

  // A real polynomial's root whose disk touches the axis is real when the
  // mirrored disk meets no other disk.
  for (std::size_t i = 0; i < n; ++i) {
    if (std::fabs(z[i].imag()) > cert.radii[i]) continue;
    cld mirror = std::conj(z[i]);
    bool alone = true;
    for (std::size_t j = 0; j < n && alone; ++j)
      if (j != i && std::abs(mirror - z[j]) <= cert.radii[i] + cert.radii[j]) alone = false;
    if (alone) z[i] = cld(z[i].real(), 0);
  }
  return {z, cert.max_radius};
}

}  // namespace detail

// All complex roots of p with multiplicity, each within `radius <= tol` of
// the true root.
inline RootSet find_roots(const IntPolynomial& p, double tol = kDefaultRootTol) {
  if (p.is_zero() || p.degree() < 1) throw DomainError("find_roots requires degree >= 1");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  std::vector<detail::cld> all;
  long double radius = 0;
  const std::size_t zeros = p.low_order();
  all.assign(zeros, detail::cld(0));
  IntPolynomial q = p.without_zero_roots();
  if (q.degree() >= 1) {
    for (const auto& [factor, mult] : squarefree_decomposition(q)) {
      auto [z, r] = detail::squarefree_roots(factor, tol);
      radius = std::max(radius, r);
      for (int m = 0; m < mult; ++m) all.insert(all.end(), z.begin(), z.end());
    }
  }
  RootSet out;
  out.roots.reserve(all.size());
  for (const auto& z : all) out.roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  // double rounding of the reported approximations
  long double maxabs = 0;
  for (const auto& z : all) maxabs = std::max(maxabs, std::abs(z));
  radius += maxabs * std::numeric_limits<double>::epsilon();
  out.radius = static_cast<double>(radius);
  if (out.radius > tol) {
    throw ConvergenceError("root radius " + std::to_string(out.radius) + " exceeds tolerance after rounding",
                           out.radius);
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

// |lead| * prod over roots of max(1, |root|).
inline double mahler_measure(const IntPolynomial& p, double tol = kDefaultRootTol) {
  if (p.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  const double lead = std::fabs(static_cast<double>(p.lead()));
  if (p.degree() == 0) return lead;
  // Landau's bound M(p) <= ||p||_2 controls how root errors propagate.
  long double norm2 = 0;
  for (const auto& v : p.coeffs()) norm2 += static_cast<long double>(v) * static_cast<long double>(v);
  const double landau = static_cast<double>(std::sqrt(norm2));
  const double root_tol = std::max(1e-15 * landau, tol / (4.0 * p.degree() * std::max(1.0, landau)));
  RootSet rs = find_roots(p, std::min(root_tol, kDefaultRootTol));
  long double m = lead;
  for (const auto& z : rs.roots) m *= std::max<long double>(1, std::abs(std::complex<long double>(z)));
  return static_cast<double>(m);
}

namespace detail {

// Salem test on already isolated roots of a monic reciprocal polynomial.
inline bool salem_roots(const RootSet& rs, double tol) {
  int outside = 0, on_circle = 0;
  bool outside_real = false;
  for (const auto& z : rs.roots) {
    const double m = std::abs(z);
    if (m > 1 + tol) {
      ++outside;
      outside_real = z.imag() == 0.0;
    } else if (std::fabs(m - 1) <= tol / 10) {
      ++on_circle;
    } else if (m >= 1 - tol) {
      std::ostringstream msg;
      msg << "root of modulus " << m << " lies in the ambiguity band around the unit circle";
      throw AmbiguityError(msg.str());
    }
  }
  return outside == 1 && outside_real && on_circle >= 1;
}

}  // namespace detail

// Reciprocal, exactly one root outside the unit circle (and real), and at
// least one root on it. Moduli in the band between tol/10 and tol of 1 are
// reported as ambiguous instead of being classified.
inline bool is_salem(const IntPolynomial& p, double tol = kDefaultModulusTol) {
  if (p.is_zero() || !p.is_monic()) throw DomainError("is_salem requires a monic polynomial");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (p.degree() < 2 || !is_reciprocal(p)) return false;
  return detail::salem_roots(find_roots(p, tol / 100), tol);
}

// Largest modulus among the roots.
inline double max_root_modulus(const IntPolynomial& p, double tol = kDefaultRootTol) {
  RootSet rs = find_roots(p, tol);
  double m = 0;
  for (const auto& z : rs.roots) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace coxlink
