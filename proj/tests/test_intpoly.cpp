#include "coxlink/intpoly.hpp"
#include "coxlink/roots.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace coxlink;

namespace {

IntPolynomial P(std::initializer_list<long long> c) { return IntPolynomial(c); }

IntPolynomial random_poly(std::mt19937_64& rng, int deg, int bound) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<BigInt> c(static_cast<std::size_t>(deg + 1));
  for (auto& v : c) v = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST(IntPolynomial, TrimsTrailingZerosAndReportsDegree) {
  EXPECT_EQ(P({1, 2, 0, 0}).degree(), 1);
  EXPECT_TRUE(P({0, 0}).is_zero());
  EXPECT_EQ(P({0, 0}), IntPolynomial{});
}

TEST(IntPolynomial, ArithmeticMatchesNaiveConvolution) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> deg(0, 8), coef(-9, 9);
    std::vector<long long> a(static_cast<std::size_t>(deg(rng) + 1)), b(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& v : a) v = coef(rng);
    for (auto& v : b) v = coef(rng);
    EXPECT_EQ(oracle::from_ll(a) * oracle::from_ll(b), oracle::from_ll(oracle::convolve(a, b)));
  }
}

TEST(IntPolynomial, DivmodReconstructsDividend) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    IntPolynomial b = random_poly(rng, 3, 5);
    std::vector<BigInt> bc = b.coeffs();
    bc.back() = 1;
    b = IntPolynomial(bc);
    IntPolynomial a = random_poly(rng, 7, 9);
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(IntPolynomial, InexactDivisionIsRejected) {
  EXPECT_THROW(divmod(P({1, 0, 1}), P({1, 2})), DomainError);
  EXPECT_THROW(divmod(P({1}), IntPolynomial{}), DomainError);
}

TEST(IntPolynomial, GcdOfProducts) {
  const IntPolynomial f = P({-1, 1}) * P({1, 1, 1});
  const IntPolynomial g = P({-1, 1}) * P({2, 0, 1});
  EXPECT_EQ(gcd(f, g), P({-1, 1}));
}

TEST(IntPolynomial, SquarefreeDecompositionRecombines) {
  const IntPolynomial a = P({1, 1}), b = P({-1, 0, 1, 1});
  const IntPolynomial p = a * a * a * b * b * P({3, 1});
  IntPolynomial prod(1);
  for (const auto& [q, m] : squarefree_decomposition(p))
    for (int i = 0; i < m; ++i) prod = prod * q;
  EXPECT_TRUE(equal_up_to_unit(prod, p.primitive_part()));
}

TEST(IntPolynomial, CyclotomicDegreesAreEulerPhi) {
  for (unsigned long long d = 1; d <= 60; ++d) {
    const IntPolynomial phi = cyclotomic(d);
    EXPECT_EQ(static_cast<unsigned long long>(phi.degree()), euler_phi(d)) << d;
    EXPECT_TRUE(phi.is_monic());
  }
  EXPECT_EQ(cyclotomic(12), P({1, 0, -1, 0, 1}));
}

TEST(IntPolynomial, ProductOfCyclotomicsOverDivisorsIsXnMinusOne) {
  for (unsigned long long n = 1; n <= 30; ++n) {
    IntPolynomial prod(1);
    for (unsigned long long d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    std::vector<BigInt> c(n + 1);
    c[0] = -1;
    c[n] = 1;
    EXPECT_EQ(prod, IntPolynomial(c)) << n;
  }
}

TEST(IntPolynomial, CyclotomicProductDetection) {
  EXPECT_TRUE(is_cyclotomic_product(cyclotomic(7) * cyclotomic(12) * cyclotomic(1)));
  EXPECT_FALSE(is_cyclotomic_product(lehmer_polynomial()));
  EXPECT_FALSE(is_cyclotomic_product(P({1, -1, 0, 1})));
  EXPECT_THROW(is_cyclotomic_product(P({1, 2})), DomainError);
}

TEST(IntPolynomial, Reciprocity) {
  EXPECT_TRUE(is_reciprocal(lehmer_polynomial()));
  EXPECT_FALSE(is_reciprocal(P({1, -1, 0, 1})));
}

TEST(IntPolynomial, SymbolicRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPolynomial p = random_poly(rng, trial % 9, 20);
    EXPECT_EQ(parse_poly(to_string(p)), p) << to_string(p);
    EXPECT_EQ(poly_from_json(to_json(p)), p);
  }
}

TEST(IntPolynomial, ParsesBothForms) {
  EXPECT_EQ(parse_poly("x^3 - x + 1"), P({1, -1, 0, 1}));
  EXPECT_EQ(parse_poly("1,-1,0,1"), P({1, -1, 0, 1}));
  EXPECT_EQ(parse_poly("2*x^2 + 3x - 4"), P({-4, 3, 2}));
  EXPECT_EQ(to_string(lehmer_polynomial()), "x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1");
}

TEST(IntPolynomial, ParseErrorsCarryPositions) {
  try {
    parse_poly("x^2 + y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 6u);
  }
  EXPECT_THROW(parse_poly(""), ParseError);
  EXPECT_THROW(parse_poly("1.5x + 1"), DomainError);
  EXPECT_THROW(parse_poly("1,,2"), ParseError);
}

TEST(IntPolynomial, BigCoefficientsSurvive) {
  const IntPolynomial p = parse_poly("123456789012345678901234567890x + 1");
  EXPECT_EQ(p.coeff(1), BigInt("123456789012345678901234567890"));
  EXPECT_EQ(poly_from_json(to_json(p)), p);
}

TEST(Roots, QuadraticMatchesFormula) {
  for (long long b = -6; b <= 6; ++b)
    for (long long c = -6; c <= 6; ++c) {
      if (c == 0 || b * b == 4 * c) continue;
      const RootSet rs = find_roots(P({c, b, 1}));
      ASSERT_EQ(rs.roots.size(), 2u);
      const std::complex<double> disc = std::sqrt(std::complex<double>(static_cast<double>(b * b - 4 * c)));
      const std::complex<double> r1 = (-static_cast<double>(b) + disc) / 2.0, r2 = (-static_cast<double>(b) - disc) / 2.0;
      for (const auto& z : rs.roots) EXPECT_LT(std::min(std::abs(z - r1), std::abs(z - r2)), 1e-9);
    }
}

TEST(Roots, VietaSumAndProduct) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<BigInt> c = random_poly(rng, 2 + trial % 12, 6).coeffs();
    c.back() = 1;
    if (c[0] == 0) c[0] = 1;
    const IntPolynomial p(c);
    const RootSet rs = find_roots(p);
    std::complex<double> sum = 0, prod = 1;
    for (const auto& z : rs.roots) {
      sum += z;
      prod *= z;
    }
    const int n = p.degree();
    const double want_sum = -static_cast<double>(p.coeff(n - 1));
    const double want_prod = (n % 2 ? -1.0 : 1.0) * static_cast<double>(p.coeff(0));
    EXPECT_NEAR(sum.real(), want_sum, 1e-6);
    EXPECT_NEAR(sum.imag(), 0.0, 1e-6);
    EXPECT_NEAR(prod.real(), want_prod, 1e-6 * std::max(1.0, std::abs(want_prod)));
  }
}

TEST(Roots, RepeatedRootsAreListedWithMultiplicity) {
  const RootSet rs = find_roots(P({-1, 1}) * P({-1, 1}) * P({2, 1}));
  ASSERT_EQ(rs.roots.size(), 3u);
  int near_one = 0;
  for (const auto& z : rs.roots) near_one += std::abs(z - 1.0) < 1e-9;
  EXPECT_EQ(near_one, 2);
}

TEST(Roots, ZeroAndConstantPolynomials) {
  EXPECT_THROW(find_roots(IntPolynomial{}), DomainError);
  EXPECT_THROW(find_roots(P({5})), DomainError);
}

TEST(Mahler, KnownValues) {
  EXPECT_NEAR(mahler_measure(lehmer_polynomial()), 1.17628081825991750654, 1e-9);
  EXPECT_NEAR(mahler_measure(P({1, -1, 0, 1})), 1.32471795724474602596, 1e-9);
  EXPECT_NEAR(mahler_measure(P({-2, 0, 1})), 2.0, 1e-12);
  EXPECT_NEAR(mahler_measure(P({1, 0, 5})), 5.0, 1e-12);
  EXPECT_DOUBLE_EQ(mahler_measure(cyclotomic(9) * cyclotomic(10)), 1.0);
}

TEST(Mahler, QuadraticAgainstClosedForm) {
  for (long long b = -5; b <= 5; ++b)
    for (long long c = 1; c <= 5; ++c) {
      const std::complex<double> disc = std::sqrt(std::complex<double>(static_cast<double>(b * b - 4 * c)));
      const double r1 = std::abs((-static_cast<double>(b) + disc) / 2.0);
      const double r2 = std::abs((-static_cast<double>(b) - disc) / 2.0);
      const double want = std::max(1.0, r1) * std::max(1.0, r2);
      if (b * b == 4 * c) continue;
      EXPECT_NEAR(mahler_measure(P({c, b, 1})), want, 1e-9) << b << " " << c;
    }
}

TEST(Mahler, Multiplicative) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const IntPolynomial a = random_poly(rng, 1 + trial % 6, 4), b = random_poly(rng, 1 + trial % 5, 4);
    if (a.coeff(0) == 0 || b.coeff(0) == 0) continue;
    const double ma = mahler_measure(a), mb = mahler_measure(b);
    EXPECT_NEAR(mahler_measure(a * b), ma * mb, 1e-7 * ma * mb);
  }
}

TEST(Mahler, KroneckerConsistency) {
  for (unsigned long long d = 1; d <= 40; ++d) EXPECT_DOUBLE_EQ(mahler_measure(cyclotomic(d)), 1.0) << d;
  EXPECT_GT(mahler_measure(P({1, 1, 0, 1})), 1.0);
}

TEST(Salem, Classification) {
  EXPECT_TRUE(is_salem(lehmer_polynomial()));
  EXPECT_FALSE(is_salem(P({1, -1, 0, 1})));
  EXPECT_FALSE(is_salem(cyclotomic(5)));
  EXPECT_FALSE(is_salem(P({1, -3, 1})));
  EXPECT_TRUE(is_salem(P({1, -1, -1, -1, 1})));
}

TEST(Roots, MaxRootModulus) {
  EXPECT_NEAR(max_root_modulus(lehmer_polynomial()), 1.17628081825991750654, 1e-9);
  EXPECT_NEAR(max_root_modulus(P({-8, 0, 0, 1})), 2.0, 1e-10);
}
