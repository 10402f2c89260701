#include "coxlink/growth.hpp"
#include "coxlink/seifert.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace coxlink;

namespace {

// (x - k + 1) prod [p_i] + sum_i prod_{j != i} [p_j], with plain vectors.
std::vector<long long> naive_delta(const std::vector<int>& ps) {
  const auto k = static_cast<long long>(ps.size());
  auto bracket_ll = [](int p) { return std::vector<long long>(static_cast<std::size_t>(p), 1); };
  std::vector<long long> all{1};
  for (int p : ps) all = oracle::convolve(all, bracket_ll(p));
  std::vector<long long> out = oracle::convolve(all, {1 - k, 1});
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::vector<long long> part{1};
    for (std::size_t j = 0; j < ps.size(); ++j)
      if (j != i) part = oracle::convolve(part, bracket_ll(ps[j]));
    for (std::size_t d = 0; d < part.size(); ++d) out[d] += part[d];
  }
  return out;
}

std::vector<int> random_signature(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(2, 5), p(2, 20);
  std::vector<int> ps(static_cast<std::size_t>(k(rng)));
  for (auto& v : ps) v = p(rng);
  return ps;
}

}  // namespace

TEST(Growth, BracketIsGeometricSum) {
  EXPECT_EQ(bracket(1), IntPolynomial(1));
  EXPECT_EQ(bracket(4), IntPolynomial({1, 1, 1, 1}));
  EXPECT_THROW(bracket(0), DomainError);
}

TEST(Growth, DeltaMatchesNaiveExpansion) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ps = random_signature(rng);
    EXPECT_EQ(delta(TupleSignature(ps)), oracle::from_ll(naive_delta(ps)));
  }
}

TEST(Growth, DeltaOfTwoThreeSevenIsLehmer) {
  EXPECT_EQ(delta(TupleSignature{2, 3, 7}), lehmer_polynomial());
  EXPECT_EQ(delta(TupleSignature{7, 2, 3}), lehmer_polynomial());
  EXPECT_EQ(delta(TupleSignature{2, 2}), IntPolynomial({1, 1, 1, 1}));
}

TEST(Growth, DeltaAtOneIsScaledEulerCharacteristic) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const TupleSignature sig(random_signature(rng));
    Rational prod = 1;
    for (int p : sig.ps()) prod *= p;
    EXPECT_EQ(Rational(oracle::eval(delta(sig), 1LL)), prod * orbifold_chi(sig));
  }
}

TEST(Growth, EulerCharacteristicAndExcess) {
  EXPECT_EQ(orbifold_chi(TupleSignature{2, 3, 7}), Rational(-1, 42));
  EXPECT_EQ(orbifold_chi(TupleSignature{2, 3, 6}), Rational(0));
  EXPECT_EQ(orbifold_chi(TupleSignature{2, 3, 5}), Rational(1, 30));
  EXPECT_EQ(excess(TupleSignature{2, 4, 5}), Rational(1, 20));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const TupleSignature sig(random_signature(rng));
    EXPECT_EQ(excess(sig), -orbifold_chi(sig));
  }
}

TEST(Growth, GrowthRateExceedsOneExactlyWhenHyperbolic) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const TupleSignature sig(random_signature(rng));
    const GrowthRate g = growth_rate(sig);
    if (orbifold_chi(sig) < 0) {
      EXPECT_GT(g.value, 1.0) << to_string(sig);
      EXPECT_NEAR(static_cast<double>(oracle::eval(delta(sig), static_cast<long double>(g.value))), 0.0, 1e-6 * std::pow(g.value, delta(sig).degree()));
    } else {
      EXPECT_EQ(g.value, 1.0) << to_string(sig);
    }
  }
}

TEST(Growth, KnownGrowthRates) {
  const GrowthRate lehmer = growth_rate(TupleSignature{2, 3, 7});
  EXPECT_NEAR(lehmer.value, 1.17628081825991750654, 1e-9);
  EXPECT_TRUE(lehmer.salem);
  EXPECT_NEAR(growth_rate(TupleSignature{3, 3, 4}).value, 1.40126836793, 1e-8);
  EXPECT_EQ(growth_rate(TupleSignature{2, 3, 6}).value, 1.0);
}

TEST(Growth, SignatureValidation) {
  EXPECT_THROW(TupleSignature({7}), DomainError);
  EXPECT_THROW(TupleSignature({2, 1, 3}), DomainError);
  EXPECT_EQ(TupleSignature({7, 2, 3}), TupleSignature({2, 3, 7}));
  EXPECT_EQ(to_string(TupleSignature{7, 2, 3}), "(7,2,3)");
}

TEST(Growth, PretzelAlexanderIsDeltaAtMinusX) {
  const IntPolynomial want = IntPolynomial({1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1});
  EXPECT_EQ(pretzel_alexander(TupleSignature{2, 3, 7}), want);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const TupleSignature sig(random_signature(rng));
    const IntPolynomial d = delta(sig), a = pretzel_alexander(sig);
    for (int x = -3; x <= 3; ++x) {
      const BigInt lhs = oracle::eval(a, static_cast<long long>(x)), rhs = oracle::eval(d, static_cast<long long>(-x));
      EXPECT_TRUE(lhs == rhs || lhs == -rhs);
    }
  }
}
