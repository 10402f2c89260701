#include "coxlink/seifert.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace coxlink;

namespace {

const char* kFirst5Cycle =
    R"({"order":[1,2,3,4,5],"word":[[4,"head"],[5,"head"],[3,"tail"],[4,"tail"],[2,"head"],[3,"head"],[1,"tail"],[2,"tail"],[5,"tail"],[1,"head"]]})";
const char* kSecond5Cycle =
    R"({"order":[1,3,2,5,4],"word":[[4,"tail"],[5,"head"],[3,"head"],[4,"head"],[2,"head"],[3,"tail"],[1,"tail"],[2,"tail"],[5,"tail"],[1,"head"]]})";

IntPolynomial P(std::initializer_list<long long> c) { return IntPolynomial(c); }

OrderedChordSystem random_positive(std::mt19937_64& rng, int n) {
  ChordDiagram d = oracle::random_diagram(n, rng);
  const OrderedChordSystem base = make_positive(d);
  // Random positive reorderings: try shuffles, keep the first positive one.
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<int> seq = base.sequence();
    std::shuffle(seq.begin(), seq.end(), rng);
    if (auto oriented = positive_orientation(base.diagram(), seq)) return OrderedChordSystem::from_sequence(*oriented, seq);
  }
  return base;
}

}  // namespace

TEST(Seifert, FirstFiveCycleMatrix) {
  const SeifertMatrix m = seifert_matrix(system_from_json(nlohmann::json::parse(kFirst5Cycle)));
  const IntMatrix want{{1, -1, 0, 0, -1}, {0, 1, -1, 0, 0}, {0, 0, 1, -1, 0}, {0, 0, 0, 1, -1}, {0, 0, 0, 0, 1}};
  EXPECT_EQ(m.matrix(), want);
  EXPECT_EQ(alexander(m).negate_variable().with_positive_lead(), P({1, -1, 0, 0, -1, 1}));
}

TEST(Seifert, SecondFiveCycleMatrix) {
  const SeifertMatrix m = seifert_matrix(system_from_json(nlohmann::json::parse(kSecond5Cycle)));
  const IntMatrix want{{1, 0, -1, -1, 0}, {0, 1, -1, 0, -1}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, -1}, {0, 0, 0, 0, 1}};
  EXPECT_EQ(m.matrix(), want);
  EXPECT_EQ(alexander(m).negate_variable().with_positive_lead(), P({1, 0, -1, -1, 0, 1}));
}

TEST(Seifert, RejectsNonPositiveSystems) {
  const OrderedChordSystem sys = OrderedChordSystem::from_sequence(parse_diagram("+1 -2 -1 +2"), {0, 1});
  try {
    seifert_matrix(sys);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("A[2][1]"), std::string::npos);
  }
}

TEST(Seifert, ValidatesUnitriangularity) {
  EXPECT_THROW(SeifertMatrix(IntMatrix{{1, 0}, {1, 1}}), DomainError);
  EXPECT_THROW(SeifertMatrix(IntMatrix{{2, 0}, {0, 1}}), DomainError);
  EXPECT_NO_THROW(SeifertMatrix(IntMatrix{{1, 5}, {0, 1}}));
  EXPECT_EQ(seifert_from_json(to_json(SeifertMatrix(IntMatrix{{1, -1}, {0, 1}}))).matrix(), (IntMatrix{{1, -1}, {0, 1}}));
}

TEST(Seifert, CrossModuleIdentities) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 7;
    const OrderedChordSystem sys = random_positive(rng, n);
    const SeifertMatrix s = seifert_matrix(sys);
    const IntMatrix& m = s.matrix();
    const CoxeterGraph g = incidence_graph(sys.diagram());

    // M + M^t is the bilinear form, read in order indices.
    const IntMatrix b = bilinear_form(g).integer;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        ASSERT_EQ(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) + m(static_cast<std::size_t>(j), static_cast<std::size_t>(i)),
                  b(static_cast<std::size_t>(sys.chord_at(i)), static_cast<std::size_t>(sys.chord_at(j))));

    const IntPolynomial cox = char_poly_coxeter(g, sys.ordering());
    const IntPolynomial link = oracle::to_int_poly(oracle::charpoly(oracle::to_rational(coxeter_from_link(s))));
    EXPECT_EQ(link, cox);

    // det(tM - M^t) against the characteristic polynomial of the monodromy.
    const IntPolynomial a = alexander(s);
    const IntPolynomial h = oracle::to_int_poly(oracle::charpoly(oracle::to_rational(monodromy(s))));
    EXPECT_EQ(a, h.with_positive_lead());
    EXPECT_EQ(a.negate_variable().with_positive_lead(), cox.with_positive_lead());

    // Reciprocity up to sign.
    const IntPolynomial rev = IntPolynomial(std::vector<BigInt>(a.coeffs().rbegin(), a.coeffs().rend()));
    EXPECT_TRUE(rev == a || rev == -a);
  }
}

TEST(Seifert, MonodromyIsIntegralAndUnimodular) {
  const SeifertMatrix s = seifert_matrix(system_from_json(nlohmann::json::parse(kSecond5Cycle)));
  const BigMatrix h = monodromy(s);
  EXPECT_EQ(oracle::leibniz_det(oracle::to_rational(h)), Rational(1));
  const BigMatrix m = convert<BigInt>(s.matrix());
  EXPECT_EQ(h * m, m.transposed());
}

TEST(Seifert, AlexanderConstantOnDirectedStructure) {
  const ChordDiagram d = parse_diagram("+4 +5 +3 -4 +2 -3 +1 -2 -5 -1");
  std::map<ArcList, IntPolynomial> seen;
  for_each_positive_sequence(d, [&](const OrderedChordSystem& sys, const ArcList& key, std::size_t) {
    const IntPolynomial a = alexander(seifert_matrix(sys));
    auto [it, fresh] = seen.emplace(key, a);
    if (!fresh) EXPECT_EQ(it->second, a);
  });
  EXPECT_EQ(seen.size(), 3u);
}

TEST(Seifert, StarSystemsGiveLehmer) {
  const OrderedChordSystem sys = star_positive_system({2, 3, 7});
  EXPECT_EQ(incidence_graph(sys.diagram()).edges(), star_graph({2, 3, 7}).edges());
  const SeifertMatrix s = seifert_matrix(sys);
  EXPECT_EQ(oracle::to_int_poly(oracle::charpoly(oracle::to_rational(coxeter_from_link(s)))), lehmer_polynomial());
  EXPECT_EQ(alexander(s), pretzel_alexander(TupleSignature{2, 3, 7}));
}

TEST(Seifert, TreeAlexanderIndependentOfOrderingAndRealization) {
  for (const auto& ps : std::vector<std::vector<int>>{{2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {2, 2, 5}, {3, 3, 3}, {2, 3, 4}, {2, 2, 2, 2}}) {
    const CoxeterGraph g = star_graph(ps);
    IntPolynomial want;
    for (const auto& d : realize_all(g)) {
      for_each_positive_sequence(d, [&](const OrderedChordSystem& sys, const ArcList&, std::size_t) {
        const IntPolynomial a = alexander(seifert_matrix(sys));
        if (want.is_zero()) want = a;
        EXPECT_EQ(a, want);
      });
    }
    EXPECT_EQ(want, pretzel_alexander(TupleSignature(ps)));
  }
}
