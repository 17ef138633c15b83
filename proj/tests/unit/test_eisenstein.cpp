#include "qmac/eisenstein.hpp"
#include "qmac/macmahon.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace qmac;

TEST(Eisenstein, MatchesDivisorSumOracle) {
  for (unsigned k = 2; k <= 16; k += 2) EXPECT_EQ(eisenstein(k, 50), oracle::eisenstein(k, 50)) << k;
  auto e4 = eisenstein(4, 5);
  EXPECT_EQ(e4.coeffs(), (std::vector<Rational>{1, 240, 2160, 6720, 17520}));
  EXPECT_THROW(eisenstein(3, 5), std::invalid_argument);
}

TEST(Eisenstein, RamanujanIdentities) {
  const Report r = ramanujan_check(200);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.items().size(), 3u);
}

TEST(Eisenstein, ModularRelationsInLowWeight) {
  const std::size_t N = 80;
  auto e4 = eisenstein(4, N), e6 = eisenstein(6, N);
  EXPECT_EQ(e4 * e4, eisenstein(8, N));
  EXPECT_EQ(e4 * e6, eisenstein(10, N));
  // 691 E12 = 441 E4^3 + 250 E6^2
  EXPECT_EQ(scale(eisenstein(12, N), Rational(691)), scale(e4 * e4 * e4, Rational(441)) + scale(e6 * e6, Rational(250)));
}

TEST(Constants, FirstValuesOfC) {
  ConstantTables t(3);
  EXPECT_EQ(t.c(0, 0, 0), 1);
  EXPECT_EQ(t.c(1, 0, 0), -1);
  EXPECT_EQ(t.c(0, 1, 0), frac(-2, 3));
  EXPECT_EQ(t.c(0, 0, 1), frac(-16, 9));
  EXPECT_EQ(t.c(-1, 0, 0), 0);
  EXPECT_EQ(t.c(9, 0, 0), 0);
}

TEST(Constants, SecondOrderValuesOfC) {
  ConstantTables t(5);
  EXPECT_EQ(t.c(1, 1, 0), frac(14, 3));
  EXPECT_EQ(t.c(1, 0, 1), frac(64, 3));
}

TEST(Constants, CTableCoversTheWeightCone) {
  const auto c = c_table(7);
  std::size_t expected = 0;
  for (unsigned t = 0; t <= 7; ++t) {
    for (unsigned g = 0; 3 * g <= t; ++g) expected += (t - 3 * g) / 2 + 1;
  }
  EXPECT_EQ(c.size(), expected);
  for (const auto& [k, v] : c) EXPECT_LE(k[0] + 2 * k[1] + 3 * k[2], 7u);
}

TEST(Constants, WeightConstantsMatchDefiningSum) {
  for (unsigned a = 0; a <= 8; ++a) {
    for (unsigned t = 0; t <= a; ++t) EXPECT_EQ(weight_constant(t, a), oracle::w_by_combinations(t, a)) << t << "," << a;
  }
  EXPECT_THROW(weight_constant(3, 2), std::out_of_range);
}

TEST(Constants, WeightConstantsMatchArcsinGeneratingFunction) {
  for (unsigned a = 0; a <= 8; ++a) {
    for (unsigned t = 0; t <= a; ++t) EXPECT_EQ(weight_constant(t, a), oracle::w_by_arcsin(t, a)) << t << "," << a;
  }
}

TEST(Constants, BRecursionMatchesScaledW) {
  ConstantTables tables(8);
  for (unsigned a = 0; a <= 8; ++a) {
    for (unsigned t = 0; t <= a; ++t) {
      EXPECT_EQ(tables.b(t, a), pow(Rational(-4), t) * Rational(factorial(2 * t + 1)) * tables.w(t, a));
    }
  }
}

TEST(Constants, StarredConstantsRecoveredByLinearFit) {
  // Solve U*_a = sum_t x_t bbE*_{2t} exactly from q-coefficients of the direct sum.
  const std::size_t N = 40;
  ConstantTables tables(6);
  for (unsigned a = 1; a <= 6; ++a) {
    std::vector<QSeries> basis;
    for (unsigned t = 0; t <= a; ++t) basis.push_back(bbE_star(t, N));
    std::vector<Rational> c(N);
    for (std::size_t n = 0; n < N; ++n) c[n] = oracle::macmahon(false, a, static_cast<int>(n));
    auto x = oracle::fit(basis, QSeries(RationalField{}, c));
    ASSERT_TRUE(x.has_value()) << a;
    for (unsigned t = 0; t <= a; ++t) EXPECT_EQ((*x)[t], tables.w_star(t, a)) << t << "," << a;
  }
}

TEST(Constants, UStarFiveExample) {
  ConstantTables tables(5);
  // The constant term differs from the printed example by a factor of ten
  // (122624409600, not 12262440960); the fit above confirms this value.
  const std::vector<Rational> expected{frac(1295803, 1) / Rational(Integer("122624409600")), frac(35, 294912),
                                       frac(-3229, 967680), frac(47, 1152), frac(-7, 24), Rational(1)};
  for (unsigned t = 0; t <= 5; ++t) EXPECT_EQ(tables.w_star(t, 5), expected[t]) << t;
}

TEST(Constants, UThreeExampleRecoveredByLinearFit) {
  // Basis 1, E2, E2^2, E4, E2^3, E2 E4, E6 built from oracle Eisenstein series.
  const std::size_t N = 30;
  auto e2 = oracle::eisenstein(2, N), e4 = oracle::eisenstein(4, N), e6 = oracle::eisenstein(6, N);
  std::vector<QSeries> basis{QSeries::one(RationalField{}, N), e2, e2 * e2, e4, e2 * e2 * e2, e2 * e4, e6};
  std::vector<Rational> c(N);
  for (std::size_t n = 0; n < N; ++n) c[n] = oracle::macmahon(true, 3, static_cast<int>(n));
  auto x = oracle::fit(basis, QSeries(RationalField{}, c));
  ASSERT_TRUE(x.has_value());
  const std::vector<Rational> displayed{frac(5, 7168),   frac(-37, 46080), frac(5, 27648),    frac(-1, 13824),
                                    frac(-1, 82944), frac(1, 69120),   frac(-1, 181440)};
  EXPECT_EQ(*x, displayed);

  const auto e = mo_expansion(3, ConstantTables(3));
  const std::vector<EisensteinProduct> monomials{EisensteinProduct(),           EisensteinProduct::e246(1, 0, 0),
                                                 EisensteinProduct::e246(2, 0, 0), EisensteinProduct::e246(0, 1, 0),
                                                 EisensteinProduct::e246(3, 0, 0), EisensteinProduct::e246(1, 1, 0),
                                                 EisensteinProduct::e246(0, 0, 1)};
  for (std::size_t i = 0; i < monomials.size(); ++i) EXPECT_EQ(e.coefficient(monomials[i]), displayed[i]) << i;
  EXPECT_EQ(e.size(), 7u);
}

TEST(Constants, JsonRoundTrip) {
  ConstantTables t(6);
  const Json j = t.to_json();
  ConstantTables back = ConstantTables::from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.to_json(), j);
  EXPECT_EQ(back.w_star(0, 5), t.w_star(0, 5));
  Json bad = j;
  bad["version"] = 2;
  EXPECT_THROW(ConstantTables::from_json(bad), std::invalid_argument);
  bad = j;
  bad["w"].erase(bad["w"].size() - 1);
  EXPECT_THROW(ConstantTables::from_json(bad), std::invalid_argument);
}

TEST(CycleIndex, EandEtaIdentity) {
  const std::size_t N = 60;
  for (unsigned t = 0; t <= 5; ++t) {
    Rational factor = pow(Rational(-1), t) / (pow(Rational(4), t) * Rational(factorial(2 * t + 1)));
    EXPECT_EQ(bbE(t, N), scale(script_E(t, N), factor)) << t;
  }
}

TEST(CycleIndex, ThetaRecurrence) {
  for (unsigned t = 1; t <= 5; ++t) EXPECT_TRUE(theta_bbE_check(t, 60).passed()) << t;
}

TEST(CycleIndex, ScriptEExpansionMatchesEtaQuotient) {
  ConstantTables tables(5);
  for (unsigned t = 0; t <= 5; ++t) {
    EXPECT_EQ(expansion_eval(script_E_expansion(t, tables), 50), script_E(t, 50)) << t;
  }
}

TEST(CycleIndex, ConstantTermsOfStarredSeries) {
  // Constant terms of bbE*_{2t} are the Taylor coefficients of (x/2)/sinh(x/2).
  // Check sum_t w*_t(a) bbE*_{2t}(0) = 0 for a >= 1, i.e. U*_a has no constant term.
  ConstantTables tables(7);
  for (unsigned a = 1; a <= 7; ++a) {
    Rational acc = 0;
    for (unsigned t = 0; t <= a; ++t) acc += tables.w_star(t, a) * bbE_star(t, 1)[0];
    EXPECT_EQ(acc, 0) << a;
  }
}
