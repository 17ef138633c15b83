#include "qmac/macmahon.hpp"
#include "qmac/modform.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qmac;

namespace {

ModularFormModP random_form(std::uint64_t p, unsigned weight, std::size_t N, std::mt19937_64& rng) {
  return {p, weight, oracle::random_series(IntegersMod(p), N, rng),
          History{"grade", Json{{"class", weight % (p - 1)}, {"weight", weight}}, {}}};
}

ModSeries total(const std::vector<ModularFormModP>& forms, std::uint64_t p, std::size_t N) {
  ModSeries acc(IntegersMod(p), N);
  for (const auto& f : forms) acc = acc + f.series;
  return acc;
}

}  // namespace

TEST(ModForm, SturmBound) {
  EXPECT_EQ(sturm_bound(11), 0u);
  EXPECT_EQ(sturm_bound(12), 1u);
  EXPECT_EQ(sturm_bound(24), 2u);
  EXPECT_EQ(sturm_bound(240), 20u);
  EXPECT_EQ(sturm_bound(228), 19u);
}

TEST(Projector, CoefficientsGiveTheResidueIndicator) {
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    for (std::uint64_t r = 0; r < p; ++r) {
      const auto c = projector_coefficients(p, r);
      ASSERT_EQ(c.size(), p);
      for (std::uint64_t n = 0; n < 3 * p; ++n) {
        std::uint64_t acc = 0, power = 1;
        for (std::uint64_t k = 0; k < p; ++k) {
          acc = (acc + c[k] * power) % p;
          power = power * (n % p) % p;
        }
        EXPECT_EQ(acc, n % p == r ? 1u : 0u) << p << " " << r << " " << n;
      }
    }
  }
  EXPECT_THROW(projector_coefficients(9, 1), std::invalid_argument);
  EXPECT_THROW(projector_coefficients(5, 5), std::invalid_argument);
}

TEST(Projector, PartitionOfUnityOrthogonalityIdempotence) {
  std::mt19937_64 rng(2024);
  const std::size_t N = 60;
  for (std::uint64_t p : {5u, 7u, 11u}) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto f = random_form(p, 12 + 2 * static_cast<unsigned>(trial), N, rng);
      ModSeries unity(IntegersMod(p), N);
      for (std::uint64_t r = 0; r < p; ++r) {
        const auto pieces = projector(f, r);
        const ModSeries pr = total(pieces, p, N);
        EXPECT_EQ(pr, project_series(f.series, r));
        unity = unity + pr;
        for (std::uint64_t s = 0; s < p; ++s) {
          std::vector<ModularFormModP> again;
          for (const auto& piece : pieces) {
            for (auto& q : projector(piece, s)) again.push_back(std::move(q));
          }
          const ModSeries prs = total(again, p, N);
          if (s == r) {
            EXPECT_EQ(prs, pr) << "idempotence p=" << p << " r=" << r;
          } else {
            EXPECT_TRUE(prs.is_zero()) << "orthogonality p=" << p << " r=" << r << " s=" << s;
          }
        }
      }
      EXPECT_EQ(unity, f.series) << "partition of unity p=" << p;
    }
  }
}

TEST(Projector, PiecesHaveDistinctClassesAndReplayableWeights) {
  std::mt19937_64 rng(7);
  const auto f = random_form(11, 120, 40, rng);
  const auto pieces = projector(f, 7);
  std::set<unsigned> classes;
  for (const auto& piece : pieces) {
    EXPECT_TRUE(classes.insert(piece.weight % 10).second);
    EXPECT_EQ(replay_weight(piece.history, 11), piece.weight);
    EXPECT_EQ(replay_weight(History::from_json(piece.history.to_json()), 11), piece.weight);
  }
  // Theta^10 f has weight 120 + 10 * 12.
  unsigned top = 0;
  for (const auto& piece : pieces) top = std::max(top, piece.weight);
  EXPECT_EQ(top, 240u);
}

TEST(Operators, ThetaLiftAndSumWeights) {
  std::mt19937_64 rng(9);
  const auto f = random_form(7, 12, 20, rng);
  const auto t = theta_modp(f);
  EXPECT_EQ(t.weight, 20u);
  EXPECT_EQ(t.series, theta(f.series));
  const auto l = lift(f, 3);
  EXPECT_EQ(l.weight, 30u);
  EXPECT_EQ(l.series, f.series);
  const auto s = sum_forms({f, l});
  EXPECT_EQ(s.weight, 30u);
  EXPECT_EQ(replay_weight(s.history, 7), 30u);
  EXPECT_THROW(sum_forms({f, t}), std::invalid_argument);
  EXPECT_THROW(sum_forms({}), std::invalid_argument);
}

TEST(Operators, ReplayRejectsInconsistentHistories) {
  History bad{"sum", Json::object(), {History{"grade", Json{{"weight", 12}}, {}}, History{"grade", Json{{"weight", 14}}, {}}}};
  EXPECT_THROW(replay_weight(bad, 5), std::logic_error);
  EXPECT_THROW(replay_weight(History{"frobnicate", Json::object(), {}}, 5), std::logic_error);
  EXPECT_THROW(replay_weight(History{"theta", Json::object(), {}}, 5), std::logic_error);
}

TEST(Grading, PiecesSumToTheReduction) {
  for (auto [a, p] : {std::pair{2u, 5u}, std::pair{3u, 7u}, std::pair{4u, 5u}, std::pair{10u, 11u}}) {
    const auto e = mo_expansion(a, ConstantTables(a));
    const auto pieces = grade_mod_p(e, p, 60);
    EXPECT_EQ(total(pieces, p, 60), reduce_mod(mo_direct(a, 60).series, p)) << a << " " << p;
    for (const auto& piece : pieces) EXPECT_EQ(replay_weight(piece.history, p), piece.weight);
  }
  EXPECT_THROW(grade_mod_p(mo_expansion(2, ConstantTables(2)), 3, 10), std::invalid_argument);
}

TEST(Grading, OrderTenModElevenClassSums) {
  const auto e = mo_expansion(10, ConstantTables(10));
  const auto weights = graded_weights(e, 11);
  EXPECT_EQ(weights, (std::vector<std::pair<unsigned, unsigned>>{{0, 120}, {2, 72}, {4, 84}, {6, 96}, {8, 108}}));
  const auto pieces = grade_mod_p(e, 11, 10);
  ASSERT_EQ(pieces.size(), 5u);
  // Reductions q^0..q^9 of the five class sums. The class-6 value at q^5 is
  // published as 9; the five sums must add to MO(10; 5) = 0, which
  // forces 2.
  const std::vector<std::vector<std::uint64_t>> expected{
      {0, 0, 0, 2, 6, 7, 8, 5, 2, 2},
      {0, 0, 0, 6, 7, 10, 7, 8, 7, 6},
      {0, 0, 0, 7, 10, 8, 2, 0, 4, 7},
      {0, 0, 0, 10, 8, 2, 10, 1, 4, 10},
      {0, 0, 0, 8, 2, 6, 6, 8, 5, 8},
  };
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(pieces[i].series.coeffs(), expected[i]) << "class " << 2 * i;
  for (std::size_t n = 0; n < 10; ++n) {
    std::uint64_t sum = 0;
    for (const auto& row : expected) sum += row[n];
    EXPECT_EQ(sum % 11, 0u) << n;
  }
}

TEST(Grading, ThetaCombinationForResidueSeven) {
  // -5(T^4 - T^9) + 9(T^3 - T^8) - 3(T^2 - T^7) + (T - T^6) - 4(1 - T^5), applied to every class sum.
  const std::vector<long> combo{-4, 1, -3, 9, -5, 4, -1, 3, -9, 5};
  const std::uint64_t p = 11;
  const std::size_t N = 200;
  std::vector<std::uint64_t> coeffs;
  for (long c : combo) coeffs.push_back(static_cast<std::uint64_t>((c % 11 + 11) % 11));
  const auto pieces = grade_mod_p(mo_expansion(10, ConstantTables(10)), p, N);
  std::vector<ModularFormModP> terms;
  for (const auto& piece : pieces) {
    for (auto& t : theta_combination(piece, coeffs)) terms.push_back(std::move(t));
  }
  const auto grouped = regroup(terms);
  std::vector<unsigned> weights;
  for (const auto& g : grouped) weights.push_back(g.weight);
  EXPECT_EQ(weights, (std::vector<unsigned>{180, 192, 204, 216, 228}));

  // The multiplier sum_k c_k n^k is 4 on n = 7 and 7 on n = 0 (mod 11), so the
  // combination keeps the n = 0 class as well as n = 7.
  const ModSeries u = reduce_mod(mo_direct(10, N).series, p);
  const ModSeries expected =
      scale(project_series(u, 7), std::uint64_t{4}) + scale(project_series(u, 0), std::uint64_t{7});
  EXPECT_EQ(total(grouped, p, N), expected);
}

TEST(Grading, SubstitutionDiagnosticsForOrderTen) {
  GradingInfo info;
  grade_mod_p(mo_expansion(10, ConstantTables(10)), 11, 25, &info);
  EXPECT_FALSE(info.monomials_p_integral);
  EXPECT_EQ(info.min_coefficient_valuation, -1);
  EXPECT_FALSE(info.substitution_agrees);

  GradingInfo small;
  grade_mod_p(mo_expansion(1, ConstantTables(1)), 7, 25, &small);
  EXPECT_TRUE(small.monomials_p_integral);
  EXPECT_TRUE(small.substitution_agrees);
}

TEST(Grading, FormJson) {
  std::mt19937_64 rng(1);
  const auto f = theta_modp(random_form(5, 12, 4, rng));
  const Json j = to_json(f);
  EXPECT_EQ(j.at("weight"), 18);
  EXPECT_EQ(j.at("history").at("op"), "theta");
  EXPECT_EQ(j.at("history").at("inputs").at(0).at("op"), "grade");
}
