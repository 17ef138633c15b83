#include "qmac/series.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace qmac;

namespace {

template <class Ring>
void check_ring_axioms(const Ring& R, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t N = 40;
  for (int trial = 0; trial < 10; ++trial) {
    auto f = oracle::random_series(R, N, rng);
    auto g = oracle::random_series(R, N, rng);
    auto h = oracle::random_series(R, N, rng);
    const auto zero = Series<Ring>(R, N);
    const auto one = Series<Ring>::one(R, N);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f - f, zero);
    EXPECT_EQ(f + (-f), zero);
    EXPECT_EQ(f * one, f);
    EXPECT_EQ(power(f, 3), f * f * f);
    EXPECT_EQ(power(f, 0), one);
    // Theta is a derivation.
    EXPECT_EQ(theta(f * g), theta(f) * g + f * theta(g));
    EXPECT_EQ(theta_power(f, 3), theta(theta(theta(f))));
    if (R.is_unit(f[0])) EXPECT_EQ(f * invert(f), one);
  }
}

}  // namespace

TEST(Series, RingAxiomsOverRationals) { check_ring_axioms(RationalField{}, 1); }
TEST(Series, RingAxiomsModPrime) { check_ring_axioms(IntegersMod(11), 2); }
TEST(Series, RingAxiomsModComposite) { check_ring_axioms(IntegersMod(12), 3); }
TEST(Series, RingAxiomsModLargePrime) { check_ring_axioms(IntegersMod(18446744073709551557ULL), 4); }

TEST(Series, LargeModulusMultiplicationMatchesGmp) {
  const std::uint64_t m = 18446744073709551557ULL;
  const IntegersMod R(m);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t a = rng() % m, b = rng() % m;
    Integer expected = Integer(std::to_string(a)) * Integer(std::to_string(b)) % Integer(std::to_string(m));
    EXPECT_EQ(std::to_string(R.mul(a, b)), expected.get_str());
    EXPECT_EQ(R.sub(R.add(a, b), b), a);
  }
}

TEST(Series, BinaryOpsTruncateToShorterOperand) {
  const RationalField R;
  auto f = QSeries::one(R, 10);
  auto g = QSeries::one(R, 4);
  EXPECT_EQ((f * g).precision(), 4u);
  EXPECT_EQ((f + g).precision(), 4u);
}

TEST(Series, RingMismatchIsRejected) {
  ModSeries f(IntegersMod(5), 4), g(IntegersMod(7), 4);
  EXPECT_THROW(f + g, RingMismatch);
}

TEST(Series, InverseOfNonUnitThrows) {
  EXPECT_THROW(invert(ModSeries(IntegersMod(12), std::vector<std::uint64_t>{3, 1})), NotAUnit);
  EXPECT_THROW(invert(QSeries(RationalField{}, 5)), NotAUnit);
}

TEST(Series, ShiftAndHeckeStyleOperators) {
  std::mt19937_64 rng(6);
  const RationalField R;
  auto f = oracle::random_series(R, 60, rng);
  EXPECT_EQ(shift_down(shift_up(f, 7), 7), truncate(f, 53));
  auto v = v_operator(f, 3);
  EXPECT_EQ(v.precision(), 60u);
  EXPECT_EQ(u_operator(v, 3), truncate(f, 20));
  EXPECT_EQ(u_operator(f, 7).precision(), 9u);  // exponents 0, 7, ..., 56
  for (std::size_t k : {1, 2, 5}) EXPECT_EQ(times_one_minus_qk(divide_one_minus_qk(f, k), k), f);
}

TEST(Series, EulerProductMatchesRepeatedMultiplication) {
  const RationalField R;
  for (long e : {-3L, -1L, 1L, 3L, 24L}) {
    EXPECT_EQ(euler_product(R, 80, e), oracle::eta_power(e, 80)) << e;
  }
  EXPECT_EQ(euler_product(R, 80, 2, 3), v_operator(oracle::eta_power(2, 80), 3));
  // Euler's pentagonal theorem.
  auto eta = euler_product(R, 200, 1);
  for (long k = -12; k <= 12; ++k) {
    const long n = k * (3 * k - 1) / 2;
    if (n < 200) EXPECT_EQ(eta[n], (k % 2 == 0) ? 1 : -1) << n;
  }
}

TEST(Series, EulerProductReducesCorrectlyModP) {
  const IntegersMod R(7);
  EXPECT_EQ(euler_product(R, 100, -5), reduce_mod(oracle::eta_power(-5, 100), 7));
}

TEST(Series, SigmaAgainstDivisorSums) {
  for (unsigned nu : {0u, 1u, 3u, 5u, 11u}) {
    auto s = sigma_series(nu, 60);
    EXPECT_EQ(s[0], 0);
    for (unsigned long n = 1; n < 60; ++n) EXPECT_EQ(s[n], Rational(oracle::sigma(nu, n))) << nu << " " << n;
  }
}

TEST(Series, PsiTildeIsEtaCubed) {
  // Jacobi: prod (1-q^n)^3 = sum (-1)^n (2n+1) q^{n(n+1)/2}
  EXPECT_EQ(psi_tilde(150), oracle::eta_power(3, 150));
}

TEST(Series, ReduceModAndLift) {
  QSeries f(RationalField{}, std::vector<Rational>{Rational(-1), frac(1, 2), Rational(10), frac(-3, 4)});
  auto r = reduce_mod(f, 7);
  EXPECT_EQ(r.coeffs(), (std::vector<std::uint64_t>{6, 4, 3, 1}));
  EXPECT_EQ(lift(r)[0], 6);
  try {
    reduce_mod(f, 2);
    FAIL() << "expected NonIntegralCoefficient";
  } catch (const NonIntegralCoefficient& e) {
    EXPECT_EQ(e.exponent(), 1u);
    EXPECT_EQ(e.denominator(), 2);
  }
}

TEST(Series, ExponentialSatisfiesItsDifferentialEquation) {
  std::mt19937_64 rng(8);
  auto h = oracle::random_series(RationalField{}, 30, rng, 5);
  h = h - QSeries::constant(RationalField{}, 30, h[0]);
  auto e = exp_series(h);
  EXPECT_EQ(e[0], 1);
  EXPECT_EQ(theta(e), theta(h) * e);
  // exp(-sum sigma_{-1}(n) q^n) = prod (1 - q^n)
  std::vector<Rational> c(30, Rational(0));
  for (std::size_t n = 1; n < 30; ++n) c[n] = -Rational(oracle::sigma(1, n)) / Rational(static_cast<long>(n));
  EXPECT_EQ(exp_series(QSeries(RationalField{}, c)), oracle::eta_power(1, 30));
}
