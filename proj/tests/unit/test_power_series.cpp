#include <gtest/gtest.h>

#include "freeclt/power_series.hpp"
#include "freeclt/special_functions.hpp"
#include "oracles.hpp"

using namespace freeclt;

TEST(PowerSeries, GeometricSeriesTimesOneMinusT) {
  const std::size_t order = 12;
  PowerSeries geometric(std::vector<Rational>(order + 1, Rational(1)), order);
  PowerSeries one_minus_t = PowerSeries::one(order) - PowerSeries::variable(order);
  EXPECT_EQ(geometric * one_minus_t, PowerSeries::one(order));
}

TEST(PowerSeries, PowersMatchBinomialCoefficients) {
  const std::size_t order = 10;
  const PowerSeries base = PowerSeries::one(order) + PowerSeries::variable(order);
  const PowerSeries p = series_pow(base, 7);
  for (std::size_t j = 0; j <= order; ++j) {
    EXPECT_EQ(p[j], Rational(binomial(7, static_cast<unsigned>(j))));
  }
  EXPECT_EQ(series_pow(base, 0), PowerSeries::one(order));
}

TEST(PowerSeries, ExpMonomial) {
  const PowerSeries e = PowerSeries::exp_monomial(Rational(-1, 2), 2, 8);
  EXPECT_EQ(e[0], Rational(1));
  EXPECT_EQ(e[1], Rational(0));
  EXPECT_EQ(e[2], Rational(-1, 2));
  EXPECT_EQ(e[4], Rational(1, 8));
  EXPECT_EQ(e[6], Rational(-1, 48));
  EXPECT_EQ(e[8], Rational(1, 384));
}

TEST(PowerSeries, MixedOrdersTruncateToTheSmaller) {
  const PowerSeries a = PowerSeries::one(5);
  const PowerSeries b = PowerSeries::variable(3);
  EXPECT_EQ((a + b).order(), 3u);
  EXPECT_EQ((a * b).order(), 3u);
  EXPECT_EQ(PowerSeries::variable(6).shifted(2)[3], Rational(1));
  EXPECT_EQ(PowerSeries::variable(6).shifted(6)[6], Rational(0));
}

TEST(PowerSeries, CatalanFixedPoint) {
  const std::size_t order = 25;
  const PowerSeries w = catalan_w_series(order);
  const auto catalan = freeclt::testing::catalan_numbers(order);
  // w = sum_j C_j u^{2j+1}
  for (std::size_t j = 0; j <= order; ++j) {
    const Rational expected = j % 2 ? Rational(catalan[(j - 1) / 2]) : Rational(0);
    EXPECT_EQ(w[j], expected) << "u^" << j;
  }
  const PowerSeries u = PowerSeries::variable(order);
  EXPECT_EQ(w, u * (PowerSeries::one(order) + w * w));
}
