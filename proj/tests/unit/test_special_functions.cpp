#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "freeclt/clt.hpp"
#include "freeclt/errors.hpp"
#include "freeclt/special_functions.hpp"
#include "oracles.hpp"

using namespace freeclt;
namespace ft = freeclt::testing;

TEST(OrthoPoly, LowDegreeHermite) {
  // d^n/dx^n e^{-x^2/2} = e^{-x^2/2} H_n(x)
  EXPECT_EQ(OrthoPoly::hermite(1).coefficients(), (std::vector<Rational>{0, -1}));
  EXPECT_EQ(OrthoPoly::hermite(2).coefficients(), (std::vector<Rational>{-1, 0, 1}));
  EXPECT_EQ(OrthoPoly::hermite(3).coefficients(), (std::vector<Rational>{0, 3, 0, -1}));
}

TEST(OrthoPoly, HermiteIsTheDerivativeOfTheGaussian) {
  const auto g = [](double x) { return std::exp(-x * x / 2); };
  const double h = 1e-3;
  for (double x : {-1.3, 0.2, 0.9, 2.1}) {
    const double d1 = (g(x + h) - g(x - h)) / (2 * h);
    const double d2 = (g(x + h) - 2 * g(x) + g(x - h)) / (h * h);
    EXPECT_NEAR(d1, g(x) * OrthoPoly::hermite(1)(x), 1e-6);
    EXPECT_NEAR(d2, g(x) * OrthoPoly::hermite(2)(x), 1e-6);
  }
}

TEST(OrthoPoly, ChebyshevCosineIdentity) {
  for (unsigned n = 0; n <= 12; ++n) {
    const OrthoPoly t = OrthoPoly::chebyshev1(n);
    for (double theta : {0.1, 0.7, 1.3, 2.9}) {
      EXPECT_NEAR(t(std::cos(theta)), std::cos(n * theta), 1e-12) << n;
    }
  }
  EXPECT_EQ(OrthoPoly::chebyshev1(4)(Rational(1, 2)), Rational(-1, 2));
}

TEST(EigenMoments, ChebyshevColumnsMatchQuadrature) {
  for (unsigned n = 1; n <= 5; ++n) {
    const Sequence m = chebyshev_density_moments(n, n + 10);
    for (unsigned k = 1; k <= n + 10; ++k) {
      EXPECT_NEAR(chebyshev_quadrature_moment(n, k), m.at(k).to_double(), 1e-8 * (1 + m.at(k).to_double()));
    }
  }
}

TEST(EigenMoments, HermiteMomentsMatchSimpson) {
  for (unsigned n = 1; n <= 5; ++n) {
    const Sequence m = hermite_density_moments(n, n + 6);
    for (unsigned k = 1; k <= n + 6; ++k) {
      const double num = ft::simpson(
          [&](double x) { return std::pow(x, k) * hermite_eigen_density(n, x); }, -14.0, 14.0, 4000);
      EXPECT_NEAR(num, m.at(k).to_double(), 1e-7 * (1 + std::abs(m.at(k).to_double()))) << n << "," << k;
    }
  }
}

TEST(EigenMoments, ColumnsOfTheMatrix) {
  for (Flavor f : {Flavor::free, Flavor::classical}) {
    const LinMatrix a = build_lin_matrix(f, 14);
    for (unsigned n = 1; n <= 8; ++n) {
      const Sequence m = f == Flavor::free ? chebyshev_density_moments(n, 14)
                                           : hermite_density_moments(n, 14);
      for (std::size_t k = 1; k <= 14; ++k) EXPECT_EQ(m.at(k), a.at(k, n)) << n << "," << k;
    }
  }
}

TEST(EigenDensities, Singularities) {
  EXPECT_THROW(chebyshev_eigen_density(3, 2.0), DomainError);
  EXPECT_THROW(chebyshev_eigen_density(3, -2.0), DomainError);
  EXPECT_EQ(chebyshev_eigen_density(3, 2.5), 0.0);
  EXPECT_NEAR(chebyshev_eigen_density(2, 0.0), -1.0 / (2 * std::numbers::pi), 1e-15);
}

TEST(Quadrature, GaussChebyshevIsExactForPolynomials) {
  // (1/pi) int t^{2j} / sqrt(4 - t^2) dt = binom(2j, j)
  for (unsigned j = 0; j <= 10; ++j) {
    const double got = gauss_chebyshev_integral([j](double t) { return std::pow(t, 2 * j); }, 32) /
                       std::numbers::pi;
    EXPECT_NEAR(got, binomial(2 * j, j).get_d(), 1e-9 * binomial(2 * j, j).get_d());
  }
}

TEST(FourierIdentity, CoefficientsAgree) {
  for (unsigned n = 1; n <= 30; ++n) {
    for (unsigned k = 0; n + 2 * k <= 30; ++k) {
      const auto [a, b] = fourier_identity_coefficients(n, k);
      EXPECT_EQ(a, b) << n << "," << k;
      EXPECT_EQ(b, Rational(1, n) * pow(Rational(1, 2), k) / Rational(factorial(k)));
    }
  }
}

TEST(FourierIdentity, SeriesAgree) {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto s = fourier_identity_series(n, 24);
    EXPECT_EQ(s.lhs, s.rhs) << n;
  }
}

TEST(Lemma, PrimitiveSeriesAgree) {
  for (unsigned n = 1; n <= 6; ++n) EXPECT_TRUE(lemma_Fn_identity(n, 30)) << n;
  const auto s = lemma_Fn_series(2, 8);
  // -(1/2) w^2 = -(1/2)(u^2 + 2u^4 + 5u^6 + 14 u^8 ...)
  EXPECT_EQ(s.rhs[2], Rational(-1, 2));
  EXPECT_EQ(s.rhs[4], Rational(-1));
  EXPECT_EQ(s.rhs[6], Rational(-5, 2));
}

TEST(Rothe, IdentityAndDirectSum) {
  for (unsigned n = 1; n <= 10; ++n) {
    for (unsigned m = 1; m <= 10; ++m) {
      for (unsigned t = 0; t <= 10; ++t) {
        const auto s = rothe_identity(n, m, t);
        EXPECT_EQ(s.lhs, s.rhs);
      }
    }
  }
  // n = m = 1, t = 1: 1/3*3*1 + 1*1/3*3 = 2 = 2/4 * binom(4, 1)
  EXPECT_EQ(rothe_identity(1, 1, 1).lhs, Rational(2));
}
