#include "freeclt/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "freeclt/errors.hpp"
#include "freeclt/partitions.hpp"

namespace freeclt {

OrthoPoly OrthoPoly::hermite(unsigned degree) {
  std::vector<Rational> h{Rational(1)};
  for (unsigned d = 0; d < degree; ++d) {
    // H_{d+1} = H_d' - x H_d
    std::vector<Rational> next(h.size() + 1);
    for (std::size_t i = 1; i < h.size(); ++i) {
      next[i - 1] += Rational(static_cast<long>(i)) * h[i];
    }
    for (std::size_t i = 0; i < h.size(); ++i) next[i + 1] -= h[i];
    h = std::move(next);
  }
  return OrthoPoly(Family::hermite, degree, std::move(h));
}

OrthoPoly OrthoPoly::chebyshev1(unsigned degree) {
  std::vector<Rational> prev{Rational(1)};
  if (degree == 0) return OrthoPoly(Family::chebyshev1, 0, prev);
  std::vector<Rational> cur{Rational(0), Rational(1)};
  for (unsigned d = 1; d < degree; ++d) {
    std::vector<Rational> next(cur.size() + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += Rational(2) * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return OrthoPoly(Family::chebyshev1, degree, std::move(cur));
}

double OrthoPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Rational OrthoPoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

Sequence column_moments(Flavor flavor, unsigned n, std::size_t max_order) {
  if (n < 1) throw std::invalid_argument("eigenfunction index must be at least 1");
  std::vector<QSqrt2> m;
  for (std::size_t j = 1; j <= max_order; ++j) {
    if (j < n || (j - n) % 2 != 0) {
      m.emplace_back();
      continue;
    }
    const int k = static_cast<int>((j - n) / 2);
    const BigInt a = flavor == Flavor::free ? kreweras_count(static_cast<int>(n), k)
                                            : classical_profile_count(static_cast<int>(n), k);
    m.emplace_back(Rational(a));
  }
  return Sequence(flavor, SequenceKind::moments, std::move(m));
}

}  // namespace

Sequence hermite_density_moments(unsigned n, std::size_t max_order) {
  return column_moments(Flavor::classical, n, max_order);
}

Sequence chebyshev_density_moments(unsigned n, std::size_t max_order) {
  return column_moments(Flavor::free, n, max_order);
}

double hermite_eigen_density(unsigned n, double x) {
  if (n < 1) throw std::invalid_argument("eigenfunction index must be at least 1");
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double norm = sign / (static_cast<double>(n) * std::sqrt(2.0 * std::numbers::pi));
  return norm * std::exp(-0.5 * x * x) * OrthoPoly::hermite(n)(x);
}

double chebyshev_eigen_density(unsigned n, double x) {
  if (std::abs(x) == 2.0) {
    throw DomainError("chebyshev_eigen_density: singular at x = +-2");
  }
  if (std::abs(x) > 2.0) return 0.0;
  return std::cos(n * std::acos(x / 2.0)) / (std::numbers::pi * std::sqrt(4.0 - x * x));
}

double gauss_chebyshev_integral(const std::function<double(double)>& f, std::size_t nodes) {
  if (nodes == 0) throw std::invalid_argument("gauss_chebyshev_integral: zero nodes");
  double sum = 0.0;
  const double n = static_cast<double>(nodes);
  for (std::size_t i = 1; i <= nodes; ++i) {
    sum += f(2.0 * std::cos((2.0 * static_cast<double>(i) - 1.0) * std::numbers::pi / (2.0 * n)));
  }
  return std::numbers::pi / n * sum;
}

double chebyshev_quadrature_moment(unsigned n, unsigned order, std::size_t nodes) {
  const OrthoPoly t = OrthoPoly::chebyshev1(n);
  return gauss_chebyshev_integral(
             [&](double x) { return std::pow(x, static_cast<int>(order)) * t(x / 2.0); }, nodes) /
         std::numbers::pi;
}

SeriesPair fourier_identity_series(unsigned n, std::size_t order) {
  if (n < 1) throw std::invalid_argument("eigenfunction index must be at least 1");
  PowerSeries lhs(order);
  for (std::size_t j = n; j <= order; j += 2) {
    const int k = static_cast<int>((j - n) / 2);
    Rational coeff = Rational(classical_profile_count(static_cast<int>(n), k)) /
                     Rational(factorial(static_cast<unsigned>(j)));
    if (k % 2 == 1) coeff = -coeff;
    lhs[j] = coeff;
  }
  PowerSeries monomial(order);
  if (n <= order) monomial[n] = Rational(1, static_cast<long>(n));
  PowerSeries rhs = series_mul(monomial, PowerSeries::exp_monomial(Rational(-1, 2), 2, order));
  return {std::move(lhs), std::move(rhs)};
}

std::pair<Rational, Rational> fourier_identity_coefficients(unsigned n, unsigned k) {
  const Rational lhs = Rational(classical_profile_count(static_cast<int>(n), static_cast<int>(k))) /
                       Rational(factorial(n + 2 * k));
  const Rational rhs = Rational(1, static_cast<long>(n)) * pow(Rational(1, 2), k) /
                       Rational(factorial(k));
  return {lhs, rhs};
}

PowerSeries catalan_w_series(std::size_t order) {
  const PowerSeries u = PowerSeries::variable(order);
  const PowerSeries one = PowerSeries::one(order);
  PowerSeries w(order);
  // Each pass fixes one more coefficient.
  for (std::size_t pass = 0; pass <= order; ++pass) {
    w = series_mul(u, one + series_mul(w, w));
  }
  return w;
}

SeriesPair lemma_Fn_series(unsigned n, std::size_t order) {
  if (n < 1) throw std::invalid_argument("lemma_Fn_series: n must be at least 1");
  PowerSeries lhs(order);
  for (std::size_t j = n; j <= order; j += 2) {
    const unsigned k = static_cast<unsigned>((j - n) / 2);
    lhs[j] = -Rational(binomial(static_cast<unsigned>(j), k)) / Rational(static_cast<long>(j));
  }
  PowerSeries rhs = series_pow(catalan_w_series(order), n) * Rational(-1, static_cast<long>(n));
  return {std::move(lhs), std::move(rhs)};
}

bool lemma_Fn_identity(unsigned n, std::size_t order) {
  const SeriesPair sides = lemma_Fn_series(n, order);
  return sides.lhs == sides.rhs;
}

RotheSides rothe_identity(unsigned n, unsigned m, unsigned t) {
  if (n < 1 || m < 1) throw std::invalid_argument("rothe_identity: n, m must be positive");
  auto term = [](unsigned a, unsigned k) {
    return Rational(static_cast<long>(a), static_cast<long>(a + 2 * k)) *
           Rational(binomial(a + 2 * k, k));
  };
  Rational lhs;
  for (unsigned k = 0; k <= t; ++k) lhs += term(n, k) * term(m, t - k);
  return {lhs, term(n + m, t)};
}

}  // namespace freeclt
