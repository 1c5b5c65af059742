#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "freeclt/power_series.hpp"
#include "freeclt/sequence.hpp"

namespace freeclt {

/// Polynomial families of the eigenfunctions of the linearized operator.
///
/// | family      | recurrence                              | relation to standard       |
/// |-------------|-----------------------------------------|----------------------------|
/// | hermite     | H_0 = 1, H_{n+1} = H_n' - x H_n          | H_n = (-1)^n He_n          |
/// | chebyshev1  | T_0 = 1, T_1 = x, T_{n+1} = 2x T_n - T_{n-1} | T_n(cos t) = cos(n t) |
///
/// The Hermite convention is the one for which
/// d^n/dx^n exp(-x^2/2) = exp(-x^2/2) H_n(x).
class OrthoPoly {
 public:
  enum class Family { hermite, chebyshev1 };

  static OrthoPoly hermite(unsigned degree);
  static OrthoPoly chebyshev1(unsigned degree);

  Family family() const { return family_; }
  unsigned degree() const { return degree_; }
  /// coefficients()[i] multiplies x^i.
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  double operator()(double x) const;
  Rational operator()(const Rational& x) const;

 private:
  OrthoPoly(Family family, unsigned degree, std::vector<Rational> coeffs)
      : family_(family), degree_(degree), coeffs_(std::move(coeffs)) {}

  Family family_;
  unsigned degree_;
  std::vector<Rational> coeffs_;
};

/// Moments of the n-th classical eigenfunction d^n/dx^n exp(-x^2/2),
/// normalized so that m_{n+2k} = (n+2k)! / (n k! 2^k). Orders 1..max_order.
Sequence hermite_density_moments(unsigned n, std::size_t max_order);

/// Moments of the n-th free eigenfunction T_n(t/2) / sqrt(4 - t^2) on
/// [-2, 2], normalized so that m_{n+2k} = binom(n+2k, k). Orders 1..max_order.
Sequence chebyshev_density_moments(unsigned n, std::size_t max_order);

/// Density whose moments are hermite_density_moments(n):
/// (-1)^n / (n sqrt(2 pi)) exp(-x^2/2) H_n(x).
double hermite_eigen_density(unsigned n, double x);

/// Density whose moments are chebyshev_density_moments(n):
/// T_n(x/2) / (pi sqrt(4 - x^2)) on (-2, 2), zero outside.
/// Throws DomainError at x = +-2.
double chebyshev_eigen_density(unsigned n, double x);

/// Gauss-Chebyshev rule on [-2, 2]:
///   int_{-2}^{2} f(t) / sqrt(4 - t^2) dt ~ (pi/N) sum_i f(2 cos((2i-1) pi / (2N))).
/// Exact for polynomials of degree < 2N.
double gauss_chebyshev_integral(const std::function<double(double)>& f, std::size_t nodes = 256);

/// (1/pi) int t^order T_n(t/2) / sqrt(4 - t^2) dt by Gauss-Chebyshev.
double chebyshev_quadrature_moment(unsigned n, unsigned order, std::size_t nodes = 256);

/// Both sides of the Fourier-transform identity for the n-th classical
/// eigenfunction, as power series in t after dividing out i^n:
///   lhs = sum_k a_{n+2k,n} / (n+2k)! (-1)^k t^{n+2k}
///   rhs = (1/n) t^n exp(-t^2/2)
/// truncated at t^order.
struct SeriesPair {
  PowerSeries lhs;
  PowerSeries rhs;
};
SeriesPair fourier_identity_series(unsigned n, std::size_t order);

/// Coefficientwise form: a_{n+2k,n} / (n+2k)! and (1/n) (1/2)^k / k!.
std::pair<Rational, Rational> fourier_identity_coefficients(unsigned n, unsigned k);

/// Laurent expansion at infinity, in u = 1/z, of the primitive of the n-th
/// free eigen-Cauchy transform, two ways:
///   lhs = -sum_k binom(n+2k, k) / (n+2k) u^{n+2k}
///   rhs = -(1/n) w(u)^n,  w = u (1 + w^2)   [w = (z - sqrt(z^2 - 4)) / 2]
/// truncated at u^order.
SeriesPair lemma_Fn_series(unsigned n, std::size_t order);

/// lemma_Fn_series(n, order) sides agree coefficientwise.
bool lemma_Fn_identity(unsigned n, std::size_t order);

/// w(u) = (z - sqrt(z^2 - 4)) / 2 as a series in u = 1/z, from the
/// fixed point w = u (1 + w^2). Its coefficients are the Catalan numbers.
PowerSeries catalan_w_series(std::size_t order);

struct RotheSides {
  Rational lhs;
  Rational rhs;
};

/// sum_{k+l=t} n/(n+2k) binom(n+2k,k) m/(m+2l) binom(m+2l,l)
/// against (n+m)/(n+m+2t) binom(n+m+2t, t).
RotheSides rothe_identity(unsigned n, unsigned m, unsigned t);

}  // namespace freeclt
