#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "freeclt/rational.hpp"

namespace freeclt {

/// Truncated formal power series sum_{j=0}^{order} c_j t^j over Q.
///
/// Binary operations truncate to the smaller order of the two operands.
/// Laurent expansions at infinity are handled by callers through the
/// substitution u = 1/z.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}
  PowerSeries(std::vector<Rational> coeffs, std::size_t order);

  static PowerSeries one(std::size_t order);
  /// The series t.
  static PowerSeries variable(std::size_t order);
  /// exp(scale * t^power) truncated at `order`.
  static PowerSeries exp_monomial(const Rational& scale, unsigned power, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t j) const { return coeffs_.at(j); }
  Rational& operator[](std::size_t j) { return coeffs_.at(j); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  PowerSeries truncated(std::size_t order) const;
  /// Multiply by t^k, dropping terms beyond the order.
  PowerSeries shifted(std::size_t k) const;

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(const Rational& scalar);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
  friend PowerSeries operator*(const Rational& s, PowerSeries a) { return a *= s; }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated to min(a.order(), b.order()).
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return series_mul(a, b); }

PowerSeries series_pow(const PowerSeries& base, unsigned n);

}  // namespace freeclt
