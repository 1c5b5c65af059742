#include "freeclt/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace freeclt {

PowerSeries::PowerSeries(std::vector<Rational> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

PowerSeries PowerSeries::one(std::size_t order) {
  PowerSeries s(order);
  s.coeffs_[0] = Rational(1);
  return s;
}

PowerSeries PowerSeries::variable(std::size_t order) {
  PowerSeries s(order);
  if (order >= 1) s.coeffs_[1] = Rational(1);
  return s;
}

PowerSeries PowerSeries::exp_monomial(const Rational& scale, unsigned power, std::size_t order) {
  if (power == 0) {
    throw std::invalid_argument("exp_monomial: power must be positive");
  }
  PowerSeries s(order);
  Rational term(1);
  for (std::size_t j = 0; j * power <= order; ++j) {
    if (j > 0) term = term * scale / Rational(static_cast<long>(j));
    s.coeffs_[j * power] = term;
  }
  return s;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw std::invalid_argument("PowerSeries::truncated: cannot raise the order");
  }
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

PowerSeries PowerSeries::shifted(std::size_t k) const {
  PowerSeries s(order());
  for (std::size_t j = 0; j + k <= order(); ++j) s.coeffs_[j + k] = coeffs_[j];
  return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  PowerSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

PowerSeries series_pow(const PowerSeries& base, unsigned n) {
  PowerSeries result = PowerSeries::one(base.order());
  PowerSeries square = base;
  while (n > 0) {
    if (n & 1U) result = series_mul(result, square);
    n >>= 1U;
    if (n > 0) square = series_mul(square, square);
  }
  return result;
}

}  // namespace freeclt
