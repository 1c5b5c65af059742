#pragma once

#include <iosfwd>
#include <string>

#include "freeclt/rational.hpp"

namespace freeclt {

/// Element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
///
/// The pair (rat, irr) is canonical because sqrt(2) is irrational, so equality
/// is componentwise. Every eigenvalue 2^{1-k/2} of the linearized central
/// limit operator lives here, as does every moment produced by iterating it.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(Rational rat) : rat_(std::move(rat)) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(long value) : rat_(value) {}              // NOLINT(google-explicit-constructor)
  QSqrt2(Rational rat, Rational irr) : rat_(std::move(rat)), irr_(std::move(irr)) {}

  static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }
  /// 1/sqrt(2), the dilation factor of the central limit operator.
  static QSqrt2 inv_sqrt2() { return QSqrt2(Rational(0), Rational(1, 2)); }

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }

  bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }
  bool is_rational() const { return irr_.is_zero(); }
  /// Exact sign of a + b*sqrt(2).
  int sign() const;
  double to_double() const;
  /// a - b*sqrt(2).
  QSqrt2 conjugate() const { return QSqrt2(rat_, -irr_); }
  /// Field norm a^2 - 2 b^2.
  Rational norm() const { return rat_ * rat_ - Rational(2) * irr_ * irr_; }
  QSqrt2 inverse() const;

  std::string to_string() const;

  QSqrt2 operator-() const { return QSqrt2(-rat_, -irr_); }
  QSqrt2& operator+=(const QSqrt2& rhs);
  QSqrt2& operator-=(const QSqrt2& rhs);
  QSqrt2& operator*=(const QSqrt2& rhs);
  QSqrt2& operator/=(const QSqrt2& rhs) { return *this *= rhs.inverse(); }

  friend QSqrt2 operator+(QSqrt2 a, const QSqrt2& b) { return a += b; }
  friend QSqrt2 operator-(QSqrt2 a, const QSqrt2& b) { return a -= b; }
  friend QSqrt2 operator*(QSqrt2 a, const QSqrt2& b) { return a *= b; }
  friend QSqrt2 operator/(QSqrt2 a, const QSqrt2& b) { return a /= b; }

  friend bool operator==(const QSqrt2& a, const QSqrt2& b) {
    return a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }
  friend bool operator<(const QSqrt2& a, const QSqrt2& b) { return (a - b).sign() < 0; }
  friend bool operator>(const QSqrt2& a, const QSqrt2& b) { return b < a; }
  friend bool operator<=(const QSqrt2& a, const QSqrt2& b) { return !(b < a); }
  friend bool operator>=(const QSqrt2& a, const QSqrt2& b) { return !(a < b); }

 private:
  Rational rat_;
  Rational irr_;
};

std::ostream& operator<<(std::ostream& os, const QSqrt2& x);

QSqrt2 qsqrt2_pow(const QSqrt2& base, unsigned n);
QSqrt2 abs(const QSqrt2& x);

/// 2^{1 - k/2}: the factor by which one application of T scales the k-th
/// cumulant, and the k-th eigenvalue of the linearization at the normal law.
QSqrt2 clt_eigenvalue(unsigned k);

}  // namespace freeclt
