#include "freeclt/qsqrt2.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace freeclt {

int QSqrt2::sign() const {
  const int a = rat_.sign();
  const int b = irr_.sign();
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  // Opposite signs: compare a^2 with 2 b^2.
  const Rational diff = rat_ * rat_ - Rational(2) * irr_ * irr_;
  return diff.sign() * a;
}

double QSqrt2::to_double() const {
  return rat_.to_double() + irr_.to_double() * std::sqrt(2.0);
}

QSqrt2 QSqrt2::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) {
    throw std::domain_error("QSqrt2: inverse of zero");
  }
  return QSqrt2(rat_ / n, -irr_ / n);
}

std::string QSqrt2::to_string() const {
  if (irr_.is_zero()) return rat_.to_string();
  if (rat_.is_zero()) return irr_.to_string() + "*sqrt2";
  return rat_.to_string() + (irr_.sign() < 0 ? " - " : " + ") +
         (irr_.sign() < 0 ? (-irr_).to_string() : irr_.to_string()) + "*sqrt2";
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& rhs) {
  rat_ += rhs.rat_;
  irr_ += rhs.irr_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& rhs) {
  rat_ -= rhs.rat_;
  irr_ -= rhs.irr_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& rhs) {
  if (irr_.is_zero() && rhs.irr_.is_zero()) {
    rat_ *= rhs.rat_;
    return *this;
  }
  Rational rat = rat_ * rhs.rat_ + Rational(2) * irr_ * rhs.irr_;
  Rational irr = rat_ * rhs.irr_ + irr_ * rhs.rat_;
  rat_ = std::move(rat);
  irr_ = std::move(irr);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << x.to_string(); }

QSqrt2 qsqrt2_pow(const QSqrt2& base, unsigned n) {
  QSqrt2 result(1);
  QSqrt2 square = base;
  while (n > 0) {
    if (n & 1U) result *= square;
    n >>= 1U;
    if (n > 0) square *= square;
  }
  return result;
}

QSqrt2 abs(const QSqrt2& x) { return x.sign() < 0 ? -x : x; }

QSqrt2 clt_eigenvalue(unsigned k) {
  return QSqrt2(2) * qsqrt2_pow(QSqrt2::inv_sqrt2(), k);
}

}  // namespace freeclt
