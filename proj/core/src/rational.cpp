#include "freeclt/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace freeclt {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) {
    throw std::invalid_argument("Rational::parse: empty string");
  }
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) {
      throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
    }
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) {
      throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
    }
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
      }
    }
    return BigInt(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos) {
    return Rational(parse_int(s));
  }
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

BigInt factorial(unsigned n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational square = base;
  while (exponent > 0) {
    if (exponent & 1U) {
      result *= square;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      square *= square;
    }
  }
  return result;
}

}  // namespace freeclt
