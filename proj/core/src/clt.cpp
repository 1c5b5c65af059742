#include "freeclt/clt.hpp"

#include <stdexcept>
#include <string>

#include "freeclt/errors.hpp"

namespace freeclt {

LinMatrix LinMatrix::build(Flavor flavor, std::size_t size, std::size_t cap) {
  if (size < 1) {
    throw std::invalid_argument("LinMatrix: size must be at least 1");
  }
  if (size > cap) {
    throw SizeLimitError("matrix size " + std::to_string(size) + " exceeds cap " +
                             std::to_string(cap),
                         static_cast<int>(size), static_cast<int>(cap));
  }
  LinMatrix a(flavor, size);
  for (std::size_t n = 1; n <= size; ++n) {
    for (std::size_t i = n; i <= size; i += 2) {
      const int k = static_cast<int>((i - n) / 2);
      const BigInt value = flavor == Flavor::free
                               ? kreweras_count(static_cast<int>(n), k)
                               : classical_profile_count(static_cast<int>(n), k);
      a.entries_[(i - 1) * size + (n - 1)] = QSqrt2(Rational(value));
    }
  }
  return a;
}

const QSqrt2& LinMatrix::at(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > size_ || j > size_) {
    throw std::out_of_range("LinMatrix::at: index out of range");
  }
  return entries_[(i - 1) * size_ + (j - 1)];
}

Sequence LinMatrix::column(std::size_t j) const {
  std::vector<QSqrt2> out;
  out.reserve(size_);
  for (std::size_t i = 1; i <= size_; ++i) out.push_back(at(i, j));
  return Sequence(flavor_, SequenceKind::moments, std::move(out));
}

Sequence LinMatrix::multiply(const Sequence& f) const {
  if (f.length() != size_) {
    throw std::invalid_argument("LinMatrix::multiply: length mismatch");
  }
  std::vector<QSqrt2> out;
  for (std::size_t i = 1; i <= size_; ++i) {
    QSqrt2 acc;
    for (std::size_t j = 1; j <= i; ++j) {
      if (!at(i, j).is_zero() && !f.at(j).is_zero()) acc += at(i, j) * f.at(j);
    }
    out.push_back(std::move(acc));
  }
  return Sequence(flavor_, SequenceKind::moments, std::move(out));
}

Sequence LinMatrix::solve(const Sequence& m) const {
  if (m.length() != size_) {
    throw std::invalid_argument("LinMatrix::solve: length mismatch");
  }
  std::vector<QSqrt2> f;
  for (std::size_t i = 1; i <= size_; ++i) {
    QSqrt2 acc = m.at(i);
    for (std::size_t j = 1; j < i; ++j) {
      if (!at(i, j).is_zero() && !f[j - 1].is_zero()) acc -= at(i, j) * f[j - 1];
    }
    f.push_back(acc / at(i, i));
  }
  return Sequence(flavor_, SequenceKind::cumulants, std::move(f));
}

namespace {

Sequence scale_cumulants(const Sequence& c, std::size_t power) {
  std::vector<QSqrt2> out;
  out.reserve(c.length());
  for (std::size_t k = 1; k <= c.length(); ++k) {
    out.push_back(qsqrt2_pow(clt_eigenvalue(static_cast<unsigned>(k)),
                             static_cast<unsigned>(power)) *
                  c.at(k));
  }
  return c.with_entries(std::move(out));
}

}  // namespace

Sequence apply_T(const Sequence& moments) {
  return cumulants_to_moments(scale_cumulants(moments_to_cumulants(moments), 1));
}

CltReport iterate_T(const Sequence& moments, std::size_t steps) {
  if (moments.kind() != SequenceKind::moments) {
    throw std::invalid_argument("iterate_T: expected a moment sequence");
  }
  const Sequence chi = chi_moments(moments.flavor(), moments.length());
  const QSqrt2 minus_one(-1);

  CltReport report{moments.flavor(), {}, true};
  Sequence current = moments;
  Sequence initial_cumulants = moments_to_cumulants(moments);
  for (std::size_t n = 0; n <= steps; ++n) {
    if (n > 0) current = apply_T(current);
    Sequence cumulants = moments_to_cumulants(current);
    if (!(cumulants == scale_cumulants(initial_cumulants, n))) {
      report.decay_exact = false;
    }
    Sequence gaps = linear_combination(QSqrt2(1), current, minus_one, chi);
    report.steps.push_back(CltStep{n, current, std::move(gaps), std::move(cumulants)});
  }
  return report;
}

Sequence apply_DT_at_chi(const Sequence& direction_moments) {
  const Flavor flavor = direction_moments.flavor();
  const std::size_t L = direction_moments.length();
  const Sequence f = gateaux_derivative(chi_moments(flavor, L), direction_moments);
  const Sequence scaled = scale_cumulants(f, 1);
  return LinMatrix::build(flavor, L, L).multiply(scaled);
}

std::vector<EigenColumnCheck> eigencheck(Flavor flavor, std::size_t size, std::size_t cap) {
  const LinMatrix a = LinMatrix::build(flavor, size, cap);
  std::vector<EigenColumnCheck> out;
  for (std::size_t j = 1; j <= size; ++j) {
    const Sequence e = a.column(j);
    const QSqrt2 lambda = clt_eigenvalue(static_cast<unsigned>(j));
    const Sequence image = apply_DT_at_chi(e);
    const Sequence expected = linear_combination(lambda, e, QSqrt2(), e);
    out.push_back(EigenColumnCheck{j, lambda, image == expected});
  }
  return out;
}

bool spectrally_stable(std::size_t max_order) {
  for (std::size_t n = 3; n <= max_order; ++n) {
    if (!(clt_eigenvalue(static_cast<unsigned>(n)) < QSqrt2(1))) return false;
  }
  return true;
}

}  // namespace freeclt
