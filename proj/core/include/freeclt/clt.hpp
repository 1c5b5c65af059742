#pragma once

#include <cstddef>
#include <vector>

#include "freeclt/cumulants.hpp"

namespace freeclt {

/// Default cap on the size of the linearization matrix.
inline constexpr std::size_t kDefaultMatrixCap = 16;

/// Lower-triangular matrix A = (a_ij) of the derivative of the
/// cumulant->moment transform at the normal law: m^d = A f.
///
/// a_{n+2k,n} = binom(n+2k, k) in the free case and (n+2k)!/(n k! 2^k) in
/// the classical case; a_ij = 0 when j > i or i - j is odd.
class LinMatrix {
 public:
  /// Throws SizeLimitError when size > cap.
  static LinMatrix build(Flavor flavor, std::size_t size, std::size_t cap = kDefaultMatrixCap);

  Flavor flavor() const { return flavor_; }
  std::size_t size() const { return size_; }
  /// 1-based entry; zero above the diagonal.
  const QSqrt2& at(std::size_t i, std::size_t j) const;

  /// Column j as a moment sequence of length size().
  Sequence column(std::size_t j) const;
  /// A f for a cumulant-side vector f.
  Sequence multiply(const Sequence& f) const;
  /// Forward substitution: the f with A f = m.
  Sequence solve(const Sequence& m) const;

 private:
  LinMatrix(Flavor flavor, std::size_t size)
      : flavor_(flavor), size_(size), entries_(size * size) {}

  Flavor flavor_;
  std::size_t size_;
  std::vector<QSqrt2> entries_;
};

inline LinMatrix build_lin_matrix(Flavor flavor, std::size_t size,
                                  std::size_t cap = kDefaultMatrixCap) {
  return LinMatrix::build(flavor, size, cap);
}

/// One application of the central limit operator, computed as
/// R^{-1} o diag(2^{1-k/2}) o R on the moment sequence.
Sequence apply_T(const Sequence& moments);

struct CltStep {
  std::size_t index;
  Sequence moments;
  /// m_k(n) - m_k(chi)
  Sequence gaps;
  Sequence cumulants;
};

struct CltReport {
  Flavor flavor;
  std::vector<CltStep> steps;  // steps[n] is T^n applied to the input
  /// c_k(n) == 2^{n(1-k/2)} c_k(0) for every k and n, checked exactly.
  bool decay_exact = false;
};

/// Iterates T `steps` times. The input is not recentred: the convergence
/// statement needs m_1 = 0 and m_2 = 1 from the caller.
CltReport iterate_T(const Sequence& moments, std::size_t steps);

/// D T at the normal law applied to a moment-side direction:
/// A diag(2^{1-k/2}) Df, where Df is the Gateaux derivative of the
/// moment->cumulant transform at chi.
Sequence apply_DT_at_chi(const Sequence& direction_moments);

struct EigenColumnCheck {
  std::size_t column;
  QSqrt2 eigenvalue;
  bool exact;
};

/// For each column e_j of A, whether apply_DT_at_chi(e_j) == 2^{1-j/2} e_j.
std::vector<EigenColumnCheck> eigencheck(Flavor flavor, std::size_t size,
                                         std::size_t cap = kDefaultMatrixCap);

/// Whether every eigenvalue 2^{1-n/2} with 3 <= n <= max_order is < 1,
/// i.e. the normal law is strictly spectrally stable once the mass, mean
/// and variance directions are removed.
bool spectrally_stable(std::size_t max_order);

}  // namespace freeclt
