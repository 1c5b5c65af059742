#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "freeclt/flavor.hpp"
#include "freeclt/qsqrt2.hpp"

namespace freeclt {

enum class SequenceKind { moments, cumulants };

std::string to_string(SequenceKind kind);
SequenceKind parse_sequence_kind(std::string_view text);

/// Finite prefix (x_1, ..., x_L) of a moment or cumulant sequence.
///
/// Orders are 1-based; m_0 = 1 is implicit and never stored. Flavor and kind
/// are fixed at construction.
class Sequence {
 public:
  /// Throws std::invalid_argument when `entries` is empty.
  Sequence(Flavor flavor, SequenceKind kind, std::vector<QSqrt2> entries);

  static Sequence zeros(Flavor flavor, SequenceKind kind, std::size_t length);

  Flavor flavor() const { return flavor_; }
  SequenceKind kind() const { return kind_; }
  std::size_t length() const { return entries_.size(); }
  std::span<const QSqrt2> entries() const { return entries_; }

  /// Entry of the given 1-based order.
  const QSqrt2& at(std::size_t order) const;

  /// m_2 - m_1^2 >= 0. Only meaningful for moment sequences of length >= 2.
  bool variance_nonnegative() const;

  Sequence with_entries(std::vector<QSqrt2> entries) const {
    return Sequence(flavor_, kind_, std::move(entries));
  }

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  Flavor flavor_;
  SequenceKind kind_;
  std::vector<QSqrt2> entries_;
};

/// Entrywise a*x + b*y. Flavor, kind and length must agree.
Sequence linear_combination(const QSqrt2& a, const Sequence& x, const QSqrt2& b, const Sequence& y);

}  // namespace freeclt
