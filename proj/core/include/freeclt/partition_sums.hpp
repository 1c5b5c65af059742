#pragma once

// Moment-cumulant transforms evaluated literally as sums over (noncrossing)
// set partitions. Slow and obviously correct; the recursive transforms in
// cumulants.hpp are checked against these.
//
// Templated on the scalar so that tests can push dual numbers through the
// same sums. A Scalar must be constructible from Rational and support
// +, -, *.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "freeclt/flavor.hpp"
#include "freeclt/partitions.hpp"
#include "freeclt/rational.hpp"

namespace freeclt {

/// Per-order block-size tallies, entry k-1 for ground size k.
struct PartitionSumTables {
  Flavor flavor;
  std::vector<BlockSizeTally> tallies;

  static PartitionSumTables build(Flavor flavor, std::size_t max_order,
                                  int max_ground_size = kDefaultMaxGroundSize) {
    PartitionSumTables t{flavor, {}};
    for (std::size_t k = 1; k <= max_order; ++k) {
      t.tallies.push_back(
          tally_block_sizes(static_cast<int>(k), flavor == Flavor::free, max_ground_size));
    }
    return t;
  }

  std::size_t max_order() const { return tallies.size(); }
};

/// Block weight: 1 in the free case, (s-1)! in the classical case.
inline Rational block_weight(Flavor flavor, int size) {
  return flavor == Flavor::free ? Rational(1)
                                : Rational(factorial(static_cast<unsigned>(size - 1)));
}

namespace detail {

// sum over partitions of {1..k} of prod_B w(|B|) c_{|B|}, optionally leaving
// out the one-block partition.
template <class Scalar>
Scalar partition_sum(std::span<const Scalar> c, const PartitionSumTables& tables, std::size_t k,
                     bool skip_single_block) {
  Scalar total(Rational(0));
  for (const auto& [sizes, count] : tables.tallies.at(k - 1)) {
    if (skip_single_block && sizes.size() == 1) continue;
    Rational weight(BigInt(static_cast<unsigned long>(count)));
    for (int s : sizes) weight *= block_weight(tables.flavor, s);
    Scalar term(weight);
    for (int s : sizes) term = term * c[static_cast<std::size_t>(s - 1)];
    total = total + term;
  }
  return total;
}

inline void check_tables(const PartitionSumTables& tables, std::size_t length) {
  if (length == 0) throw std::invalid_argument("partition sum: empty sequence");
  if (length > tables.max_order()) {
    throw std::invalid_argument("partition sum: tables built for a shorter order");
  }
}

}  // namespace detail

/// m_k = sum_{pi} prod_{B in pi} w(|B|) c_{|B|} for k = 1..c.size().
template <class Scalar>
std::vector<Scalar> moments_by_partition_sum(std::span<const Scalar> c,
                                             const PartitionSumTables& tables) {
  detail::check_tables(tables, c.size());
  std::vector<Scalar> m;
  m.reserve(c.size());
  for (std::size_t k = 1; k <= c.size(); ++k) {
    m.push_back(detail::partition_sum(c, tables, k, false));
  }
  return m;
}

/// Inverts the partition sum order by order: the one-block partition is the
/// only term involving c_k.
template <class Scalar>
std::vector<Scalar> cumulants_by_partition_sum(std::span<const Scalar> m,
                                               const PartitionSumTables& tables) {
  detail::check_tables(tables, m.size());
  std::vector<Scalar> c;
  c.reserve(m.size());
  for (std::size_t k = 1; k <= m.size(); ++k) {
    c.push_back(Scalar(Rational(0)));
    const Scalar rest = detail::partition_sum(std::span<const Scalar>(c), tables, k, true);
    const Rational inv_weight =
        Rational(1) / block_weight(tables.flavor, static_cast<int>(k));
    c.back() = (m[k - 1] - rest) * Scalar(inv_weight);
  }
  return c;
}

}  // namespace freeclt
