#pragma once

#include "freeclt/partition_sums.hpp"
#include "freeclt/sequence.hpp"

namespace freeclt {

/// Moments -> cumulants, exact. Free flavor inverts
///   m_k = sum over noncrossing pi of prod c_{|B|},
/// classical inverts
///   m_k = sum over all pi of prod (|B|-1)! c_{|B|}.
/// Both are solved order by order through the recursion obtained by
/// conditioning on the block that contains 1.
Sequence moments_to_cumulants(const Sequence& moments);

/// Cumulants -> moments, exact; the same recursion run forward.
Sequence cumulants_to_moments(const Sequence& cumulants);

/// Partition-sum versions of the two transforms. Bounded by the enumeration
/// cap; a caller transforming many sequences should build `tables` once.
Sequence cumulants_to_moments_by_partitions(const Sequence& cumulants,
                                            const PartitionSumTables& tables);
Sequence moments_to_cumulants_by_partitions(const Sequence& moments,
                                            const PartitionSumTables& tables);
Sequence cumulants_to_moments_by_partitions(const Sequence& cumulants,
                                            int max_ground_size = kDefaultMaxGroundSize);
Sequence moments_to_cumulants_by_partitions(const Sequence& moments,
                                            int max_ground_size = kDefaultMaxGroundSize);

/// Derivative of the moment->cumulant transform at `base_moments` in the
/// direction `direction_moments`.
///
/// Returns the cumulant-side tangent f solving, order by order,
///   m^d_k = sum_pi sum_{B_i in pi} w(|B_i|) f_{|B_i|} prod_{j != i} w(|B_j|) c^o_{|B_j|}
/// where c^o are the cumulants of the base and w is the flavor's block weight.
Sequence gateaux_derivative(const Sequence& base_moments, const Sequence& direction_moments);

/// A base point, a direction, and the derivative of the transform there.
struct DirectionalDerivative {
  Sequence base;
  Sequence direction;
  Sequence result;

  static DirectionalDerivative compute(const Sequence& base, const Sequence& direction) {
    return {base, direction, gateaux_derivative(base, direction)};
  }
};

/// Moments of the normal law of the flavor: Catalan numbers (semicircle) or
/// double factorials (Gaussian) at even orders, zero at odd orders.
Sequence chi_moments(Flavor flavor, std::size_t length);

/// Moments of the symmetric Bernoulli law on {-1, +1}: 0 at odd orders, 1 at even.
Sequence bernoulli_moments(Flavor flavor, std::size_t length);

/// Classical additive convolution of two moment sequences:
/// sum_j binom(k, j) m^a_j m^b_{k-j}.
Sequence classical_moment_convolution(const Sequence& a, const Sequence& b);

}  // namespace freeclt
