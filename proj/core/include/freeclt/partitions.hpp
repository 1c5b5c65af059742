#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "freeclt/flavor.hpp"
#include "freeclt/rational.hpp"

namespace freeclt {

/// Default cap on the ground-set size for exhaustive enumeration.
/// Bell(15) is about 1.4e9, which is past desk scale.
inline constexpr int kDefaultMaxGroundSize = 14;

/// A set partition of {1, ..., k}.
///
/// Blocks hold 1-based elements in increasing order and are sorted by their
/// minimum element, so two partitions are equal iff their blocks are equal.
class Partition {
 public:
  /// Validates disjointness and coverage, then canonicalizes.
  static Partition from_blocks(int ground_size, std::vector<std::vector<int>> blocks);
  /// From a restricted-growth string: labels[i] is the 0-based block of i+1.
  static Partition from_labels(const std::vector<int>& labels);

  int ground_size() const { return ground_size_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  /// 0-based block index for each element, in canonical block order.
  std::vector<int> labels() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Partition(int ground_size, std::vector<std::vector<int>> blocks)
      : ground_size_(ground_size), blocks_(std::move(blocks)) {}

  int ground_size_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// One distinguished block of size n plus k blocks of size two, on n + 2k points.
struct BlockProfile {
  int n = 1;
  int k = 0;

  int ground_size() const { return n + 2 * k; }
};

/// True iff there are no a < b < c < d with a, c in one block and b, d in a
/// different block.
bool is_noncrossing(const Partition& p);

/// Lazily enumerates the partitions of {1..k} in restricted-growth-string
/// order, optionally keeping only the noncrossing ones.
class PartitionStream {
 public:
  /// Throws SizeLimitError when k exceeds `max_ground_size`.
  PartitionStream(int k, bool noncrossing_only, int max_ground_size = kDefaultMaxGroundSize);

  std::optional<Partition> next();

 private:
  bool advance();

  int k_;
  bool noncrossing_only_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> labels_;
  std::vector<int> prefix_max_;
};

std::vector<Partition> enumerate_partitions(int k, bool noncrossing_only,
                                            int max_ground_size = kDefaultMaxGroundSize);

/// Number of partitions of {1..k} (noncrossing or all) by exhaustive
/// enumeration, without materializing them.
std::uint64_t count_partitions(int k, bool noncrossing_only,
                               int max_ground_size = kDefaultMaxGroundSize);

/// Brute-force matrix coefficient for one block profile.
///
/// Counts pairs (partition, distinguished block) where the distinguished
/// block has n elements and every other block is a pair; for n != 2 that is
/// just the number of partitions, for n == 2 each all-pairs partition counts
/// once per pair. Free flavor restricts to noncrossing partitions; classical
/// multiplies the count by (n-1)!.
BigInt count_profile(const BlockProfile& profile, Flavor flavor,
                     int max_ground_size = kDefaultMaxGroundSize);

/// Same count by filtering a plain enumeration, with no pruning. Slower;
/// used to cross-check count_profile.
BigInt count_profile_unpruned(const BlockProfile& profile, Flavor flavor,
                              int max_ground_size = kDefaultMaxGroundSize);

/// Closed form binom(n + 2k, k) for the noncrossing profile count.
BigInt kreweras_count(int n, int k);

/// Closed form (n + 2k)! / (n k! 2^k) for the classical profile count.
BigInt classical_profile_count(int n, int k);

/// Block-size multiset (sorted ascending) -> number of partitions of {1..k}
/// having exactly those block sizes.
using BlockSizeTally = std::map<std::vector<int>, std::uint64_t>;

BlockSizeTally tally_block_sizes(int k, bool noncrossing_only,
                                 int max_ground_size = kDefaultMaxGroundSize);

}  // namespace freeclt
