#include "freeclt/partitions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "freeclt/errors.hpp"

namespace freeclt {

std::string to_string(Flavor flavor) {
  return flavor == Flavor::free ? "free" : "classical";
}

Flavor parse_flavor(std::string_view text) {
  if (text == "free") return Flavor::free;
  if (text == "classical") return Flavor::classical;
  throw std::invalid_argument("unknown flavor '" + std::string(text) + "'");
}

Partition Partition::from_blocks(int ground_size, std::vector<std::vector<int>> blocks) {
  if (ground_size < 1) {
    throw std::invalid_argument("Partition: ground size must be positive");
  }
  std::vector<bool> seen(static_cast<std::size_t>(ground_size) + 1, false);
  int covered = 0;
  for (auto& block : blocks) {
    if (block.empty()) {
      throw std::invalid_argument("Partition: empty block");
    }
    std::sort(block.begin(), block.end());
    for (int e : block) {
      if (e < 1 || e > ground_size || seen[static_cast<std::size_t>(e)]) {
        throw std::invalid_argument("Partition: element " + std::to_string(e) +
                                    " out of range or repeated");
      }
      seen[static_cast<std::size_t>(e)] = true;
      ++covered;
    }
  }
  if (covered != ground_size) {
    throw std::invalid_argument("Partition: blocks do not cover the ground set");
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return Partition(ground_size, std::move(blocks));
}

Partition Partition::from_labels(const std::vector<int>& labels) {
  if (labels.empty()) {
    throw std::invalid_argument("Partition: empty label string");
  }
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int label = labels[i];
    if (label < 0 || label > static_cast<int>(blocks.size())) {
      throw std::invalid_argument("Partition: labels are not a restricted-growth string");
    }
    if (label == static_cast<int>(blocks.size())) blocks.emplace_back();
    blocks[static_cast<std::size_t>(label)].push_back(static_cast<int>(i) + 1);
  }
  return Partition(static_cast<int>(labels.size()), std::move(blocks));
}

std::vector<int> Partition::labels() const {
  std::vector<int> out(static_cast<std::size_t>(ground_size_));
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (int e : blocks_[b]) out[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
  }
  return out;
}

bool is_noncrossing(const Partition& p) {
  const std::vector<int> lab = p.labels();
  const std::size_t k = lab.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (lab[b] == lab[a]) continue;
      for (std::size_t c = b + 1; c < k; ++c) {
        if (lab[c] != lab[a]) continue;
        for (std::size_t d = c + 1; d < k; ++d) {
          if (lab[d] == lab[b]) return false;
        }
      }
    }
  }
  return true;
}

namespace {

void check_cap(int k, int cap) {
  if (k < 1) {
    throw std::invalid_argument("ground size must be at least 1");
  }
  if (k > cap) {
    throw SizeLimitError("ground size " + std::to_string(k) + " exceeds enumeration cap " +
                             std::to_string(cap),
                         k, cap);
  }
}

// The stream filters with the definitional test so that it stays independent
// of the pruned depth-first enumerator below.
bool labels_noncrossing(const std::vector<int>& labels) {
  return is_noncrossing(Partition::from_labels(labels));
}

// Depth-first restricted-growth enumeration. Tracks per-block sizes and the
// first/last element so that noncrossing pruning is O(blocks) per step:
// appending element i to block b creates a crossing iff some other block c
// has first(c) < last(b) < last(c).
class PartitionDfs {
 public:
  PartitionDfs(int k, bool noncrossing_only) : k_(k), noncrossing_only_(noncrossing_only) {
    labels_.reserve(static_cast<std::size_t>(k));
  }

  template <class Prune, class Leaf>
  void run(Prune&& prune, Leaf&& leaf) {
    recurse(0, prune, leaf);
  }

  const std::vector<int>& sizes() const { return sizes_; }
  const std::vector<int>& labels() const { return labels_; }

 private:
  bool crosses(std::size_t b) const {
    const int lb = last_[b];
    for (std::size_t c = 0; c < sizes_.size(); ++c) {
      if (c != b && first_[c] < lb && lb < last_[c]) return true;
    }
    return false;
  }

  template <class Prune, class Leaf>
  void recurse(int i, Prune& prune, Leaf& leaf) {
    if (i == k_) {
      leaf(*this);
      return;
    }
    const std::size_t blocks = sizes_.size();
    for (std::size_t b = 0; b <= blocks; ++b) {
      int saved_last = -1;
      if (b == blocks) {
        sizes_.push_back(1);
        first_.push_back(i);
        last_.push_back(i);
      } else {
        if (noncrossing_only_ && crosses(b)) continue;
        ++sizes_[b];
        saved_last = last_[b];
        last_[b] = i;
      }
      labels_.push_back(static_cast<int>(b));
      if (!prune(*this, i + 1, b)) recurse(i + 1, prune, leaf);
      labels_.pop_back();
      if (b == blocks) {
        sizes_.pop_back();
        first_.pop_back();
        last_.pop_back();
      } else {
        --sizes_[b];
        last_[b] = saved_last;
      }
    }
  }

  int k_;
  bool noncrossing_only_;
  std::vector<int> labels_;
  std::vector<int> sizes_;
  std::vector<int> first_;
  std::vector<int> last_;
};

constexpr auto kNoPrune = [](const PartitionDfs&, int, std::size_t) { return false; };

// Multiplicity of a partition for the profile: the number of blocks of size
// n that can serve as the distinguished block with all others pairs.
std::uint64_t profile_incidences(const std::vector<int>& sizes, const BlockProfile& profile) {
  if (static_cast<int>(sizes.size()) != profile.k + 1) return 0;
  int of_size_n = 0;
  int pairs = 0;
  for (int s : sizes) {
    if (s == profile.n) ++of_size_n;
    if (s == 2) ++pairs;
  }
  if (profile.n == 2) {
    return pairs == profile.k + 1 ? static_cast<std::uint64_t>(pairs) : 0;
  }
  return (of_size_n == 1 && pairs == profile.k) ? 1 : 0;
}

void check_profile(const BlockProfile& profile) {
  if (profile.n < 1 || profile.k < 0) {
    throw std::invalid_argument("BlockProfile requires n >= 1 and k >= 0");
  }
}

BigInt apply_flavor_weight(std::uint64_t count, int n, Flavor flavor) {
  BigInt result(static_cast<unsigned long>(count));
  if (flavor == Flavor::classical) result *= factorial(static_cast<unsigned>(n - 1));
  return result;
}

}  // namespace

PartitionStream::PartitionStream(int k, bool noncrossing_only, int max_ground_size)
    : k_(k), noncrossing_only_(noncrossing_only) {
  check_cap(k, max_ground_size);
  labels_.assign(static_cast<std::size_t>(k), 0);
  prefix_max_.assign(static_cast<std::size_t>(k), 0);
}

bool PartitionStream::advance() {
  // prefix_max_[i] = max(labels_[0..i]); element i may take labels up to
  // prefix_max_[i-1] + 1.
  for (int i = k_ - 1; i >= 1; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (labels_[ui] <= prefix_max_[ui - 1]) {
      ++labels_[ui];
      prefix_max_[ui] = std::max(prefix_max_[ui - 1], labels_[ui]);
      for (std::size_t j = ui + 1; j < labels_.size(); ++j) {
        labels_[j] = 0;
        prefix_max_[j] = prefix_max_[ui];
      }
      return true;
    }
  }
  return false;
}

std::optional<Partition> PartitionStream::next() {
  while (!done_) {
    if (!started_) {
      started_ = true;
    } else if (!advance()) {
      done_ = true;
      break;
    }
    if (!noncrossing_only_ || labels_noncrossing(labels_)) {
      return Partition::from_labels(labels_);
    }
  }
  return std::nullopt;
}

std::vector<Partition> enumerate_partitions(int k, bool noncrossing_only, int max_ground_size) {
  PartitionStream stream(k, noncrossing_only, max_ground_size);
  std::vector<Partition> out;
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

std::uint64_t count_partitions(int k, bool noncrossing_only, int max_ground_size) {
  check_cap(k, max_ground_size);
  std::uint64_t count = 0;
  PartitionDfs dfs(k, noncrossing_only);
  dfs.run(kNoPrune, [&](const PartitionDfs&) { ++count; });
  return count;
}

BigInt count_profile(const BlockProfile& profile, Flavor flavor, int max_ground_size) {
  check_profile(profile);
  const int ground = profile.ground_size();
  check_cap(ground, max_ground_size);
  const int n = profile.n;
  const int max_block = std::max(n, 2);

  auto prune = [&](const PartitionDfs& s, int placed, std::size_t touched) {
    const auto& sizes = s.sizes();
    if (static_cast<int>(sizes.size()) > profile.k + 1) return true;
    if (sizes[touched] > max_block) return true;
    int singles = 0;
    int big = 0;
    int big_size = 0;
    for (int sz : sizes) {
      if (sz == 1) ++singles;
      if (sz > 2) {
        ++big;
        big_size = sz;
      }
    }
    if (big > 1) return true;
    int need = 0;
    if (n == 1) {
      need = std::max(0, singles - 1);
    } else if (n == 2) {
      need = singles;
    } else {
      need = singles + (big == 1 ? n - big_size : n - 2);
    }
    return need > ground - placed;
  };

  std::uint64_t count = 0;
  PartitionDfs dfs(ground, flavor == Flavor::free);
  dfs.run(prune, [&](const PartitionDfs& s) { count += profile_incidences(s.sizes(), profile); });
  return apply_flavor_weight(count, n, flavor);
}

BigInt count_profile_unpruned(const BlockProfile& profile, Flavor flavor, int max_ground_size) {
  check_profile(profile);
  PartitionStream stream(profile.ground_size(), flavor == Flavor::free, max_ground_size);
  std::uint64_t count = 0;
  while (auto p = stream.next()) {
    std::vector<int> sizes;
    for (const auto& b : p->blocks()) sizes.push_back(static_cast<int>(b.size()));
    count += profile_incidences(sizes, profile);
  }
  return apply_flavor_weight(count, profile.n, flavor);
}

BigInt kreweras_count(int n, int k) {
  if (n < 1 || k < 0) {
    throw std::invalid_argument("kreweras_count requires n >= 1 and k >= 0");
  }
  return binomial(static_cast<unsigned>(n + 2 * k), static_cast<unsigned>(k));
}

BigInt classical_profile_count(int n, int k) {
  if (n < 1 || k < 0) {
    throw std::invalid_argument("classical_profile_count requires n >= 1 and k >= 0");
  }
  BigInt denom = BigInt(n) * factorial(static_cast<unsigned>(k));
  denom <<= static_cast<unsigned>(k);
  return factorial(static_cast<unsigned>(n + 2 * k)) / denom;
}

BlockSizeTally tally_block_sizes(int k, bool noncrossing_only, int max_ground_size) {
  check_cap(k, max_ground_size);
  BlockSizeTally tally;
  std::vector<int> key;
  PartitionDfs dfs(k, noncrossing_only);
  dfs.run(kNoPrune, [&](const PartitionDfs& s) {
    key = s.sizes();
    std::sort(key.begin(), key.end());
    ++tally[key];
  });
  return tally;
}

}  // namespace freeclt
