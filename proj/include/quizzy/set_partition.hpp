#pragma once

#include <compare>
#include <functional>
#include <vector>

namespace quizzy {

// A partition of the linearly ordered points {1..m} into disjoint nonempty
// blocks. Canonical form: elements sorted within each block, blocks sorted by
// their minimum; two structurally equal partitions compare equal.
//
// Two-row diagrams Hom(k,l) are always flattened to one row of k+l points by
// rotating the upper row down on the left: upper point i sits at position
// k+1-i, lower point j at position k+j. This is the flattening that preserves
// planarity, so crossing counts (and the signature) agree between the two-row
// picture and the one-row picture. pairing_from_permutation below uses it.
class SetPartition {
 public:
  // Partition of {1..m} with the given blocks; validates and canonicalizes.
  SetPartition(int m, std::vector<std::vector<int>> blocks);

  // The empty partition of zero points.
  SetPartition() = default;

  // Discrete partition {1}{2}...{m} and one-block partition {1..m}.
  static SetPartition discrete(int m);
  static SetPartition one_block(int m);

  int points() const { return m_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  // 0-based block index of point p in 1..m.
  int block_of(int p) const { return block_of_[static_cast<size_t>(p)]; }

  bool operator==(const SetPartition& o) const { return m_ == o.m_ && blocks_ == o.blocks_; }
  std::strong_ordering operator<=>(const SetPartition& o) const;

 private:
  int m_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;  // index 1..m
};

// Points p,q share a block iff values[p-1] == values[q-1].
SetPartition kernel(const std::vector<int>& values);

// sigma <= pi in the order used throughout: sigma is COARSER than pi, i.e.
// every block of pi is contained in a block of sigma. The one-block partition
// is the minimum of the lattice.
bool coarser_leq(const SetPartition& sigma, const SetPartition& pi);

// Finest partition coarser than both (transitive closure of the union of the
// block relations); |join_coarsen(pi,sigma)| is written |pi v sigma|.
SetPartition join_coarsen(const SetPartition& pi, const SetPartition& sigma);

// Number of quadruples a<b<c<d with a,c in one block and b,d in another.
int crossing_count(const SetPartition& pi);
bool is_noncrossing(const SetPartition& pi);

// (-1)^crossing_count on partitions with all blocks of even size; rejects odd
// blocks. Noncrossing even partitions get +1, and the pairing induced by a
// permutation gets the permutation's sign.
int signature(const SetPartition& pi);

bool all_blocks_even(const SetPartition& pi);

// One-row pairing of 2k points induced by rho in S_k: upper point i is paired
// with lower point rho(i), flattened per the convention above, giving blocks
// {k+1-i, k+rho(i)}. rho is 1-based.
SetPartition pairing_from_permutation(const std::vector<int>& rho);

// All partitions of {1..m}, generated by restricted-growth strings.
std::vector<SetPartition> all_partitions(int m);

// All pairings (perfect matchings) of {1..m}; empty for odd m.
std::vector<SetPartition> all_pairings(int m);

// All partitions coarser than pi (merges of its blocks), pi included.
std::vector<SetPartition> coarsenings(const SetPartition& pi);

}  // namespace quizzy
