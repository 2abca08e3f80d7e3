#pragma once

// Set partitions and pair partitions of {1..n} together with the geometric
// invariants used by the calculus of partitions: fat partitions, Kreweras
// complements, winding cycles of pi_fat o c, genus, evercrossing and the
// free index.

#include "kerovkit/rational.hpp"

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kerovkit {

using Block = std::vector<int>;
using Blocks = std::vector<Block>;

/// Partition of {1..n}. Blocks are sorted ascending and ordered by their
/// minimum, so two equal partitions always compare equal.
class SetPartition {
public:
  SetPartition() = default;
  /// Throws std::invalid_argument unless the blocks cover {1..n} exactly once.
  SetPartition(int n, Blocks blocks);

  /// ids[i] is an arbitrary block label for element i+1.
  static SetPartition from_block_ids(std::span<const int> ids);
  static SetPartition trivial(int n);
  static SetPartition one_block(int n);

  int size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const Blocks& blocks() const { return blocks_; }
  /// Index into blocks() of the block holding element x (1-based).
  int block_of(int x) const { return block_of_[static_cast<std::size_t>(x - 1)]; }
  bool connects(int a, int b) const { return block_of(a) == block_of(b); }

  bool is_trivial() const { return block_count() == n_; }
  bool is_pair_partition() const;
  /// this <= other in the refinement order.
  bool finer_than(const SetPartition& other) const;

  auto operator<=>(const SetPartition& other) const = default;
  bool operator==(const SetPartition& other) const = default;

private:
  int n_ = 0;
  Blocks blocks_;
  std::vector<int> block_of_;
};

/// Perfect matching on {1..m}. The fat ground set {1,1',2,2',...} is encoded
/// with k -> 2k-1 and k' -> 2k.
class PairPartition {
public:
  PairPartition() = default;
  PairPartition(int points, std::vector<std::pair<int, int>> pairs);

  int points() const { return points_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int partner(int x) const { return partner_[static_cast<std::size_t>(x - 1)]; }
  SetPartition as_set_partition() const;

  auto operator<=>(const PairPartition& other) const = default;
  bool operator==(const PairPartition& other) const = default;

private:
  int points_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> partner_;
};

struct WindingCycle {
  std::vector<int> vertices;  // starts at the smallest vertex, follows pi_fat o c
  int winds = 0;
  int k = 0;                  // vertices.size() - winds
};
using WindingCycles = std::vector<WindingCycle>;

// text and enumeration

/// "1,3|2,5,7|4|6"; n is the largest element and every label in 1..n must occur once.
SetPartition parse_partition(std::string_view text);
/// Blocks of an arbitrary finite set of positive labels, same syntax; no cover check.
Blocks parse_blocks(std::string_view text);
std::string to_string(const SetPartition& p);
std::string to_string(const PairPartition& p);

/// Calls visit once per partition of {1..n}, in restricted-growth-string order.
void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> set_partitions(int n);
/// Non-crossing partitions of {1..n}, in restricted-growth-string order.
std::vector<SetPartition> noncrossing_partitions(int n);

// structure

bool is_noncrossing(const SetPartition& p);
bool is_noncrossing(const PairPartition& p);
PairPartition fat(const SetPartition& p);
/// Relabels each vertex x of a fat-set pair partition to x-1 (1 -> 2n).
PairPartition rotate_fat(const PairPartition& p);
SetPartition kreweras(const SetPartition& p);
SetPartition kreweras_inverse(const SetPartition& p);
/// Label x becomes ((x-1+shift) mod n)+1.
SetPartition rotate(const SetPartition& p, int shift);
PairPartition rotate(const PairPartition& p, int shift);
/// Smallest partition above both arguments.
SetPartition join(const SetPartition& a, const SetPartition& b);
/// Restriction to the given sorted labels, relabelled to 1..labels.size().
SetPartition restrict_to(const SetPartition& p, std::span<const int> labels);

/// Product over blocks of (-1)^{|b|-1} Catalan(|b|-1).
Integer moebius(const SetPartition& p);

/// Cycles of pi_fat o c with their winding data. Requires n >= 1.
WindingCycles winding_cycles(const SetPartition& p);
/// (n+1-r-t)/2. Requires n >= 1; a parity or sign violation is reported as std::logic_error.
int genus(const SetPartition& p);
int genus(const PairPartition& p);
bool is_evercrossing(const SetPartition& p);
bool is_evercrossing(const PairPartition& p);

/// Sum of Moebius values over non-crossing refinements of p.
Integer free_index(const SetPartition& p);
Integer free_index(const PairPartition& p);

/// Free index through the factorisation over a non-crossing group of blocks.
/// sigma_blocks lists indices into p.blocks(); the blocks must form a
/// non-crossing partition of their union.
Integer free_index_by_split(const SetPartition& p, std::span<const int> sigma_blocks);
/// All block subsets (as sorted index lists) that form a non-crossing partition.
std::vector<std::vector<int>> admissible_splits(const SetPartition& p);

/// Largest non-crossing partition kappa of the labels `other` (sorted) such that
/// rho together with kappa is non-crossing. rho is given by its blocks.
Blocks relative_kreweras(const Blocks& rho, std::span<const int> other);

}  // namespace kerovkit
