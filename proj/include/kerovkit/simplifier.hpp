#pragma once

// Reduction of evercrossing partitions to small pair partitions with the same
// genus and free index, and the census of reduced classes by genus.

#include "kerovkit/partition.hpp"

#include <optional>

namespace kerovkit {

/// Drops singleton blocks and relabels the rest to 1..m in order.
SetPartition strip_trivial(const SetPartition& p);
PairPartition fatten_step(const SetPartition& p);

/// Start points i of every applicable parallel-chord move: i and i+1 (cyclic)
/// pair with j and j-1, all four distinct. Applying the move deletes i+1 and j-1.
std::vector<int> parallel_moves(const PairPartition& pp);
PairPartition apply_parallel_move(const PairPartition& pp, int i);

/// Lexicographically smallest pair list among all cyclic rotations.
PairPartition rotation_canonical(const PairPartition& pp);
/// Reflection x -> m + 1 - x.
PairPartition mirror(const PairPartition& pp);

/// Fixpoint of the parallel-chord moves, always taking the smallest start
/// point first, in rotation-canonical form.
PairPartition collapse_parallel(const PairPartition& pp);
/// Rotation-canonical results reachable by every maximal sequence of moves.
std::vector<PairPartition> collapse_outcomes(const PairPartition& pp);

PairPartition simplify(const SetPartition& p);
/// Every intermediate object of simplify, as set partitions: the input, the
/// stripped partition, its fat partition and the result of each move.
std::vector<SetPartition> simplify_trace(const SetPartition& p);

/// Genus with the empty partition counted as genus 0.
int genus_or_zero(const SetPartition& p);

struct CensusEntry {
  PairPartition reduced;  // rotation-canonical
  Integer free_index;
  long sources = 0;       // evercrossing partitions reducing to it
};

struct Census {
  int genus = 0;
  int n_max = 0;
  std::vector<CensusEntry> classes;  // sorted by size, then pairs
  std::size_t mirror_classes = 0;    // count after also identifying mirror images
};

/// Simplifies every evercrossing partition of size <= n_max with the given
/// genus. Uses up to `threads` workers (0 means hardware concurrency).
Census genus_census(int g, int n_max, unsigned threads = 1);

}  // namespace kerovkit
