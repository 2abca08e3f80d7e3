#pragma once

// Admissible and pushing sequences. The distinguished point * is encoded as
// label 0 and A = {1..q}.

#include "kerovkit/group_oracle.hpp"

namespace kerovkit {

inline constexpr int kStar = 0;

struct AdmissibleSeq {
  int q = 0;
  std::vector<int> entries;  // a_1..a_n in {1..q}
  bool operator==(const AdmissibleSeq&) const = default;
};

struct PushingSeq {
  int q = 0;
  std::vector<int> entries;  // p_1..p_n in {0..q}, p_1 = 0
  bool operator==(const PushingSeq&) const = default;
};

/// (a_1 *)...(a_n *) fixes *.
bool is_admissible(const AdmissibleSeq& a);
/// p_1 = * and no two cyclically adjacent entries are equal. The empty
/// sequence is the unit; length 1 is never pushing.
bool is_pushing(const PushingSeq& p);

/// (a_1 *)...(a_n *) as a permutation of {0..q}; the rightmost factor acts first.
std::vector<int> transposition_product(const AdmissibleSeq& a);

/// Throws std::invalid_argument on invalid input.
PushingSeq adm_to_push(const AdmissibleSeq& a);
AdmissibleSeq push_to_adm(const PushingSeq& p);
PushingSeq push_product(const PushingSeq& p, const PushingSeq& r);

/// Support {a_1..a_n}, permutation the transposition product.
PartialPerm adm_to_partial_perm(const AdmissibleSeq& a);
/// Walk on pi_fat o c of the pushing partition of p, relabelled to the labels of p.
PartialPerm push_to_partial_perm(const PushingSeq& p);

bool is_pushing_partition(const SetPartition& pi);
/// Sum of push_to_partial_perm(p) over pushing sequences p ~ pi with values in
/// {0..q}. Zero when pi connects cyclic neighbours.
AlgebraElement partition_pushing_expansion(const SetPartition& pi, int q);

std::vector<AdmissibleSeq> admissible_sequences(int n, int q);
std::vector<PushingSeq> pushing_sequences(int n, int q);

std::string to_string(const PushingSeq& p);

}  // namespace kerovkit
