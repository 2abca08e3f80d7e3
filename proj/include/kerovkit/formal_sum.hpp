#pragma once

// Integer linear combinations of set partitions and the rho-ordered product.

#include "kerovkit/partition.hpp"

#include <map>
#include <span>

namespace kerovkit {

class FormalSum {
public:
  using Terms = std::map<SetPartition, Integer>;

  FormalSum() = default;
  explicit FormalSum(int n) : n_(n) {}
  FormalSum(const SetPartition& p, const Integer& coefficient = 1);

  int size() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Integer coefficient(const SetPartition& p) const;

  void add(const SetPartition& p, const Integer& coefficient);

  FormalSum& operator+=(const FormalSum& other);
  FormalSum& operator-=(const FormalSum& other);
  FormalSum& operator*=(const Integer& c);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(FormalSum a, const Integer& c) { return a *= c; }
  friend FormalSum operator*(const Integer& c, FormalSum a) { return a *= c; }

  bool operator==(const FormalSum& other) const { return n_ == other.n_ && terms_ == other.terms_; }

private:
  int n_ = 0;
  Terms terms_;
};

FormalSum add(const FormalSum& a, const FormalSum& b);
FormalSum scale(const FormalSum& a, const Integer& c);

/// rho-ordered product. Factor s is a partition of {1..|rho_s|}, read through
/// the order-preserving bijection onto block s of rho. rho must be non-crossing.
FormalSum rho_product(const SetPartition& rho, std::span<const SetPartition> factors);
/// Bilinear extension; factor s is a formal sum over partitions of {1..|rho_s|}.
FormalSum rho_product(const SetPartition& rho, std::span<const FormalSum> factors);

/// Converts a factor given with ambient labels (blocks covering rho block s
/// exactly) into the local form taken by rho_product.
SetPartition factor_from_ambient(const SetPartition& rho, int block, const Blocks& ambient);

/// Calls visit with every partition sigma >= base.
void for_each_coarsening(const SetPartition& base, const std::function<void(const SetPartition&)>& visit);

/// Sum of all partitions of {1..n}.
FormalSum moment_pp(int n);
/// Sum of all sigma >= kreweras(rho).
FormalSum moment_pp_rho(const SetPartition& rho);
/// The same element built as the rho-ordered product of moment_pp over the blocks.
FormalSum moment_pp_rho_product_form(const SetPartition& rho);
/// Sum of free_index(pi) pi over all partitions of {1..n}.
FormalSum cumulant_pp(int n);
/// Moebius inversion of moment_pp_rho over NC(n).
FormalSum cumulant_pp_by_moebius(int n);

}  // namespace kerovkit
