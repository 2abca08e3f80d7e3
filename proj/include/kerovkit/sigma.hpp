#pragma once

// Normalized conjugacy-class indicators Sigma_{k_1,...,k_m}, their integer
// combinations and the homomorphism from formal sums of partitions.

#include "kerovkit/formal_sum.hpp"

#include <limits>
#include <optional>

namespace kerovkit {

/// Multiset of cycle lengths, sorted descending. The empty symbol is the unit.
class SigmaSymbol {
public:
  SigmaSymbol() = default;
  /// Throws std::invalid_argument on entries < 1.
  explicit SigmaSymbol(std::vector<int> ks);

  const std::vector<int>& ks() const { return ks_; }
  bool is_unit() const { return ks_.empty(); }
  /// Sum of the k_i: the number of points moved by a generic summand.
  int weight() const;

  auto operator<=>(const SigmaSymbol&) const = default;
  bool operator==(const SigmaSymbol&) const = default;

private:
  std::vector<int> ks_;
};

/// Concatenation of the two multisets.
SigmaSymbol concat(const SigmaSymbol& a, const SigmaSymbol& b);
std::string to_string(const SigmaSymbol& s);

class SigmaCombo {
public:
  using Terms = std::map<SigmaSymbol, Rational>;

  SigmaCombo() = default;
  SigmaCombo(const SigmaSymbol& s, const Rational& coefficient = 1);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Rational coefficient(const SigmaSymbol& s) const;
  void add(const SigmaSymbol& s, const Rational& coefficient);

  SigmaCombo& operator+=(const SigmaCombo& other);
  SigmaCombo& operator-=(const SigmaCombo& other);
  SigmaCombo& operator*=(const Rational& c);
  friend SigmaCombo operator+(SigmaCombo a, const SigmaCombo& b) { return a += b; }
  friend SigmaCombo operator-(SigmaCombo a, const SigmaCombo& b) { return a -= b; }
  friend SigmaCombo operator*(SigmaCombo a, const Rational& c) { return a *= c; }
  friend SigmaCombo operator*(const Rational& c, SigmaCombo a) { return a *= c; }
  /// Product in the algebra spanned by the Sigma symbols.
  friend SigmaCombo operator*(const SigmaCombo& a, const SigmaCombo& b);

  bool operator==(const SigmaCombo&) const = default;

private:
  Terms terms_;
};

std::string to_string(const SigmaCombo& c);

inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Sigma_{k_1..k_t} read off the winding cycles; nullopt when some k_s = 0.
/// The empty partition gives the unit.
std::optional<SigmaSymbol> sigma_of_partition(const SetPartition& p);

/// Sum of (k_i + 1).
int filtration_degree(const SigmaSymbol& s);
/// Largest degree among the terms; kZeroDegree for the zero combination.
int filtration_degree(const SigmaCombo& c);
/// Terms of filtration degree >= d.
SigmaCombo degree_at_least(const SigmaCombo& c, int d);

/// Partition of {1..sum(k_i+1)} whose only non-trivial block holds the running
/// sums of the k_i + 1.
SetPartition canonical_partition(const SigmaSymbol& s);

SigmaCombo sigma_map(const FormalSum& f);

/// Structure constants of the Sigma algebra; memoized and safe to call concurrently.
SigmaCombo sigma_product(const SigmaSymbol& a, const SigmaSymbol& b);

/// sigma_map(moment_pp(k)).
SigmaCombo mjm_in_sigma(int k);
/// sigma_map(cumulant_pp(n)); memoized. Throws std::logic_error if a
/// non-evercrossing partition ever carries a nonzero coefficient.
SigmaCombo rjm_in_sigma(int n);

}  // namespace kerovkit
