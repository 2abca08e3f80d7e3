#pragma once

// Explicit computations in the partial permutation algebra of {1..q} and in
// the representation theory of S_q. Everything here is brute force and is
// meant as ground truth for the symbolic modules.

#include "kerovkit/sigma.hpp"

#include <array>
#include <cstdint>
#include <unordered_map>

namespace kerovkit {

inline constexpr int kMaxDegree = 16;

/// Pair (support, permutation of {1..q}) with the permutation fixing every
/// point outside the support.
class PartialPerm {
public:
  PartialPerm() = default;
  /// Identity with empty support.
  explicit PartialPerm(int q);
  /// perm is the one-line form (perm[i] is the image of i+1). Throws
  /// std::invalid_argument if perm moves a point outside the support.
  PartialPerm(const std::vector<int>& perm, const std::vector<int>& support);

  int degree() const { return q_; }
  int operator()(int x) const { return perm_[static_cast<std::size_t>(x - 1)]; }
  bool in_support(int x) const { return (support_ >> (x - 1)) & 1u; }
  std::uint32_t support_mask() const { return support_; }
  std::vector<int> support() const;
  std::vector<int> one_line() const;
  PartialPerm inverse() const;
  /// Cycle lengths of the permutation restricted to the support, descending;
  /// fixed points of the support count as 1-cycles.
  std::vector<int> cycle_type() const;

  /// (d1, w1)(d2, w2) = (d1 u d2, w1 o w2); w2 acts first.
  friend PartialPerm operator*(const PartialPerm& a, const PartialPerm& b);

  auto operator<=>(const PartialPerm&) const = default;
  bool operator==(const PartialPerm&) const = default;

private:
  int q_ = 0;
  std::uint32_t support_ = 0;
  std::array<std::uint8_t, kMaxDegree> perm_{};
  friend struct PartialPermHash;
};

struct PartialPermHash {
  std::size_t operator()(const PartialPerm& p) const;
};

std::string to_string(const PartialPerm& p);

class AlgebraElement {
public:
  using Terms = std::unordered_map<PartialPerm, Rational, PartialPermHash>;

  AlgebraElement() = default;
  explicit AlgebraElement(int q) : q_(q) {}

  int degree() const { return q_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Rational coefficient(const PartialPerm& p) const;
  void add(const PartialPerm& p, const Rational& coefficient);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
  /// Full convolution product.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  bool operator==(const AlgebraElement& other) const { return q_ == other.q_ && terms_ == other.terms_; }

private:
  int q_ = 0;
  Terms terms_;
};

/// Element of the group algebra of S_q, keyed by one-line permutations.
using GroupElement = std::map<std::vector<int>, Rational>;

/// Forgets supports.
GroupElement project(const AlgebraElement& e);
/// theta^B_A with B = {1..q}: keeps the terms supported inside A and
/// relabels A (sorted) to {1..|A|}.
AlgebraElement theta(const AlgebraElement& e, std::span<const int> a);

AlgebraElement sigma_expand(const SigmaSymbol& s, int q);
AlgebraElement sigma_expand(const SigmaCombo& c, int q);
/// E(J^k) as a partial permutation element, the support of a summand being {a_1..a_k}.
AlgebraElement jm_power_expectation(int k, int q);

/// Number of times each partial permutation of the class occurs in sigma_expand(s, q).
Integer sigma_multiplicity(const SigmaSymbol& s);

/// Inverts sigma_expand. Throws std::invalid_argument if e is not constant on
/// classes or misses class members.
SigmaCombo decompose_sigma_basis(const AlgebraElement& e);
/// Decomposition of a * b, evaluating the product only at one representative
/// per class. Both factors must be central; the result is then central too.
SigmaCombo central_product(const AlgebraElement& a, const AlgebraElement& b);

struct YoungDiagram {
  std::vector<int> rows;

  YoungDiagram() = default;
  /// Throws std::invalid_argument unless rows are positive and weakly decreasing.
  explicit YoungDiagram(std::vector<int> rows);
  int size() const;
  auto operator<=>(const YoungDiagram&) const = default;
};

std::string to_string(const YoungDiagram& lambda);
/// All diagrams with q boxes, rows descending lexicographically.
std::vector<YoungDiagram> young_diagrams(int q);

/// Murnaghan-Nakayama. cycle_type may list its parts in any order.
Integer character(const YoungDiagram& lambda, std::span<const int> cycle_type);
Integer hook_length_dimension(const YoungDiagram& lambda);

/// q(q-1)...(q-|s|+1) chi(s, 1^{q-|s|}) / chi(1^q).
Rational central_value(const SigmaSymbol& s, const YoungDiagram& lambda);
Rational central_value(const SigmaCombo& c, const YoungDiagram& lambda);
/// Normalized trace of the projected element in the representation lambda.
Rational normalized_trace(const GroupElement& e, const YoungDiagram& lambda);

struct Interlacing {
  std::vector<int> minima;  // x_1 < ... < x_m
  std::vector<int> maxima;  // y_1 < ... < y_{m-1}
};
/// Contents (column - row) of the addable and removable boxes.
Interlacing interlacing(const YoungDiagram& lambda);

struct AtomicMeasure {
  std::vector<std::pair<Rational, Rational>> atoms;  // (location, weight), sorted by location
};

AtomicMeasure transition_measure(const YoungDiagram& lambda);
/// M_0 .. M_upto.
std::vector<Rational> measure_moments(const AtomicMeasure& mu, int upto);
AtomicMeasure dilate(const AtomicMeasure& mu, const Rational& p);

}  // namespace kerovkit
