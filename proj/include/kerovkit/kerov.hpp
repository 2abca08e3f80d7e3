#pragma once

// Kerov polynomials: Sigma_{k_1..k_t} written as polynomials in the free
// cumulants R_2, R_3, ... of the transition measure.

#include "kerovkit/nc_transform.hpp"
#include "kerovkit/sigma.hpp"

namespace kerovkit {

/// Polynomial in R_1, R_2, ... with rational coefficients. A monomial is the
/// multiset of variable indices, sorted descending; the empty monomial is 1.
class RPolynomial {
public:
  using Monomial = std::vector<int>;
  using Terms = std::map<Monomial, Rational>;

  RPolynomial() = default;
  RPolynomial(const Monomial& m, const Rational& coefficient = 1);
  static RPolynomial constant(const Rational& c);
  /// The single variable R_i.
  static RPolynomial variable(int i);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Rational coefficient(Monomial m) const;
  void add(Monomial m, const Rational& coefficient);

  RPolynomial& operator+=(const RPolynomial& other);
  RPolynomial& operator-=(const RPolynomial& other);
  RPolynomial& operator*=(const Rational& c);
  friend RPolynomial operator+(RPolynomial a, const RPolynomial& b) { return a += b; }
  friend RPolynomial operator-(RPolynomial a, const RPolynomial& b) { return a -= b; }
  friend RPolynomial operator*(RPolynomial a, const Rational& c) { return a *= c; }
  friend RPolynomial operator*(const RPolynomial& a, const RPolynomial& b);

  bool operator==(const RPolynomial&) const = default;

private:
  Terms terms_;
};

std::string to_string(const RPolynomial& p);

/// Sum of the indices of a monomial.
int gradation_degree(const RPolynomial::Monomial& m);
/// Largest gradation degree; kZeroDegree for the zero polynomial.
int gradation_degree(const RPolynomial& p);
RPolynomial graded_part(const RPolynomial& p, int d);

/// Value at R_i = cumulants[i]. Throws std::out_of_range if an index exceeds the sequence.
Rational evaluate(const RPolynomial& p, const ValueSequence<Rational>& cumulants);

/// K with Sigma_{ks} = K(R_2, R_3, ...), by repeatedly removing the top
/// filtration term. Memoized; safe to call concurrently.
RPolynomial kerov_polynomial(const std::vector<int>& ks);
RPolynomial kerov_polynomial(const SigmaSymbol& s);
/// Linear extension to Sigma combinations.
RPolynomial kerov_polynomial(const SigmaCombo& c);

/// Expansion of R_{j_1} ... R_{j_m} in the Sigma basis.
SigmaCombo r_monomial_in_sigma(const RPolynomial::Monomial& m);

/// Homogeneous degree n-2 polynomial sum over 2 m_2 + 3 m_3 + ... = n - 2 of
/// C(n,3)/4 * multinomial(m) * prod ((s-1) R_s)^{m_s}.
RPolynomial second_order_term(int n);
/// Sigma_{n-1} minus the genus-one correction; agrees with rjm_in_sigma(n)
/// on filtration degrees >= n - 2.
SigmaCombo rjm_second_order_sigma(int n);

/// Multiplicity vectors (m_2, m_3, ...) with sum s m_s = total, as maps s -> m_s.
std::vector<std::map<int, int>> weighted_multiplicities(int total);
/// Compositions of y into n positive parts.
std::vector<std::vector<int>> compositions(int y, int n);

}  // namespace kerovkit
