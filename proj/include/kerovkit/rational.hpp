#pragma once

// Exact scalar types shared by every module.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kerovkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p" for integers, "p/q" with q > 0 and gcd(p, q) = 1 otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Accepts "p", "-p" or "p/q". Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);
/// num/den in lowest terms. Throws std::domain_error on a zero denominator.
Rational ratio(const Integer& num, const Integer& den);

Integer factorial(int n);
Integer binomial(int n, int k);
Integer catalan(int k);
/// n (n-1) ... (n-k+1); zero when k > n.
Integer falling_factorial(int n, int k);

}  // namespace kerovkit
