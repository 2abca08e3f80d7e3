#include "kerovkit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace kerovkit {

std::string to_string(const Rational& value)
{
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Rational parse_rational(std::string_view text)
{
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  Integer n(num_str), d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational result(n, d);
  result.canonicalize();
  return result;
}

Rational ratio(const Integer& num, const Integer& den)
{
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer factorial(int n)
{
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer binomial(int n, int k)
{
  if (k < 0 || n < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Integer catalan(int k)
{
  if (k < 0) throw std::invalid_argument("catalan of a negative index");
  Integer result = binomial(2 * k, k);
  return result / (k + 1);
}

Integer falling_factorial(int n, int k)
{
  if (k < 0) throw std::invalid_argument("falling factorial with negative length");
  if (k > n) return 0;
  Integer result = 1;
  for (int i = 0; i < k; ++i) result *= (n - i);
  return result;
}

}  // namespace kerovkit
