#include "kerovkit/kerov.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace kerovkit {

namespace {

void canonical_monomial(RPolynomial::Monomial& m)
{
  for (int i : m)
    if (i < 1) throw std::invalid_argument("cumulant indices start at 1");
  std::sort(m.begin(), m.end(), std::greater<>());
}

Integer multinomial(const std::map<int, int>& m)
{
  int total = 0;
  Integer denominator = 1;
  for (const auto& [s, count] : m) {
    total += count;
    denominator *= factorial(count);
  }
  return factorial(total) / denominator;
}

}  // namespace

RPolynomial::RPolynomial(const Monomial& m, const Rational& coefficient) { add(m, coefficient); }

RPolynomial RPolynomial::constant(const Rational& c) { return RPolynomial(Monomial{}, c); }

RPolynomial RPolynomial::variable(int i) { return RPolynomial(Monomial{i}); }

Rational RPolynomial::coefficient(Monomial m) const
{
  canonical_monomial(m);
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RPolynomial::add(Monomial m, const Rational& coefficient)
{
  canonical_monomial(m);
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

RPolynomial& RPolynomial::operator+=(const RPolynomial& other)
{
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

RPolynomial& RPolynomial::operator-=(const RPolynomial& other)
{
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

RPolynomial& RPolynomial::operator*=(const Rational& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

RPolynomial operator*(const RPolynomial& a, const RPolynomial& b)
{
  RPolynomial out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      auto m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(std::move(m), ca * cb);
    }
  return out;
}

std::string to_string(const RPolynomial& p)
{
  if (p.empty()) return "0";
  std::string out;
  // highest degree first
  std::vector<std::pair<RPolynomial::Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = gradation_degree(a.first), db = gradation_degree(b.first);
    return da != db ? da > db : a.first > b.first;
  });
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (!mono.empty()) mono += '*';
      mono += "R" + std::to_string(m[i]);
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    if (mono.empty()) out += to_string(mag);
    else if (mag == 1) out += mono;
    else out += to_string(mag) + "*" + mono;
  }
  return out;
}

int gradation_degree(const RPolynomial::Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

int gradation_degree(const RPolynomial& p)
{
  int best = kZeroDegree;
  for (const auto& [m, c] : p.terms()) best = std::max(best, gradation_degree(m));
  return best;
}

RPolynomial graded_part(const RPolynomial& p, int d)
{
  RPolynomial out;
  for (const auto& [m, c] : p.terms())
    if (gradation_degree(m) == d) out.add(m, c);
  return out;
}

Rational evaluate(const RPolynomial& p, const ValueSequence<Rational>& cumulants)
{
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (int i : m) {
      if (i > cumulants.size()) throw std::out_of_range("cumulant R_" + std::to_string(i) + " not supplied");
      term *= cumulants[i];
    }
    total += term;
  }
  return total;
}

SigmaCombo r_monomial_in_sigma(const RPolynomial::Monomial& m)
{
  SigmaCombo out{SigmaSymbol()};
  for (int i : m) out = out * rjm_in_sigma(i);
  return out;
}

RPolynomial kerov_polynomial(const SigmaSymbol& s)
{
  static std::mutex mutex;
  static std::map<SigmaSymbol, RPolynomial> memo;
  {
    std::lock_guard lock(mutex);
    if (const auto it = memo.find(s); it != memo.end()) return it->second;
  }
  RPolynomial result;
  SigmaCombo rest(s);
  while (!rest.empty()) {
    // top filtration degree; among equals the largest symbol, for determinism
    auto top = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
      if (filtration_degree(it->first) >= filtration_degree(top->first)) top = it;
    const SigmaSymbol t = top->first;
    const Rational c = top->second;
    RPolynomial::Monomial m;
    for (int k : t.ks()) m.push_back(k + 1);
    result.add(m, c);
    const int before = filtration_degree(rest);
    rest -= r_monomial_in_sigma(m) * c;
    if (rest.coefficient(t) != 0 || (!rest.empty() && filtration_degree(rest) > before))
      throw std::logic_error("Kerov elimination failed to lower the filtration at " + to_string(t));
  }
  std::lock_guard lock(mutex);
  return memo.try_emplace(s, std::move(result)).first->second;
}

RPolynomial kerov_polynomial(const std::vector<int>& ks) { return kerov_polynomial(SigmaSymbol(ks)); }

RPolynomial kerov_polynomial(const SigmaCombo& c)
{
  RPolynomial out;
  for (const auto& [s, coeff] : c.terms()) out += kerov_polynomial(s) * coeff;
  return out;
}

std::vector<std::map<int, int>> weighted_multiplicities(int total)
{
  std::vector<std::map<int, int>> out;
  std::map<int, int> current;
  std::function<void(int, int)> rec = [&](int left, int smallest) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (int s = smallest; s <= left; ++s) {
      ++current[s];
      rec(left - s, s);
      if (--current[s] == 0) current.erase(s);
    }
  };
  if (total >= 0) rec(total, 2);
  return out;
}

std::vector<std::vector<int>> compositions(int y, int n)
{
  std::vector<std::vector<int>> out;
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(parts.size()) == n) {
      if (left == 0) out.push_back(parts);
      return;
    }
    for (int x = 1; x <= left - (n - 1 - static_cast<int>(parts.size())); ++x) {
      parts.push_back(x);
      rec(left - x);
      parts.pop_back();
    }
  };
  if (n >= 1) rec(y);
  return out;
}

RPolynomial second_order_term(int n)
{
  if (n < 2) throw std::invalid_argument("second_order_term needs n >= 2");
  RPolynomial out;
  const Rational front = ratio(binomial(n, 3), 4);
  for (const auto& m : weighted_multiplicities(n - 2)) {
    Rational c = front * Rational(multinomial(m));
    RPolynomial::Monomial mono;
    for (const auto& [s, count] : m)
      for (int i = 0; i < count; ++i) {
        c *= s - 1;
        mono.push_back(s);
      }
    out.add(mono, c);
  }
  return out;
}

SigmaCombo rjm_second_order_sigma(int n)
{
  if (n < 2) throw std::invalid_argument("rjm_second_order_sigma needs n >= 2");
  SigmaCombo out(SigmaSymbol({n - 1}));
  const Rational front = ratio(Integer(n) * (n - 1) * (n - 2), 24);
  for (const auto& m : weighted_multiplicities(n - 2)) {
    Rational c = front * Rational(multinomial(m));
    std::vector<int> ks;
    for (const auto& [s, count] : m)
      for (int i = 0; i < count; ++i) {
        c *= s - 1;
        ks.push_back(s - 1);
      }
    out.add(SigmaSymbol(ks), -c);
  }
  return out;
}

}  // namespace kerovkit
