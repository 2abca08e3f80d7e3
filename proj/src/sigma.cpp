#include "kerovkit/sigma.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace kerovkit {

SigmaSymbol::SigmaSymbol(std::vector<int> ks) : ks_(std::move(ks))
{
  for (int k : ks_)
    if (k < 1) throw std::invalid_argument("Sigma entries must be positive");
  std::sort(ks_.begin(), ks_.end(), std::greater<>());
}

int SigmaSymbol::weight() const { return std::accumulate(ks_.begin(), ks_.end(), 0); }

SigmaSymbol concat(const SigmaSymbol& a, const SigmaSymbol& b)
{
  auto ks = a.ks();
  ks.insert(ks.end(), b.ks().begin(), b.ks().end());
  return SigmaSymbol(std::move(ks));
}

std::string to_string(const SigmaSymbol& s)
{
  std::string out = "S(";
  for (std::size_t i = 0; i < s.ks().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.ks()[i]);
  }
  return out + ")";
}

SigmaCombo::SigmaCombo(const SigmaSymbol& s, const Rational& coefficient) { add(s, coefficient); }

Rational SigmaCombo::coefficient(const SigmaSymbol& s) const
{
  const auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SigmaCombo::add(const SigmaSymbol& s, const Rational& coefficient)
{
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

SigmaCombo& SigmaCombo::operator+=(const SigmaCombo& other)
{
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

SigmaCombo& SigmaCombo::operator-=(const SigmaCombo& other)
{
  for (const auto& [s, c] : other.terms_) add(s, -c);
  return *this;
}

SigmaCombo& SigmaCombo::operator*=(const Rational& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, coeff] : terms_) coeff *= c;
  return *this;
}

SigmaCombo operator*(const SigmaCombo& a, const SigmaCombo& b)
{
  SigmaCombo out;
  for (const auto& [sa, ca] : a.terms())
    for (const auto& [sb, cb] : b.terms()) out += sigma_product(sa, sb) * (ca * cb);
  return out;
}

std::string to_string(const SigmaCombo& c)
{
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [s, coeff] : c.terms()) {
    const bool negative = coeff < 0;
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    const Rational size = negative ? Rational(-coeff) : coeff;
    if (size != 1) out += to_string(size) + "*";
    out += to_string(s);
  }
  return out;
}

std::optional<SigmaSymbol> sigma_of_partition(const SetPartition& p)
{
  if (p.size() == 0) return SigmaSymbol();
  std::vector<int> ks;
  for (const auto& cycle : winding_cycles(p)) {
    if (cycle.k == 0) return std::nullopt;
    ks.push_back(cycle.k);
  }
  return SigmaSymbol(std::move(ks));
}

int filtration_degree(const SigmaSymbol& s) { return s.weight() + static_cast<int>(s.ks().size()); }

int filtration_degree(const SigmaCombo& c)
{
  int best = kZeroDegree;
  for (const auto& [s, coeff] : c.terms()) best = std::max(best, filtration_degree(s));
  return best;
}

SigmaCombo degree_at_least(const SigmaCombo& c, int d)
{
  SigmaCombo out;
  for (const auto& [s, coeff] : c.terms())
    if (filtration_degree(s) >= d) out.add(s, coeff);
  return out;
}

SetPartition canonical_partition(const SigmaSymbol& s)
{
  const int n = filtration_degree(s);
  Blocks blocks;
  Block marked;
  int running = 0;
  for (int k : s.ks()) {
    running += k + 1;
    marked.push_back(running);
  }
  if (!marked.empty()) blocks.push_back(marked);
  for (int x = 1; x <= n; ++x)
    if (!std::binary_search(marked.begin(), marked.end(), x)) blocks.push_back({x});
  return SetPartition(n, blocks);
}

SigmaCombo sigma_map(const FormalSum& f)
{
  SigmaCombo out;
  for (const auto& [p, c] : f.terms())
    if (auto s = sigma_of_partition(p)) out.add(*s, Rational(c));
  return out;
}

namespace {

SigmaCombo compute_sigma_product(const SigmaSymbol& a, const SigmaSymbol& b)
{
  const int da = filtration_degree(a);
  const int db = filtration_degree(b);
  Blocks rho_blocks(2);
  for (int x = 1; x <= da; ++x) rho_blocks[0].push_back(x);
  for (int x = da + 1; x <= da + db; ++x) rho_blocks[1].push_back(x);
  const SetPartition rho(da + db, rho_blocks);
  const std::vector<SetPartition> factors{canonical_partition(a), canonical_partition(b)};
  return sigma_map(rho_product(rho, std::span<const SetPartition>(factors)));
}

}  // namespace

SigmaCombo sigma_product(const SigmaSymbol& a, const SigmaSymbol& b)
{
  if (a.is_unit()) return SigmaCombo(b);
  if (b.is_unit()) return SigmaCombo(a);
  const auto key = a < b ? std::pair(a, b) : std::pair(b, a);
  static std::shared_mutex mutex;
  static std::map<std::pair<SigmaSymbol, SigmaSymbol>, SigmaCombo> memo;
  {
    std::shared_lock lock(mutex);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
  }
  auto value = compute_sigma_product(key.first, key.second);
  std::unique_lock lock(mutex);
  return memo.try_emplace(key, std::move(value)).first->second;
}

SigmaCombo mjm_in_sigma(int k) { return sigma_map(moment_pp(k)); }

SigmaCombo rjm_in_sigma(int n)
{
  if (n < 1) throw std::invalid_argument("rjm_in_sigma needs n >= 1");
  static std::mutex mutex;
  static std::map<int, SigmaCombo> memo;
  {
    std::lock_guard lock(mutex);
    if (const auto it = memo.find(n); it != memo.end()) return it->second;
  }
  SigmaCombo out;
  const auto cumulant = cumulant_pp(n);
  for (const auto& [p, c] : cumulant.terms()) {
    if (!is_evercrossing(p)) throw std::logic_error("non-evercrossing partition " + to_string(p) + " in the cumulant expansion");
    if (auto s = sigma_of_partition(p)) out.add(*s, Rational(c));
  }
  std::lock_guard lock(mutex);
  return memo.try_emplace(n, std::move(out)).first->second;
}

}  // namespace kerovkit
