#include "kerovkit/formal_sum.hpp"

#include <algorithm>
#include <stdexcept>

namespace kerovkit {

FormalSum::FormalSum(const SetPartition& p, const Integer& coefficient) : n_(p.size())
{
  add(p, coefficient);
}

Integer FormalSum::coefficient(const SetPartition& p) const
{
  const auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

void FormalSum::add(const SetPartition& p, const Integer& coefficient)
{
  if (p.size() != n_) throw std::invalid_argument("formal sum term has the wrong ground-set size");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

FormalSum& FormalSum::operator+=(const FormalSum& other)
{
  if (other.n_ != n_) throw std::invalid_argument("adding formal sums over different ground sets");
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& other)
{
  if (other.n_ != n_) throw std::invalid_argument("subtracting formal sums over different ground sets");
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

FormalSum& FormalSum::operator*=(const Integer& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, coeff] : terms_) coeff *= c;
  return *this;
}

FormalSum add(const FormalSum& a, const FormalSum& b) { return a + b; }
FormalSum scale(const FormalSum& a, const Integer& c) { return a * c; }

void for_each_coarsening(const SetPartition& base, const std::function<void(const SetPartition&)>& visit)
{
  const int n = base.size();
  for_each_partition(base.block_count(), [&](const SetPartition& grouping) {
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) ids[static_cast<std::size_t>(x - 1)] = grouping.block_of(base.block_of(x) + 1);
    visit(SetPartition::from_block_ids(ids));
  });
}

SetPartition factor_from_ambient(const SetPartition& rho, int block, const Blocks& ambient)
{
  if (block < 0 || block >= rho.block_count()) throw std::out_of_range("rho has no such block");
  const auto& labels = rho.blocks()[static_cast<std::size_t>(block)];
  std::vector<int> ids(labels.size(), -1);
  for (std::size_t b = 0; b < ambient.size(); ++b)
    for (int x : ambient[b]) {
      const auto it = std::lower_bound(labels.begin(), labels.end(), x);
      if (it == labels.end() || *it != x)
        throw std::invalid_argument("factor element " + std::to_string(x) + " is not in its rho block");
      auto& slot = ids[static_cast<std::size_t>(it - labels.begin())];
      if (slot >= 0) throw std::invalid_argument("duplicate factor element " + std::to_string(x));
      slot = static_cast<int>(b);
    }
  if (std::find(ids.begin(), ids.end(), -1) != ids.end()) throw std::invalid_argument("factor does not cover its rho block");
  return SetPartition::from_block_ids(ids);
}

FormalSum rho_product(const SetPartition& rho, std::span<const SetPartition> factors)
{
  const int n = rho.size();
  if (!is_noncrossing(rho)) throw std::invalid_argument("rho-ordered product needs a non-crossing rho");
  if (static_cast<int>(factors.size()) != rho.block_count())
    throw std::invalid_argument("rho-ordered product needs one factor per block of rho");

  // tag[x] = (rho block, factor block) of element x
  std::vector<std::pair<int, int>> tag(static_cast<std::size_t>(n + 1));
  std::vector<int> ids(static_cast<std::size_t>(n));
  int offset = 0;
  for (int s = 0; s < rho.block_count(); ++s) {
    const auto& labels = rho.blocks()[static_cast<std::size_t>(s)];
    const auto& f = factors[static_cast<std::size_t>(s)];
    if (f.size() != static_cast<int>(labels.size())) throw std::invalid_argument("factor size does not match its rho block");
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const int fb = f.block_of(static_cast<int>(i) + 1);
      tag[static_cast<std::size_t>(labels[i])] = {s, fb};
      ids[static_cast<std::size_t>(labels[i] - 1)] = offset + fb;
    }
    offset += f.block_count();
  }
  const SetPartition base = join(kreweras(rho), SetPartition::from_block_ids(ids));

  // the factor blocks swallowed by each base block; two different factor
  // blocks of the same rho block may never end up together
  const int nb = base.block_count();
  std::vector<std::map<int, int>> owned(static_cast<std::size_t>(nb));
  FormalSum result(n);
  for (int b = 0; b < nb; ++b)
    for (int x : base.blocks()[static_cast<std::size_t>(b)]) {
      const auto [s, fb] = tag[static_cast<std::size_t>(x)];
      auto [it, inserted] = owned[static_cast<std::size_t>(b)].try_emplace(s, fb);
      if (!inserted && it->second != fb) return result;
    }

  std::vector<int> group_of(static_cast<std::size_t>(nb), -1);
  std::vector<std::map<int, int>> group_owned;
  std::function<void(int)> rec = [&](int b) {
    if (b == nb) {
      std::vector<int> sigma_ids(static_cast<std::size_t>(n));
      for (int x = 1; x <= n; ++x) sigma_ids[static_cast<std::size_t>(x - 1)] = group_of[static_cast<std::size_t>(base.block_of(x))];
      result.add(SetPartition::from_block_ids(sigma_ids), 1);
      return;
    }
    const auto& mine = owned[static_cast<std::size_t>(b)];
    for (std::size_t g = 0; g < group_owned.size(); ++g) {
      const auto& theirs = group_owned[g];
      const bool clash = std::any_of(mine.begin(), mine.end(), [&](const auto& e) {
        const auto it = theirs.find(e.first);
        return it != theirs.end() && it->second != e.second;
      });
      if (clash) continue;
      const auto saved = theirs;
      group_owned[g].insert(mine.begin(), mine.end());
      group_of[static_cast<std::size_t>(b)] = static_cast<int>(g);
      rec(b + 1);
      group_owned[g] = saved;  // rec may have reallocated group_owned
    }
    group_owned.push_back(mine);
    group_of[static_cast<std::size_t>(b)] = static_cast<int>(group_owned.size()) - 1;
    rec(b + 1);
    group_owned.pop_back();
  };
  rec(0);
  return result;
}

FormalSum rho_product(const SetPartition& rho, std::span<const FormalSum> factors)
{
  if (static_cast<int>(factors.size()) != rho.block_count())
    throw std::invalid_argument("rho-ordered product needs one factor per block of rho");
  FormalSum result(rho.size());
  std::vector<SetPartition> chosen(factors.size());
  std::function<void(std::size_t, const Integer&)> rec = [&](std::size_t s, const Integer& coeff) {
    if (s == factors.size()) {
      result += rho_product(rho, std::span<const SetPartition>(chosen)) * coeff;
      return;
    }
    for (const auto& [p, c] : factors[s].terms()) {
      chosen[s] = p;
      rec(s + 1, coeff * c);
    }
  };
  rec(0, Integer(1));
  return result;
}

FormalSum moment_pp(int n)
{
  if (n < 1) throw std::invalid_argument("moment_pp needs n >= 1");
  FormalSum result(n);
  for_each_partition(n, [&](const SetPartition& p) { result.add(p, 1); });
  return result;
}

FormalSum moment_pp_rho(const SetPartition& rho)
{
  if (!is_noncrossing(rho)) throw std::invalid_argument("moment_pp_rho needs a non-crossing rho");
  FormalSum result(rho.size());
  for_each_coarsening(kreweras(rho), [&](const SetPartition& sigma) { result.add(sigma, 1); });
  return result;
}

FormalSum moment_pp_rho_product_form(const SetPartition& rho)
{
  std::vector<FormalSum> factors;
  for (const auto& b : rho.blocks()) factors.push_back(moment_pp(static_cast<int>(b.size())));
  return rho_product(rho, std::span<const FormalSum>(factors));
}

FormalSum cumulant_pp(int n)
{
  if (n < 1) throw std::invalid_argument("cumulant_pp needs n >= 1");
  FormalSum result(n);
  for_each_partition(n, [&](const SetPartition& p) { result.add(p, free_index(p)); });
  return result;
}

FormalSum cumulant_pp_by_moebius(int n)
{
  if (n < 1) throw std::invalid_argument("cumulant_pp needs n >= 1");
  FormalSum result(n);
  for (const auto& rho : noncrossing_partitions(n)) result += moment_pp_rho(rho) * moebius(kreweras(rho));
  return result;
}

}  // namespace kerovkit
