#include "kerovkit/pushing.hpp"

#include <numeric>
#include <stdexcept>

namespace kerovkit {

namespace {

void check_q(int q)
{
  if (q < 0 || q > kMaxDegree) throw std::invalid_argument("degree out of range");
}

// sigma <- (t *) o sigma
void push_transposition(std::vector<int>& sigma, int t)
{
  for (auto& y : sigma) {
    if (y == kStar) y = t;
    else if (y == t) y = kStar;
  }
}

std::vector<int> inverse_of(const std::vector<int>& sigma)
{
  std::vector<int> inv(sigma.size());
  for (std::size_t x = 0; x < sigma.size(); ++x) inv[static_cast<std::size_t>(sigma[x])] = static_cast<int>(x);
  return inv;
}

PartialPerm restrict_to_a(const std::vector<int>& sigma, const std::vector<int>& support)
{
  return PartialPerm(std::vector<int>(sigma.begin() + 1, sigma.end()), support);
}

// Pushing partition of p with blocks labelled by their minimum.
SetPartition partition_of(const std::vector<int>& entries)
{
  return SetPartition::from_block_ids(entries);
}

}  // namespace

bool is_admissible(const AdmissibleSeq& a)
{
  check_q(a.q);
  for (int x : a.entries)
    if (x < 1 || x > a.q) return false;
  return transposition_product(a)[kStar] == kStar;
}

bool is_pushing(const PushingSeq& p)
{
  check_q(p.q);
  const auto& e = p.entries;
  if (e.empty()) return true;
  if (e.size() == 1 || e.front() != kStar) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > p.q) return false;
    if (e[i] == e[(i + 1) % e.size()]) return false;
  }
  return true;
}

std::vector<int> transposition_product(const AdmissibleSeq& a)
{
  std::vector<int> sigma(static_cast<std::size_t>(a.q + 1));
  std::iota(sigma.begin(), sigma.end(), 0);
  for (auto it = a.entries.rbegin(); it != a.entries.rend(); ++it) push_transposition(sigma, *it);
  return sigma;
}

PushingSeq adm_to_push(const AdmissibleSeq& a)
{
  if (!is_admissible(a)) throw std::invalid_argument("sequence is not admissible");
  const std::size_t n = a.entries.size();
  PushingSeq p{a.q, std::vector<int>(n)};
  std::vector<int> sigma(static_cast<std::size_t>(a.q + 1));
  std::iota(sigma.begin(), sigma.end(), 0);
  // sigma_l = (a_l *) sigma_{l+1}, p_l = sigma_l^{-1}(*)
  for (std::size_t l = n; l-- > 0;) {
    push_transposition(sigma, a.entries[l]);
    p.entries[l] = inverse_of(sigma)[kStar];
  }
  return p;
}

AdmissibleSeq push_to_adm(const PushingSeq& p)
{
  if (!is_pushing(p)) throw std::invalid_argument("sequence is not pushing");
  const std::size_t n = p.entries.size();
  AdmissibleSeq a{p.q, std::vector<int>(n)};
  std::vector<int> sigma(static_cast<std::size_t>(p.q + 1));
  std::iota(sigma.begin(), sigma.end(), 0);
  for (std::size_t l = n; l-- > 0;) {
    a.entries[l] = sigma[static_cast<std::size_t>(p.entries[l])];
    push_transposition(sigma, a.entries[l]);
  }
  return a;
}

PushingSeq push_product(const PushingSeq& p, const PushingSeq& r)
{
  if (p.q != r.q) throw std::invalid_argument("degree mismatch");
  if (!is_pushing(p) || !is_pushing(r)) throw std::invalid_argument("sequence is not pushing");
  const auto inv = inverse_of(transposition_product(push_to_adm(r)));
  PushingSeq out{p.q, {}};
  for (int x : p.entries) out.entries.push_back(inv[static_cast<std::size_t>(x)]);
  out.entries.insert(out.entries.end(), r.entries.begin(), r.entries.end());
  return out;
}

PartialPerm adm_to_partial_perm(const AdmissibleSeq& a)
{
  if (!is_admissible(a)) throw std::invalid_argument("sequence is not admissible");
  return restrict_to_a(transposition_product(a), a.entries);
}

PartialPerm push_to_partial_perm(const PushingSeq& p)
{
  if (!is_pushing(p)) throw std::invalid_argument("sequence is not pushing");
  const auto& e = p.entries;
  const int n = static_cast<int>(e.size());
  std::vector<int> perm(static_cast<std::size_t>(p.q));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> support;
  for (int x : e)
    if (x != kStar) support.push_back(x);
  if (n == 0) return PartialPerm(perm, support);

  const SetPartition pi = partition_of(e);
  // vertex m is decorated iff it is the minimum of its block and not 1
  std::vector<bool> decorated(static_cast<std::size_t>(n + 1), false);
  for (const auto& b : pi.blocks())
    if (b.front() != 1) decorated[static_cast<std::size_t>(b.front())] = true;
  // pi_fat o c: m -> (m-1)' -> next element of the block of m-1, cyclically
  auto step = [&](int m) {
    const int prev = m == 1 ? n : m - 1;
    const Block& b = pi.blocks()[static_cast<std::size_t>(pi.block_of(prev))];
    auto it = std::upper_bound(b.begin(), b.end(), prev);
    return it == b.end() ? b.front() : *it;
  };
  // the label of a decorated vertex y is p_y
  for (const auto& b : pi.blocks()) {
    const int start = b.front();
    if (start == 1) continue;
    int m = step(start);
    while (!decorated[static_cast<std::size_t>(m)]) m = step(m);
    perm[static_cast<std::size_t>(e[static_cast<std::size_t>(start - 1)] - 1)] = e[static_cast<std::size_t>(m - 1)];
  }
  return PartialPerm(perm, support);
}

bool is_pushing_partition(const SetPartition& pi)
{
  const int n = pi.size();
  if (n == 1) return false;
  for (int l = 1; l <= n && n > 1; ++l)
    if (pi.connects(l, l == n ? 1 : l + 1)) return false;
  return true;
}

AlgebraElement partition_pushing_expansion(const SetPartition& pi, int q)
{
  check_q(q);
  AlgebraElement out(q);
  if (!is_pushing_partition(pi)) return out;
  const int r = pi.block_count();
  // block 0 holds 1 and carries *, the others get distinct labels from {1..q}
  std::vector<int> label(static_cast<std::size_t>(r), kStar);
  std::vector<bool> used(static_cast<std::size_t>(q + 1), false);
  std::function<void(int)> rec = [&](int b) {
    if (b == r) {
      PushingSeq p{q, std::vector<int>(static_cast<std::size_t>(pi.size()))};
      for (int x = 1; x <= pi.size(); ++x)
        p.entries[static_cast<std::size_t>(x - 1)] = label[static_cast<std::size_t>(pi.block_of(x))];
      out.add(push_to_partial_perm(p), 1);
      return;
    }
    for (int v = 1; v <= q; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      label[static_cast<std::size_t>(b)] = v;
      rec(b + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(r == 0 ? 0 : 1);
  return out;
}

std::vector<AdmissibleSeq> admissible_sequences(int n, int q)
{
  check_q(q);
  std::vector<AdmissibleSeq> out;
  if (n < 0) throw std::invalid_argument("negative length");
  if (n > 0 && q == 0) return out;
  AdmissibleSeq a{q, std::vector<int>(static_cast<std::size_t>(n), 1)};
  while (true) {
    if (is_admissible(a)) out.push_back(a);
    int pos = n - 1;
    while (pos >= 0 && a.entries[static_cast<std::size_t>(pos)] == q) a.entries[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++a.entries[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::vector<PushingSeq> pushing_sequences(int n, int q)
{
  check_q(q);
  if (n < 0) throw std::invalid_argument("negative length");
  std::vector<PushingSeq> out;
  if (n == 0) {
    out.push_back(PushingSeq{q, {}});
    return out;
  }
  if (n == 1) return out;
  PushingSeq p{q, std::vector<int>(static_cast<std::size_t>(n), kStar)};
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (p.entries.back() != kStar) out.push_back(p);
      return;
    }
    for (int v = 0; v <= q; ++v) {
      if (v == p.entries[static_cast<std::size_t>(i - 1)]) continue;
      p.entries[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

std::string to_string(const PushingSeq& p)
{
  std::string s = "(";
  for (std::size_t i = 0; i < p.entries.size(); ++i) {
    if (i) s += ',';
    s += p.entries[i] == kStar ? "*" : std::to_string(p.entries[i]);
  }
  return s + ")";
}

}  // namespace kerovkit
