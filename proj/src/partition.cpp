#include "kerovkit/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace kerovkit {

namespace {

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_label(std::string_view token)
{
  token = trim(token);
  if (token.empty()) throw std::invalid_argument("empty element in partition text");
  bool negative = false;
  if (token.front() == '-' || token.front() == '+') {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }
  if (token.empty()) throw std::invalid_argument("malformed element in partition text");
  long value = 0;
  for (char ch : token) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("malformed element '" + std::string(token) + "' in partition text");
    value = value * 10 + (ch - '0');
    if (value > 1'000'000) throw std::invalid_argument("element too large in partition text");
  }
  if (negative) value = -value;
  if (value <= 0) throw std::invalid_argument("partition elements must be positive");
  return static_cast<int>(value);
}

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x)
  {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

private:
  std::vector<int> parent_;
};

/// next[x] = successor of x inside its block, cyclically (1-based, index 0 unused).
std::vector<int> block_successor(const SetPartition& p)
{
  std::vector<int> next(static_cast<std::size_t>(p.size() + 1), 0);
  for (const auto& b : p.blocks())
    for (std::size_t t = 0; t < b.size(); ++t) next[static_cast<std::size_t>(b[t])] = b[(t + 1) % b.size()];
  return next;
}

SetPartition from_cycles_of(const std::vector<int>& map)
{
  const int n = static_cast<int>(map.size()) - 1;
  std::vector<int> ids(static_cast<std::size_t>(n), -1);
  int label = 0;
  for (int x = 1; x <= n; ++x) {
    if (ids[static_cast<std::size_t>(x - 1)] >= 0) continue;
    for (int y = x; ids[static_cast<std::size_t>(y - 1)] < 0; y = map[static_cast<std::size_t>(y)])
      ids[static_cast<std::size_t>(y - 1)] = label;
    ++label;
  }
  return SetPartition::from_block_ids(ids);
}

/// True when the block of element l may be extended by i (l < i) without
/// creating a crossing among the elements 1..i-1 assigned so far.
bool can_extend(const std::vector<int>& ids, const std::vector<int>& block_min, int l, int i)
{
  for (int x = l + 1; x < i; ++x)
    if (block_min[static_cast<std::size_t>(ids[static_cast<std::size_t>(x - 1)])] < l) return false;
  return true;
}

/// Non-crossing refinements of `coarse` (all of {1..n} when coarse is null).
void for_each_nc_refinement(int n, const SetPartition* coarse,
                            const std::function<void(const std::vector<int>& ids, int blocks)>& visit)
{
  std::vector<int> ids(static_cast<std::size_t>(n), -1);
  std::vector<int> block_min, block_last;
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      visit(ids, static_cast<int>(block_min.size()));
      return;
    }
    const int count = static_cast<int>(block_min.size());
    for (int b = 0; b < count; ++b) {
      const int l = block_last[static_cast<std::size_t>(b)];
      if (coarse && !coarse->connects(l, i)) continue;
      if (!can_extend(ids, block_min, l, i)) continue;
      ids[static_cast<std::size_t>(i - 1)] = b;
      block_last[static_cast<std::size_t>(b)] = i;
      rec(i + 1);
      block_last[static_cast<std::size_t>(b)] = l;
    }
    ids[static_cast<std::size_t>(i - 1)] = count;
    block_min.push_back(i);
    block_last.push_back(i);
    rec(i + 1);
    block_min.pop_back();
    block_last.pop_back();
    ids[static_cast<std::size_t>(i - 1)] = -1;
  };
  rec(1);
}

Integer moebius_of_sizes(const std::vector<int>& sizes)
{
  Integer result = 1;
  for (int s : sizes) {
    if (s == 1) continue;
    Integer c = catalan(s - 1);
    if ((s - 1) % 2) c = -c;
    result *= c;
  }
  return result;
}

bool blocks_cross(const Block& a, const Block& b)
{
  // a and b interleave iff some element of b lies strictly between two
  // consecutive elements of a while another lies outside that gap.
  for (std::size_t t = 0; t + 1 < a.size(); ++t) {
    const int lo = a[t], hi = a[t + 1];
    bool inside = false, outside = false;
    for (int x : b) (x > lo && x < hi ? inside : outside) = true;
    if (inside && outside) return true;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------- SetPartition

SetPartition::SetPartition(int n, Blocks blocks) : n_(n)
{
  if (n < 0) throw std::invalid_argument("partition size must be nonnegative");
  block_of_.assign(static_cast<std::size_t>(n), -1);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("partition has an empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    for (int x : blocks[s]) {
      if (x < 1) throw std::invalid_argument("partition elements must be positive");
      if (x > n) throw std::invalid_argument("partition element " + std::to_string(x) + " exceeds n");
      auto& slot = block_of_[static_cast<std::size_t>(x - 1)];
      if (slot >= 0) throw std::invalid_argument("duplicate element " + std::to_string(x) + " in partition");
      slot = static_cast<int>(s);
    }
  }
  for (int x = 1; x <= n; ++x)
    if (block_of_[static_cast<std::size_t>(x - 1)] < 0)
      throw std::invalid_argument("missing element " + std::to_string(x) + " in partition");
  blocks_ = std::move(blocks);
}

SetPartition SetPartition::from_block_ids(std::span<const int> ids)
{
  std::vector<std::pair<int, Block>> by_label;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto it = std::find_if(by_label.begin(), by_label.end(), [&](const auto& e) { return e.first == ids[i]; });
    if (it == by_label.end()) {
      by_label.emplace_back(ids[i], Block{});
      it = std::prev(by_label.end());
    }
    it->second.push_back(static_cast<int>(i) + 1);
  }
  Blocks blocks;
  blocks.reserve(by_label.size());
  for (auto& e : by_label) blocks.push_back(std::move(e.second));
  return SetPartition(static_cast<int>(ids.size()), std::move(blocks));
}

SetPartition SetPartition::trivial(int n)
{
  Blocks blocks;
  for (int x = 1; x <= n; ++x) blocks.push_back({x});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::one_block(int n)
{
  if (n == 0) return SetPartition();
  Block b(static_cast<std::size_t>(n));
  std::iota(b.begin(), b.end(), 1);
  return SetPartition(n, {b});
}

bool SetPartition::is_pair_partition() const
{
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.size() == 2; });
}

bool SetPartition::finer_than(const SetPartition& other) const
{
  if (other.n_ != n_) return false;
  for (const auto& b : blocks_)
    for (int x : b)
      if (!other.connects(b.front(), x)) return false;
  return true;
}

// --------------------------------------------------------------- PairPartition

PairPartition::PairPartition(int points, std::vector<std::pair<int, int>> pairs) : points_(points)
{
  if (points < 0 || points % 2) throw std::invalid_argument("pair partition needs an even number of points");
  partner_.assign(static_cast<std::size_t>(points), 0);
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > points || a == b) throw std::invalid_argument("invalid pair in pair partition");
    for (int x : {a, b}) {
      if (partner_[static_cast<std::size_t>(x - 1)] != 0)
        throw std::invalid_argument("point " + std::to_string(x) + " occurs in two pairs");
    }
    partner_[static_cast<std::size_t>(a - 1)] = b;
    partner_[static_cast<std::size_t>(b - 1)] = a;
  }
  if (static_cast<int>(pairs.size()) * 2 != points) throw std::invalid_argument("pair partition does not cover all points");
  std::sort(pairs.begin(), pairs.end());
  pairs_ = std::move(pairs);
}

SetPartition PairPartition::as_set_partition() const
{
  Blocks blocks;
  for (auto [a, b] : pairs_) blocks.push_back({a, b});
  return SetPartition(points_, std::move(blocks));
}

// -------------------------------------------------------------- text and enumeration

SetPartition parse_partition(std::string_view text)
{
  Blocks blocks = parse_blocks(text);
  int n = 0;
  for (const auto& b : blocks)
    for (int x : b) n = std::max(n, x);
  return SetPartition(n, std::move(blocks));
}

Blocks parse_blocks(std::string_view text)
{
  text = trim(text);
  Blocks blocks;
  if (text.empty()) return blocks;
  for (auto part : split(text, '|')) {
    Block b;
    for (auto tok : split(part, ',')) b.push_back(parse_label(tok));
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw std::invalid_argument("duplicate element in partition text");
    blocks.push_back(std::move(b));
  }
  std::vector<int> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw std::invalid_argument("duplicate element in partition text");
  return blocks;
}

std::string to_string(const SetPartition& p)
{
  std::string out;
  for (std::size_t s = 0; s < p.blocks().size(); ++s) {
    if (s) out += '|';
    for (std::size_t t = 0; t < p.blocks()[s].size(); ++t) {
      if (t) out += ',';
      out += std::to_string(p.blocks()[s][t]);
    }
  }
  return out;
}

std::string to_string(const PairPartition& p) { return to_string(p.as_set_partition()); }

void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit)
{
  if (n < 0) throw std::invalid_argument("negative partition size");
  if (n == 0) {
    visit(SetPartition());
    return;
  }
  // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
  std::vector<int> a(static_cast<std::size_t>(n), 0), m(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(SetPartition::from_block_ids(a));
    int i = n - 1;
    while (i > 0 && a[static_cast<std::size_t>(i)] == m[static_cast<std::size_t>(i - 1)] + 1) --i;
    if (i == 0) break;
    ++a[static_cast<std::size_t>(i)];
    m[static_cast<std::size_t>(i)] = std::max(m[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      a[static_cast<std::size_t>(j)] = 0;
      m[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(i)];
    }
  }
}

std::vector<SetPartition> set_partitions(int n)
{
  std::vector<SetPartition> out;
  for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

std::vector<SetPartition> noncrossing_partitions(int n)
{
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<SetPartition> out;
  for_each_nc_refinement(n, nullptr, [&](const std::vector<int>& ids, int) { out.push_back(SetPartition::from_block_ids(ids)); });
  return out;
}

// ------------------------------------------------------------------- structure

bool is_noncrossing(const SetPartition& p)
{
  const auto& blocks = p.blocks();
  for (const auto& b : blocks)
    for (std::size_t t = 0; t + 1 < b.size(); ++t)
      for (int x = b[t] + 1; x < b[t + 1]; ++x) {
        const auto& other = blocks[static_cast<std::size_t>(p.block_of(x))];
        if (other.front() < b[t] || other.back() > b[t + 1]) return false;
      }
  return true;
}

bool is_noncrossing(const PairPartition& p) { return is_noncrossing(p.as_set_partition()); }

PairPartition fat(const SetPartition& p)
{
  std::vector<std::pair<int, int>> pairs;
  for (const auto& b : p.blocks())
    for (std::size_t t = 0; t < b.size(); ++t) pairs.emplace_back(2 * b[t], 2 * b[(t + 1) % b.size()] - 1);
  return PairPartition(2 * p.size(), std::move(pairs));
}

PairPartition rotate_fat(const PairPartition& p) { return rotate(p, -1); }

SetPartition kreweras(const SetPartition& p)
{
  if (!is_noncrossing(p)) throw std::invalid_argument("Kreweras complement needs a non-crossing partition");
  const int n = p.size();
  const auto next = block_successor(p);
  std::vector<int> prev(next.size(), 0);
  for (int x = 1; x <= n; ++x) prev[static_cast<std::size_t>(next[static_cast<std::size_t>(x)])] = x;
  std::vector<int> comp_next(next.size(), 0);
  for (int z = 1; z <= n; ++z) comp_next[static_cast<std::size_t>(z)] = prev[static_cast<std::size_t>(z % n + 1)];
  return from_cycles_of(comp_next);
}

SetPartition kreweras_inverse(const SetPartition& p)
{
  if (!is_noncrossing(p)) throw std::invalid_argument("inverse Kreweras complement needs a non-crossing partition");
  const int n = p.size();
  const auto next = block_successor(p);
  std::vector<int> prev(next.size(), 0);
  for (int x = 1; x <= n; ++x) prev[static_cast<std::size_t>(next[static_cast<std::size_t>(x)])] = x;
  std::vector<int> inv_next(next.size(), 0);
  for (int u = 1; u <= n; ++u) inv_next[static_cast<std::size_t>(u)] = prev[static_cast<std::size_t>(u)] % n + 1;
  return from_cycles_of(inv_next);
}

SetPartition rotate(const SetPartition& p, int shift)
{
  const int n = p.size();
  if (n == 0) return p;
  const int s = ((shift % n) + n) % n;
  Blocks blocks = p.blocks();
  for (auto& b : blocks)
    for (int& x : b) x = (x - 1 + s) % n + 1;
  return SetPartition(n, std::move(blocks));
}

PairPartition rotate(const PairPartition& p, int shift)
{
  const int m = p.points();
  if (m == 0) return p;
  const int s = ((shift % m) + m) % m;
  auto pairs = p.pairs();
  for (auto& [a, b] : pairs) {
    a = (a - 1 + s) % m + 1;
    b = (b - 1 + s) % m + 1;
  }
  return PairPartition(m, std::move(pairs));
}

SetPartition join(const SetPartition& a, const SetPartition& b)
{
  if (a.size() != b.size()) throw std::invalid_argument("join of partitions of different sizes");
  const int n = a.size();
  UnionFind uf(n);
  for (const auto* p : {&a, &b})
    for (const auto& blk : p->blocks())
      for (int x : blk) uf.unite(blk.front() - 1, x - 1);
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) ids[static_cast<std::size_t>(x)] = uf.find(x);
  return SetPartition::from_block_ids(ids);
}

SetPartition restrict_to(const SetPartition& p, std::span<const int> labels)
{
  std::vector<int> ids;
  ids.reserve(labels.size());
  for (int x : labels) ids.push_back(p.block_of(x));
  return SetPartition::from_block_ids(ids);
}

Integer moebius(const SetPartition& p)
{
  std::vector<int> sizes;
  for (const auto& b : p.blocks()) sizes.push_back(static_cast<int>(b.size()));
  return moebius_of_sizes(sizes);
}

WindingCycles winding_cycles(const SetPartition& p)
{
  const int n = p.size();
  if (n < 1) throw std::invalid_argument("winding cycles need n >= 1");
  const auto next = block_successor(p);
  // (pi_fat o c)(x) = next(x - 1), with 1 - 1 read as n
  auto step = [&](int x) { return next[static_cast<std::size_t>(x == 1 ? n : x - 1)]; };
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  WindingCycles cycles;
  for (int x = 1; x <= n; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    WindingCycle cyc;
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = step(y)) {
      seen[static_cast<std::size_t>(y)] = true;
      cyc.vertices.push_back(y);
    }
    const auto len = cyc.vertices.size();
    for (std::size_t i = 0; i < len; ++i)
      if (cyc.vertices[i] <= cyc.vertices[(i + 1) % len]) ++cyc.winds;
    cyc.k = static_cast<int>(len) - cyc.winds;
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

int genus(const SetPartition& p)
{
  if (p.size() < 1) throw std::invalid_argument("genus needs n >= 1");
  const int twice = p.size() + 1 - p.block_count() - static_cast<int>(winding_cycles(p).size());
  if (twice < 0 || twice % 2) throw std::logic_error("genus formula produced " + std::to_string(twice) + "/2 for " + to_string(p));
  return twice / 2;
}

int genus(const PairPartition& p) { return genus(p.as_set_partition()); }

bool is_evercrossing(const SetPartition& p)
{
  const int n = p.size();
  for (int a = 1; a <= n; ++a)
    for (int c = a + 1; c <= n; ++c) {
      if (!p.connects(a, c)) continue;
      std::vector<char> inside(static_cast<std::size_t>(p.block_count()), 0), outside(inside.size(), 0);
      for (int x = 1; x <= n; ++x) {
        if (x == a || x == c) continue;
        (x > a && x < c ? inside : outside)[static_cast<std::size_t>(p.block_of(x))] = 1;
      }
      const auto own = static_cast<std::size_t>(p.block_of(a));
      bool crossed = false;
      for (std::size_t b = 0; b < inside.size() && !crossed; ++b) crossed = b != own && inside[b] && outside[b];
      if (!crossed) return false;
    }
  return true;
}

bool is_evercrossing(const PairPartition& p) { return is_evercrossing(p.as_set_partition()); }

Integer free_index(const SetPartition& p)
{
  const int n = p.size();
  Integer total = 0;
  std::vector<int> sizes;
  for_each_nc_refinement(n, &p, [&](const std::vector<int>& ids, int blocks) {
    sizes.assign(static_cast<std::size_t>(blocks), 0);
    for (int id : ids) ++sizes[static_cast<std::size_t>(id)];
    total += moebius_of_sizes(sizes);
  });
  return total;
}

Integer free_index(const PairPartition& p) { return free_index(p.as_set_partition()); }

Blocks relative_kreweras(const Blocks& rho, std::span<const int> other)
{
  const int m = static_cast<int>(other.size());
  UnionFind uf(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const int a = other[static_cast<std::size_t>(i)], c = other[static_cast<std::size_t>(j)];
      bool separated = false;
      for (const auto& b : rho) {
        bool in = false, out = false;
        for (int x : b) (x > a && x < c ? in : out) = true;
        if (in && out) {
          separated = true;
          break;
        }
      }
      if (!separated) uf.unite(i, j);
    }
  Blocks result;
  std::vector<int> root_to_block(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    auto& slot = root_to_block[static_cast<std::size_t>(uf.find(i))];
    if (slot < 0) {
      slot = static_cast<int>(result.size());
      result.emplace_back();
    }
    result[static_cast<std::size_t>(slot)].push_back(other[static_cast<std::size_t>(i)]);
  }
  return result;
}

std::vector<std::vector<int>> admissible_splits(const SetPartition& p)
{
  const int r = p.block_count();
  if (r > 20) throw std::out_of_range("too many blocks to enumerate splits");
  std::vector<std::vector<char>> crossing(static_cast<std::size_t>(r), std::vector<char>(static_cast<std::size_t>(r), 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && blocks_cross(p.blocks()[static_cast<std::size_t>(i)], p.blocks()[static_cast<std::size_t>(j)]))
        crossing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> chosen;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) chosen.push_back(i);
    bool ok = true;
    for (std::size_t i = 0; i < chosen.size() && ok; ++i)
      for (std::size_t j = i + 1; j < chosen.size() && ok; ++j)
        ok = !crossing[static_cast<std::size_t>(chosen[i])][static_cast<std::size_t>(chosen[j])];
    if (ok) out.push_back(std::move(chosen));
  }
  return out;
}

Integer free_index_by_split(const SetPartition& p, std::span<const int> sigma_blocks)
{
  const int n = p.size();
  std::vector<char> in_sigma(static_cast<std::size_t>(p.block_count()), 0);
  for (int s : sigma_blocks) {
    if (s < 0 || s >= p.block_count()) throw std::out_of_range("split names a block that does not exist");
    in_sigma[static_cast<std::size_t>(s)] = 1;
  }
  for (std::size_t i = 0; i < sigma_blocks.size(); ++i)
    for (std::size_t j = i + 1; j < sigma_blocks.size(); ++j)
      if (blocks_cross(p.blocks()[static_cast<std::size_t>(sigma_blocks[i])], p.blocks()[static_cast<std::size_t>(sigma_blocks[j])]))
        throw std::invalid_argument("split blocks must form a non-crossing partition");

  std::vector<int> s_labels, t_labels;
  for (int x = 1; x <= n; ++x) (in_sigma[static_cast<std::size_t>(p.block_of(x))] ? s_labels : t_labels).push_back(x);
  const SetPartition tau = restrict_to(p, t_labels);

  Integer total = 0;
  std::vector<int> sizes;
  for_each_nc_refinement(tau.size(), &tau, [&](const std::vector<int>& ids, int blocks) {
    Blocks rho(static_cast<std::size_t>(blocks));
    for (std::size_t i = 0; i < ids.size(); ++i) rho[static_cast<std::size_t>(ids[i])].push_back(t_labels[i]);
    const Blocks kappa = relative_kreweras(rho, s_labels);
    // sigma meet kappa is trivial iff no two elements share both a sigma block and a kappa block
    for (const auto& kb : kappa)
      for (std::size_t i = 0; i < kb.size(); ++i)
        for (std::size_t j = i + 1; j < kb.size(); ++j)
          if (p.connects(kb[i], kb[j])) return;
    sizes.clear();
    for (const auto& b : rho) sizes.push_back(static_cast<int>(b.size()));
    total += moebius_of_sizes(sizes);
  });
  return total;
}

}  // namespace kerovkit
