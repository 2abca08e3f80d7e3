#include "kerovkit/simplifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace kerovkit {

SetPartition strip_trivial(const SetPartition& p)
{
  std::vector<int> keep;
  for (const auto& b : p.blocks())
    if (b.size() > 1) keep.insert(keep.end(), b.begin(), b.end());
  std::sort(keep.begin(), keep.end());
  return restrict_to(p, keep);
}

PairPartition fatten_step(const SetPartition& p) { return fat(p); }

std::vector<int> parallel_moves(const PairPartition& pp)
{
  const int m = pp.points();
  std::vector<int> out;
  auto next = [m](int x) { return x % m + 1; };
  for (int i = 1; i <= m; ++i) {
    const int i2 = next(i);
    const int j = pp.partner(i);
    const int j2 = pp.partner(i2);
    if (next(j2) != j) continue;
    if (i2 == j2 || i == j2 || i2 == j) continue;
    out.push_back(i);
  }
  return out;
}

PairPartition apply_parallel_move(const PairPartition& pp, int i)
{
  const int m = pp.points();
  const int gone_a = i % m + 1;
  const int gone_b = pp.partner(gone_a);
  std::vector<int> label(static_cast<std::size_t>(m + 1), 0);
  int next_label = 0;
  for (int x = 1; x <= m; ++x)
    if (x != gone_a && x != gone_b) label[static_cast<std::size_t>(x)] = ++next_label;
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : pp.pairs())
    if (a != gone_a && a != gone_b) pairs.emplace_back(label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(b)]);
  return PairPartition(m - 2, std::move(pairs));
}

PairPartition rotation_canonical(const PairPartition& pp)
{
  PairPartition best = pp;
  for (int s = 1; s < pp.points(); ++s) {
    auto r = rotate(pp, s);
    if (r.pairs() < best.pairs()) best = std::move(r);
  }
  return best;
}

PairPartition mirror(const PairPartition& pp)
{
  const int m = pp.points();
  auto pairs = pp.pairs();
  for (auto& [a, b] : pairs) {
    a = m + 1 - a;
    b = m + 1 - b;
  }
  return PairPartition(m, std::move(pairs));
}

PairPartition collapse_parallel(const PairPartition& pp)
{
  PairPartition current = pp;
  for (auto moves = parallel_moves(current); !moves.empty(); moves = parallel_moves(current))
    current = apply_parallel_move(current, moves.front());
  return rotation_canonical(current);
}

std::vector<PairPartition> collapse_outcomes(const PairPartition& pp)
{
  std::set<PairPartition> results;
  std::set<PairPartition> visited;
  std::function<void(const PairPartition&)> explore = [&](const PairPartition& state) {
    const auto key = rotation_canonical(state);
    if (!visited.insert(key).second) return;
    const auto moves = parallel_moves(state);
    if (moves.empty()) {
      results.insert(key);
      return;
    }
    for (int i : moves) explore(apply_parallel_move(state, i));
  };
  explore(pp);
  return {results.begin(), results.end()};
}

PairPartition simplify(const SetPartition& p) { return collapse_parallel(fatten_step(strip_trivial(p))); }

std::vector<SetPartition> simplify_trace(const SetPartition& p)
{
  std::vector<SetPartition> out{p};
  const auto stripped = strip_trivial(p);
  out.push_back(stripped);
  PairPartition current = fatten_step(stripped);
  out.push_back(current.as_set_partition());
  for (auto moves = parallel_moves(current); !moves.empty(); moves = parallel_moves(current)) {
    current = apply_parallel_move(current, moves.front());
    out.push_back(current.as_set_partition());
  }
  return out;
}

int genus_or_zero(const SetPartition& p) { return p.size() == 0 ? 0 : genus(p); }

Census genus_census(int g, int n_max, unsigned threads)
{
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::map<PairPartition, long> found;
  std::mutex mutex;
  for (int n = 0; n <= n_max; ++n) {
    const auto all = set_partitions(n);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        std::map<PairPartition, long> local;
        for (std::size_t i = w; i < all.size(); i += threads) {
          const auto& p = all[i];
          if (genus_or_zero(p) != g || !is_evercrossing(p)) continue;
          ++local[simplify(p)];
        }
        std::lock_guard lock(mutex);
        for (const auto& [pp, count] : local) found[pp] += count;
      });
    for (auto& t : pool) t.join();
  }
  Census census;
  census.genus = g;
  census.n_max = n_max;
  std::set<PairPartition> mirror_keys;
  for (const auto& [pp, count] : found) {
    census.classes.push_back({pp, free_index(pp.as_set_partition()), count});
    mirror_keys.insert(std::min(pp, rotation_canonical(mirror(pp))));
  }
  std::sort(census.classes.begin(), census.classes.end(), [](const CensusEntry& a, const CensusEntry& b) {
    return a.reduced.points() != b.reduced.points() ? a.reduced.points() < b.reduced.points() : a.reduced < b.reduced;
  });
  census.mirror_classes = mirror_keys.size();
  return census;
}

}  // namespace kerovkit
