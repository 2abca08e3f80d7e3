#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kerovkit/simplifier.hpp"

#include <set>

using namespace kerovkit;

namespace {

PairPartition pairs(int m, std::vector<std::pair<int, int>> p) { return PairPartition(m, std::move(p)); }

std::vector<PairPartition> all_pair_partitions(int m)
{
  std::vector<PairPartition> out;
  std::vector<std::pair<int, int>> current;
  std::vector<bool> used(static_cast<std::size_t>(m + 1), false);
  std::function<void()> rec = [&] {
    int first = 1;
    while (first <= m && used[static_cast<std::size_t>(first)]) ++first;
    if (first > m) {
      out.emplace_back(m, current);
      return;
    }
    used[static_cast<std::size_t>(first)] = true;
    for (int x = first + 1; x <= m; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = true;
      current.emplace_back(first, x);
      rec();
      current.pop_back();
      used[static_cast<std::size_t>(x)] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
  };
  rec();
  return out;
}

}  // namespace

TEST_CASE("strip_trivial")
{
  CHECK(strip_trivial(parse_partition("1,3|2,5,7|4|6")) == parse_partition("1,3|2,4,5"));
  CHECK(strip_trivial(SetPartition::trivial(5)).size() == 0);
  CHECK(strip_trivial(parse_partition("1,3|2,4")) == parse_partition("1,3|2,4"));
}

TEST_CASE("fatten_step delegates to fat")
{
  for (const auto& p : set_partitions(5)) CHECK(fatten_step(p) == fat(p));
}

TEST_CASE("collapse_parallel examples")
{
  CHECK(collapse_parallel(pairs(4, {{1, 4}, {2, 3}})) == pairs(2, {{1, 2}}));
  CHECK(collapse_parallel(pairs(4, {{1, 3}, {2, 4}})) == pairs(4, {{1, 3}, {2, 4}}));
  CHECK(collapse_parallel(pairs(2, {{1, 2}})) == pairs(2, {{1, 2}}));
  // three parallel chords collapse to one
  CHECK(collapse_parallel(pairs(6, {{1, 6}, {2, 5}, {3, 4}})) == pairs(2, {{1, 2}}));
  CHECK(parallel_moves(pairs(4, {{1, 3}, {2, 4}})).empty());
}

TEST_CASE("rotation canonical form and mirror")
{
  const auto p = pairs(6, {{1, 4}, {2, 6}, {3, 5}});
  const auto c = rotation_canonical(p);
  for (int s = 0; s < 6; ++s) CHECK(rotation_canonical(rotate(p, s)) == c);
  CHECK(mirror(mirror(p)) == p);
}

TEST_CASE("simplify examples")
{
  CHECK(simplify(parse_partition("1,3|2,4")) == pairs(4, {{1, 3}, {2, 4}}));
  CHECK(simplify(SetPartition::trivial(4)).points() == 0);
  CHECK(simplify(parse_partition("1,4|2,5|3,6")) == pairs(6, {{1, 4}, {2, 5}, {3, 6}}));
}

TEST_CASE("non-crossing partitions reduce to non-crossing pair partitions")
{
  // only partitions without non-trivial blocks reduce to the empty object;
  // a block {a,b} for instance leaves a single chord
  CHECK(simplify(parse_partition("1,2")) == pairs(2, {{1, 2}}));
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : noncrossing_partitions(n)) {
      const auto r = simplify(p);
      CHECK(is_noncrossing(r));
      CHECK((r.points() == 0) == p.is_trivial());
    }
}

TEST_CASE("genus is preserved at every step for n <= 8")
{
  for (int n = 1; n <= 8; ++n)
    for_each_partition(n, [](const SetPartition& p) {
      const int g = genus_or_zero(p);
      for (const auto& s : simplify_trace(p)) CHECK(genus_or_zero(s) == g);
    });
}

TEST_CASE("free index is preserved at every step for evercrossing partitions of genus <= 2")
{
  for (int n = 1; n <= 8; ++n)
    for_each_partition(n, [](const SetPartition& p) {
      if (!is_evercrossing(p) || genus_or_zero(p) > 2) return;
      const Integer index = free_index(p);
      for (const auto& s : simplify_trace(p)) CHECK(free_index(s) == index);
    });
}

TEST_CASE("fattening changes the free index of a genus-three partition")
{
  const auto p = parse_partition("1,3,5,7|2,4,6,8");
  CHECK(is_evercrossing(p));
  CHECK(genus(p) == 3);
  CHECK(free_index(p) == -5);
  CHECK(free_index(fatten_step(p)) == -1);
  // fattening only the first block
  CHECK(free_index(parse_partition("2,4|5,7|8,10|1,11|3,6,9,12")) == -3);
}

TEST_CASE("evercrossing is preserved and the size bound holds")
{
  for (int n = 1; n <= 8; ++n)
    for_each_partition(n, [](const SetPartition& p) {
      if (!is_evercrossing(p)) return;
      const auto r = simplify(p);
      CHECK(is_evercrossing(r));
      const int g = genus_or_zero(p);
      if (g >= 1) CHECK(r.points() <= 12 * g - 6);
    });
}

TEST_CASE("the size bound needs evercrossing input")
{
  const auto p = parse_partition("1,3|2,4|5,6|7,8");
  CHECK_FALSE(is_evercrossing(p));
  CHECK(genus(p) == 1);
  CHECK(simplify(p).points() > 6);
}

TEST_CASE("genus census")
{
  const auto c1 = genus_census(1, 8, 2);
  REQUIRE(c1.classes.size() == 2);
  CHECK(c1.classes[0].reduced == pairs(4, {{1, 3}, {2, 4}}));
  CHECK(c1.classes[0].free_index == -1);
  CHECK(c1.classes[1].reduced == pairs(6, {{1, 4}, {2, 5}, {3, 6}}));
  CHECK(c1.classes[1].free_index == -2);
  CHECK(c1.mirror_classes == 2);
  const auto c0 = genus_census(0, 6);
  REQUIRE(c0.classes.size() == 1);
  CHECK(c0.classes[0].reduced.points() == 0);
  CHECK(c0.classes[0].free_index == 1);
}

TEST_CASE("parallel-chord moves are confluent on pair partitions with at most 10 points")
{
  for (int m = 2; m <= 10; m += 2)
    for (const auto& pp : all_pair_partitions(m)) {
      const auto outcomes = collapse_outcomes(pp);
      REQUIRE(outcomes.size() == 1);
      CHECK(outcomes.front() == collapse_parallel(pp));
    }
}
