#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kerovkit/partition.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace kerovkit;

namespace {

const SetPartition kCrossing = parse_partition("1,3|2,5,7|4|6");
const SetPartition kNoncrossing = parse_partition("1|2,5,6|3,4");

// Union of p (unprimed copy) and kappa (primed copy) on 2n interleaved points.
SetPartition interleave(const SetPartition& p, const SetPartition& kappa)
{
  Blocks blocks;
  for (const auto& b : p.blocks()) {
    Block bb;
    for (int x : b) bb.push_back(2 * x - 1);
    blocks.push_back(bb);
  }
  for (const auto& b : kappa.blocks()) {
    Block bb;
    for (int x : b) bb.push_back(2 * x);
    blocks.push_back(bb);
  }
  return SetPartition(2 * p.size(), blocks);
}

SetPartition kreweras_brute(const SetPartition& p)
{
  std::vector<SetPartition> valid;
  for (const auto& kappa : oracle::partitions_by_insertion(p.size()))
    if (!oracle::crossing_by_definition(kappa) && !oracle::crossing_by_definition(interleave(p, kappa))) valid.push_back(kappa);
  for (const auto& top : valid)
    if (std::all_of(valid.begin(), valid.end(), [&](const SetPartition& k) { return k.finer_than(top); })) return top;
  FAIL("no maximum found");
  return {};
}

}  // namespace

TEST_CASE("parse_partition canonicalizes and validates")
{
  CHECK(kCrossing.blocks() == Blocks{{1, 3}, {2, 5, 7}, {4}, {6}});
  CHECK(kCrossing.size() == 7);
  CHECK(parse_partition("1").blocks() == Blocks{{1}});
  CHECK(parse_partition(" 6 | 4 |7,5,2| 3,1 ") == kCrossing);
  CHECK(to_string(kCrossing) == "1,3|2,5,7|4|6");
  CHECK_THROWS_AS(parse_partition("1,2|1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1,-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1,x"), std::invalid_argument);
}

TEST_CASE("canonical form is idempotent")
{
  for (const auto& p : set_partitions(6)) {
    CHECK(parse_partition(to_string(p)) == p);
    CHECK(SetPartition(p.size(), p.blocks()) == p);
  }
}

TEST_CASE("enumeration counts")
{
  CHECK(set_partitions(4).size() == 15);
  CHECK(noncrossing_partitions(4).size() == 14);
  CHECK(set_partitions(0).size() == 1);
  CHECK(set_partitions(0).front().size() == 0);
  const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 0; n <= 8; ++n) {
    auto all = set_partitions(n);
    CHECK(all.size() == bell[static_cast<std::size_t>(n)]);
    CHECK(std::set<SetPartition>(all.begin(), all.end()).size() == all.size());
    auto nc = noncrossing_partitions(n);
    CHECK(nc.size() == catalan(n).get_ui());
    CHECK(std::set<SetPartition>(nc.begin(), nc.end()).size() == nc.size());
    for (const auto& p : nc) CHECK_FALSE(oracle::crossing_by_definition(p));
  }
}

TEST_CASE("is_noncrossing agrees with the four-point definition")
{
  CHECK_FALSE(is_noncrossing(kCrossing));
  CHECK(is_noncrossing(kNoncrossing));
  CHECK(is_noncrossing(SetPartition::trivial(7)));
  for (int n = 1; n <= 8; ++n)
    for_each_partition(n, [](const SetPartition& p) { CHECK(is_noncrossing(p) == !oracle::crossing_by_definition(p)); });
}

TEST_CASE("fat partition")
{
  // 1' -> 2, 3 -> 5 and so on in the 2n encoding
  const auto f = fat(kCrossing);
  CHECK(f.points() == 14);
  const std::vector<std::pair<int, int>> expected{{1, 6}, {2, 5}, {3, 14}, {4, 9}, {7, 8}, {10, 13}, {11, 12}};
  CHECK(f.pairs() == expected);
  CHECK(fat(parse_partition("1")).pairs() == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(fat(parse_partition("1,2")).pairs() == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}});
}

TEST_CASE("fat is a bijection from NC(n) onto non-crossing pair partitions of 2n points")
{
  for (int n = 1; n <= 6; ++n) {
    std::set<PairPartition> images;
    for (const auto& p : noncrossing_partitions(n)) {
      const auto f = fat(p);
      CHECK(is_noncrossing(f));
      images.insert(f);
    }
    // |NCP(2n)| = Catalan(n)
    CHECK(images.size() == catalan(n).get_ui());
  }
}

TEST_CASE("Kreweras complement")
{
  CHECK(kreweras(kNoncrossing) == parse_partition("1,6|2,4|3|5"));
  CHECK(kreweras(SetPartition::trivial(5)) == SetPartition::one_block(5));
  CHECK(kreweras(SetPartition::one_block(5)) == SetPartition::trivial(5));
  CHECK_THROWS_AS(kreweras(kCrossing), std::invalid_argument);
  CHECK_THROWS_AS(kreweras_inverse(kCrossing), std::invalid_argument);
  CHECK(kreweras_brute(kNoncrossing) == parse_partition("1,6|2,4|3|5"));
}

TEST_CASE("Kreweras complement matches the maximal-complement characterization")
{
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : noncrossing_partitions(n)) CHECK(kreweras(p) == kreweras_brute(p));
}

TEST_CASE("Kreweras laws for n <= 9")
{
  for (int n = 1; n <= 9; ++n)
    for (const auto& p : noncrossing_partitions(n)) {
      const auto comp = kreweras(p);
      const auto inv = kreweras_inverse(p);
      CHECK(is_noncrossing(comp));
      CHECK(kreweras_inverse(comp) == p);
      CHECK(kreweras(inv) == p);
      CHECK(fat(comp) == rotate_fat(fat(p)));
      bool rotation = false;
      for (int s = 0; s < n && !rotation; ++s) rotation = rotate(inv, s) == comp;
      CHECK(rotation);
    }
}

TEST_CASE("rotate")
{
  CHECK(rotate(parse_partition("1,2|3"), 1) == parse_partition("2,3|1"));
  for (const auto& p : set_partitions(6)) {
    CHECK(rotate(p, 0) == p);
    for (int k = 0; k < 6; ++k) CHECK(rotate(rotate(p, k), 6 - k) == p);
  }
}

TEST_CASE("moebius")
{
  CHECK(moebius(SetPartition::trivial(5)) == 1);
  CHECK(moebius(parse_partition("1,2")) == -1);
  CHECK(moebius(parse_partition("1,2,3")) == 2);
  CHECK(moebius(parse_partition("1,2,3,4|5,6")) == 5);
}

TEST_CASE("Moebius sums over NC intervals vanish except at the bottom")
{
  for (int n = 1; n <= 8; ++n) {
    const auto nc = noncrossing_partitions(n);
    for (const auto& sigma : nc) {
      Integer total = 0;
      for (const auto& rho : nc)
        if (rho.finer_than(sigma)) total += moebius(rho);
      CHECK(total == (sigma.is_trivial() ? 1 : 0));
    }
  }
}

TEST_CASE("winding cycles")
{
  const auto w = winding_cycles(kCrossing);
  REQUIRE(w.size() == 2);
  CHECK(w[0].vertices == std::vector<int>{1, 2, 3, 5, 4});
  CHECK(w[0].k == 2);
  CHECK(w[1].vertices == std::vector<int>{6, 7});
  CHECK(w[1].k == 1);

  const auto pair = winding_cycles(parse_partition("1,2"));
  bool fixed_point = std::any_of(pair.begin(), pair.end(), [](const WindingCycle& c) { return c.vertices == std::vector<int>{2} && c.k == 0; });
  CHECK(fixed_point);

  for (int n = 1; n <= 8; ++n) {
    const auto t = winding_cycles(SetPartition::trivial(n));
    REQUIRE(t.size() == 1);
    CHECK(t[0].vertices.size() == static_cast<std::size_t>(n));
    CHECK(t[0].k == n - 1);
  }
  CHECK_THROWS_AS(winding_cycles(SetPartition()), std::invalid_argument);
}

TEST_CASE("genus examples")
{
  CHECK(genus(kNoncrossing) == 0);
  CHECK(genus(parse_partition("1,3|2,4")) == 1);
  CHECK(genus(parse_partition("1,4|2,5|3,6")) == 1);
  CHECK(genus(kCrossing) == 1);
  CHECK_THROWS_AS(genus(SetPartition()), std::invalid_argument);
}

TEST_CASE("degree and genus laws for n <= 9")
{
  for (int n = 1; n <= 9; ++n)
    for_each_partition(n, [n](const SetPartition& p) {
      const auto cycles = winding_cycles(p);
      const int t = static_cast<int>(cycles.size());
      int degree = 0;
      std::vector<bool> covered(static_cast<std::size_t>(n + 1), false);
      for (const auto& c : cycles) {
        CHECK(c.k >= 0);
        degree += c.k + 1;
        for (int v : c.vertices) {
          CHECK_FALSE(covered[static_cast<std::size_t>(v)]);
          covered[static_cast<std::size_t>(v)] = true;
        }
      }
      const int g = genus(p);
      CHECK(g >= 0);
      CHECK(degree == p.block_count() + t - 1);
      CHECK(degree == n - 2 * g);
      CHECK((g == 0) == is_noncrossing(p));
    });
}

TEST_CASE("evercrossing")
{
  CHECK_FALSE(is_evercrossing(kCrossing));
  CHECK(is_evercrossing(parse_partition("1,3|2,4")));
  CHECK(is_evercrossing(SetPartition::trivial(6)));
  CHECK_FALSE(is_evercrossing(kNoncrossing));
}

TEST_CASE("free index examples")
{
  CHECK(free_index(SetPartition::trivial(6)) == 1);
  CHECK(free_index(parse_partition("1,3|2,4")) == -1);
  CHECK(free_index(parse_partition("1,4|2,5|3,6")) == -2);
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : noncrossing_partitions(n))
      if (!p.is_trivial()) CHECK(free_index(p) == 0);
}

TEST_CASE("free index agrees with brute force for n <= 6")
{
  for (int n = 1; n <= 6; ++n)
    for_each_partition(n, [](const SetPartition& p) { CHECK(free_index(p) == oracle::free_index_brute(p)); });
}

TEST_CASE("relative Kreweras complement is the maximal compatible partition")
{
  // rho lives on the labels of a subset T, the complement S receives kappa
  for (int n = 2; n <= 7; ++n)
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<int> t_labels, s_labels;
      for (int x = 1; x <= n; ++x) ((mask >> (x - 1)) & 1u ? t_labels : s_labels).push_back(x);
      for (const auto& local : noncrossing_partitions(static_cast<int>(t_labels.size()))) {
        Blocks rho;
        for (const auto& b : local.blocks()) {
          Block bb;
          for (int x : b) bb.push_back(t_labels[static_cast<std::size_t>(x - 1)]);
          rho.push_back(bb);
        }
        Blocks got = relative_kreweras(rho, s_labels);
        // brute force: maximum over partitions kappa of S with rho u kappa non-crossing
        std::vector<SetPartition> valid;
        for (const auto& kl : oracle::partitions_by_insertion(static_cast<int>(s_labels.size()))) {
          Blocks all = rho;
          for (const auto& b : kl.blocks()) {
            Block bb;
            for (int x : b) bb.push_back(s_labels[static_cast<std::size_t>(x - 1)]);
            all.push_back(bb);
          }
          if (!oracle::crossing_by_definition(SetPartition(n, all))) valid.push_back(kl);
        }
        const SetPartition* top = nullptr;
        for (const auto& k : valid)
          if (std::all_of(valid.begin(), valid.end(), [&](const SetPartition& o) { return o.finer_than(k); })) top = &k;
        REQUIRE(top != nullptr);
        Blocks expected;
        for (const auto& b : top->blocks()) {
          Block bb;
          for (int x : b) bb.push_back(s_labels[static_cast<std::size_t>(x - 1)]);
          expected.push_back(bb);
        }
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        CHECK(got == expected);
      }
      if (n > 6) break;  // n = 7 only for the first mask, enough to exercise the larger size
    }
}

TEST_CASE("free index through every admissible split, n <= 7")
{
  for (int n = 1; n <= 7; ++n)
    for_each_partition(n, [](const SetPartition& p) {
      const Integer direct = free_index(p);
      for (const auto& split : admissible_splits(p)) CHECK(free_index_by_split(p, split) == direct);
    });
  CHECK_THROWS_AS(free_index_by_split(parse_partition("1,3|2,4"), std::vector<int>{0, 1}), std::invalid_argument);
}

TEST_CASE("non-evercrossing partitions have free index zero, and the converse fails")
{
  bool witness = false;
  for (int n = 1; n <= 8; ++n)
    for_each_partition(n, [&](const SetPartition& p) {
      const bool ever = is_evercrossing(p);
      const Integer index = free_index(p);
      if (!ever) CHECK(index == 0);
      if (ever && index == 0) witness = true;
    });
  CHECK(witness);
}

TEST_CASE("pair partition validation")
{
  CHECK_THROWS_AS(PairPartition(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(PairPartition(4, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(PairPartition(4, {{1, 2}}), std::invalid_argument);
  const PairPartition p(4, {{4, 2}, {3, 1}});
  CHECK(p.pairs() == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  CHECK(p.partner(4) == 2);
  CHECK(genus(p) == 1);
  CHECK(free_index(p) == -1);
}
