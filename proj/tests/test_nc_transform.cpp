#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kerovkit/nc_transform.hpp"
#include "kerovkit/partition.hpp"
#include "oracles.hpp"

#include <random>

using namespace kerovkit;

namespace {

using Seq = ValueSequence<Rational>;

Seq seq(std::vector<Rational> v) { return Seq(std::move(v)); }

// Cumulants by recursion on the defining moment-cumulant relation, using
// non-crossing partitions found by the four-point test.
Seq cumulants_by_recursion(const Seq& m)
{
  Seq r;
  for (int n = 1; n <= m.size(); ++n) {
    Rational rest = 0;
    for (const auto& p : oracle::partitions_by_insertion(n)) {
      if (p.block_count() == 1 || oracle::crossing_by_definition(p)) continue;
      Rational prod = 1;
      for (const auto& b : p.blocks()) prod *= r[static_cast<int>(b.size())];
      rest += prod;
    }
    r.push_back(m[n] - rest);
  }
  return r;
}

Seq random_sequence(std::mt19937& rng, int n)
{
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Seq out;
  for (int i = 0; i < n; ++i) out.push_back(ratio(num(rng), den(rng)));
  return out;
}

}  // namespace

TEST_CASE("cumulants of simple measures")
{
  // symmetric Bernoulli on -1, +1
  const auto r = cumulants_from_moments(seq({0, 1, 0, 1, 0, 1}));
  CHECK(r == seq({0, 1, 0, -1, 0, 2}));
  const Rational c(3, 2);
  Seq point;
  Rational power = 1;
  for (int i = 1; i <= 7; ++i) point.push_back(power *= c);
  CHECK(cumulants_from_moments(point) == seq({c, 0, 0, 0, 0, 0, 0}));
  CHECK(cumulants_from_moments(seq({0, 0, 0, 0})) == seq({0, 0, 0, 0}));
}

TEST_CASE("moments of simple cumulant sequences")
{
  const auto semicircle = moments_from_cumulants(seq({0, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
  for (int n = 1; n <= 10; ++n) CHECK(semicircle[n] == (n % 2 ? Integer(0) : catalan(n / 2)));
  const Rational c(-2, 3);
  const auto m = moments_from_cumulants(seq({c, 0, 0, 0, 0}));
  Rational power = 1;
  for (int n = 1; n <= 5; ++n) CHECK(m[n] == (power *= c));
}

TEST_CASE("transforms agree with the recursive definition")
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const auto m = random_sequence(rng, 7);
    CHECK(cumulants_from_moments(m) == cumulants_by_recursion(m));
  }
}

TEST_CASE("round trips")
{
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_sequence(rng, 8);
    CHECK(moments_from_cumulants(cumulants_from_moments(m)) == m);
    CHECK(cumulants_from_moments(moments_from_cumulants(m)) == m);
  }
}

TEST_CASE("dilation homogeneity")
{
  std::mt19937 rng(3);
  const Rational p(-5, 2);
  for (int trial = 0; trial < 5; ++trial) {
    const auto m = random_sequence(rng, 8);
    Seq scaled;
    Rational power = 1;
    for (int n = 1; n <= 8; ++n) scaled.push_back(m[n] * (power *= p));
    const auto r = cumulants_from_moments(m);
    const auto rs = cumulants_from_moments(scaled);
    power = 1;
    for (int n = 1; n <= 8; ++n) CHECK(rs[n] == r[n] * (power *= p));
  }
}

TEST_CASE("shape tables")
{
  for (int n = 1; n <= 9; ++n) {
    Integer total = 0;
    for (const auto& s : nc_shapes(n)) total += s.count;
    CHECK(total == catalan(n));
  }
  CHECK_THROWS_AS(nc_shapes(0), std::out_of_range);
  CHECK_THROWS_AS(nc_shapes(nc_cap() + 1), std::out_of_range);
  CHECK_THROWS_AS(set_nc_cap(0), std::invalid_argument);
}
