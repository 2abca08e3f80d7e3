#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kerovkit/formal_sum.hpp"
#include "oracles.hpp"

using namespace kerovkit;

namespace {

// sigma occurs in the rho-ordered product iff it lies above K(rho) and
// restricts to exactly the given factor on every block of rho.
FormalSum rho_product_brute(const SetPartition& rho, const std::vector<SetPartition>& factors)
{
  const auto base = kreweras(rho);
  FormalSum out(rho.size());
  for (const auto& sigma : oracle::partitions_by_insertion(rho.size())) {
    if (!base.finer_than(sigma)) continue;
    bool ok = true;
    for (int s = 0; s < rho.block_count() && ok; ++s) {
      const auto& labels = rho.blocks()[static_cast<std::size_t>(s)];
      ok = restrict_to(sigma, labels) == factors[static_cast<std::size_t>(s)];
    }
    if (ok) out.add(sigma, 1);
  }
  return out;
}

}  // namespace

TEST_CASE("formal sum arithmetic")
{
  const auto a = parse_partition("1,2|3");
  const auto b = parse_partition("1|2|3");
  FormalSum x(a, 2);
  x.add(b, 3);
  FormalSum y(a, -2);
  const auto z = x + y;
  CHECK(z.term_count() == 1);
  CHECK(z.coefficient(b) == 3);
  CHECK(z.coefficient(a) == 0);
  CHECK((x * Integer(0)).empty());
  CHECK(scale(x, 2) == x + x);
  CHECK(add(x, y) == z);
  CHECK((x - x).empty());
  CHECK_THROWS_AS(x.add(parse_partition("1,2"), 1), std::invalid_argument);
}

TEST_CASE("three-factor product example")
{
  const auto rho = parse_partition("1,2,7,8|3,4,5,6");
  const std::vector<SetPartition> factors{
      factor_from_ambient(rho, 0, parse_blocks("1,7|2|8")),
      factor_from_ambient(rho, 1, parse_blocks("3,5|4,6")),
  };
  FormalSum expected(8);
  expected.add(parse_partition("1,7|2,4,6|3,5|8"), 1);
  expected.add(parse_partition("1,7|2,4,6|3,5,8"), 1);
  expected.add(parse_partition("1,3,5,7|2,4,6|8"), 1);
  CHECK(rho_product(rho, std::span<const SetPartition>(factors)) == expected);
  CHECK(rho_product_brute(rho, factors) == expected);
}

TEST_CASE("factor_from_ambient validation")
{
  const auto rho = parse_partition("1,2,7,8|3,4,5,6");
  CHECK_THROWS_AS(factor_from_ambient(rho, 0, parse_blocks("1,7|2")), std::invalid_argument);
  CHECK_THROWS_AS(factor_from_ambient(rho, 0, parse_blocks("1,3|2,7,8")), std::invalid_argument);
  CHECK_THROWS_AS(factor_from_ambient(rho, 2, parse_blocks("1")), std::out_of_range);
}

TEST_CASE("rho-ordered product agrees with the restriction characterization, n <= 6")
{
  for (int n = 1; n <= 6; ++n)
    for (const auto& rho : noncrossing_partitions(n)) {
      std::vector<std::vector<SetPartition>> choices;
      for (const auto& b : rho.blocks()) choices.push_back(set_partitions(static_cast<int>(b.size())));
      std::vector<SetPartition> pick(choices.size());
      std::function<void(std::size_t)> rec = [&](std::size_t s) {
        if (s == choices.size()) {
          CHECK(rho_product(rho, std::span<const SetPartition>(pick)) == rho_product_brute(rho, pick));
          return;
        }
        for (const auto& p : choices[s]) {
          pick[s] = p;
          rec(s + 1);
        }
      };
      rec(0);
    }
  CHECK_THROWS_AS(rho_product(parse_partition("1,3|2,4"), std::vector<SetPartition>(2, SetPartition::trivial(2))), std::invalid_argument);
}

TEST_CASE("product with one block is the identity")
{
  for (const auto& p : set_partitions(5)) {
    const std::vector<SetPartition> f{p};
    CHECK(rho_product(SetPartition::one_block(5), std::span<const SetPartition>(f)) == FormalSum(p));
  }
}

TEST_CASE("moment element: closed form equals product form, n <= 7")
{
  for (int n = 1; n <= 7; ++n)
    for (const auto& rho : noncrossing_partitions(n)) CHECK(moment_pp_rho(rho) == moment_pp_rho_product_form(rho));
  CHECK(moment_pp_rho(SetPartition::one_block(4)) == moment_pp(4));
}

TEST_CASE("cumulant element")
{
  const auto k2 = cumulant_pp(2);
  CHECK(k2.term_count() == 1);
  CHECK(k2.coefficient(parse_partition("1|2")) == 1);
  const auto k4 = cumulant_pp(4);
  CHECK(k4.coefficient(parse_partition("1,3|2,4")) == -1);
  CHECK(k4.coefficient(SetPartition::trivial(4)) == 1);
  CHECK(k4.coefficient(parse_partition("1,2|3|4")) == 0);
  for (int n = 1; n <= 7; ++n) {
    const auto k = cumulant_pp(n);
    CHECK(k == cumulant_pp_by_moebius(n));
    for (const auto& [p, c] : k.terms()) CHECK(is_evercrossing(p));
  }
}

TEST_CASE("moments are sums of cumulants over non-crossing partitions")
{
  // moment_pp(n) = sum over rho in NC(n) of the rho-ordered product of cumulants
  for (int n = 1; n <= 6; ++n) {
    FormalSum total(n);
    for (const auto& rho : noncrossing_partitions(n)) {
      std::vector<FormalSum> factors;
      for (const auto& b : rho.blocks()) factors.push_back(cumulant_pp(static_cast<int>(b.size())));
      total += rho_product(rho, std::span<const FormalSum>(factors));
    }
    CHECK(total == moment_pp(n));
  }
}
