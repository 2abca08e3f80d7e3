// Acceptance runner: one PASS/FAIL line per criterion, each with its time
// budget. Exit status is nonzero if any criterion fails.

#include "kerovkit/json_io.hpp"
#include "kerovkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace kerovkit;

namespace {

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<std::vector<CheckOutcome>()> run;
};

// The product command's JSON must list exactly the three partitions with coefficient 1.
CheckOutcome product_json()
{
  CheckOutcome out{"product JSON", true, 1, {}};
  const auto rho = parse_partition("1,2,7,8|3,4,5,6");
  const std::vector<SetPartition> fs{factor_from_ambient(rho, 0, parse_blocks("1,7|2|8")),
                                     factor_from_ambient(rho, 1, parse_blocks("3,5|4,6"))};
  Json terms = to_json(rho_product(rho, std::span<const SetPartition>(fs)))["terms"];
  std::sort(terms.begin(), terms.end());
  const Json expected = Json::parse(R"([
    {"coefficient": "1", "partition": "1,3,5,7|2,4,6|8"},
    {"coefficient": "1", "partition": "1,7|2,4,6|3,5,8"},
    {"coefficient": "1", "partition": "1,7|2,4,6|3,5|8"}])");
  if (terms != expected) {
    out.passed = false;
    out.detail = terms.dump();
  }
  return out;
}

}  // namespace

int main()
{
  const unsigned threads = default_threads();
  const std::vector<Criterion> criteria{
      {1, "worked example reproduction", 1, [] { return std::vector{check_worked_examples(), product_json()}; }},
      {2, "genus and degree laws, n <= 8", 10, [] { return std::vector{check_genus_laws(8)}; }},
      {3, "free index laws, n <= 8", 60,
       [] { return std::vector{check_free_index_laws(8), check_zero_index_witness(8)}; }},
      {4, "simplification invariants and genus-1 census, n <= 8", 60,
       [threads] {
         return std::vector{check_simplify_steps(8), check_simplify_bound(8), check_genus_one_census(8, threads)};
       }},
      {5, "oracle equivalence", 180,
       [] {
         return std::vector{check_jm_decomposition(6, 6), check_pushing_expansion(5, 4), check_pushing_bijection(5, 4),
                            check_pushing_jm_sum(5, 4)};
       }},
      {6, "sigma_map homomorphism catalog, n <= 8, q <= 7", 120,
       [] { return std::vector{check_homomorphism_catalog(8, 7, 50)}; }},
      {7, "Kerov polynomials against characters, q <= 8", 180, [] { return std::vector{check_kerov_end_to_end(8, 6)}; }},
      {8, "second-order theorems", 120, [] { return std::vector{check_second_order(8, 7)}; }},
      {9, "Kerov positivity, n <= 6", 60, [] { return std::vector{check_kerov_positivity(6)}; }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const auto outcomes = c.run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = seconds <= c.budget_seconds;
    std::string detail;
    for (const auto& o : outcomes) {
      ok = ok && o.passed;
      if (!o.passed) detail += " | " + o.name + ": " + o.detail;
    }
    if (seconds > c.budget_seconds) detail += " | over the time budget";
    char timing[64];
    std::snprintf(timing, sizeof timing, "(%.2f s of %.0f s)", seconds, c.budget_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << ' ' << timing << detail << '\n';
    if (!ok) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << '/' << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
