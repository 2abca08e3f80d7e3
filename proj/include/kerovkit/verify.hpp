#pragma once

// Exhaustive consistency checks shared by `kerovkit verify` and the
// acceptance runner. Each check returns instead of throwing.

#include <string>
#include <vector>

namespace kerovkit {

struct CheckOutcome {
  std::string name;
  bool passed = true;
  long cases = 0;
  std::string detail;  // first failures or a summary
};

struct VerifyOptions {
  int nmax = 7;
  int qmax = 6;
  unsigned threads = 0;  // 0: KEROVKIT_THREADS, else hardware concurrency
};

/// KEROVKIT_THREADS if set to a positive integer, else hardware concurrency.
unsigned default_threads();

// core
CheckOutcome check_worked_examples();
CheckOutcome check_genus_laws(int nmax);
CheckOutcome check_free_index_laws(int nmax);
CheckOutcome check_zero_index_witness(int nmax);
/// Genus and free index of every intermediate object of simplify.
CheckOutcome check_simplify_steps(int nmax);
/// Evercrossing input stays evercrossing and reduces to at most 12g-6 points.
CheckOutcome check_simplify_bound(int nmax);
CheckOutcome check_genus_one_census(int nmax, unsigned threads);

// algebra
/// sigma_map(rho_product(rho, factors)) against the product of the factor
/// images in the partial permutation algebra at degree min(n, q).
CheckOutcome check_homomorphism_catalog(int nmax, int q, long min_instances);
CheckOutcome check_partition_moments(int nmax);
CheckOutcome check_sigma_product_against_group(int q);

// oracle
CheckOutcome check_jm_decomposition(int kmax, int qmax);
CheckOutcome check_characters(int qmax);
CheckOutcome check_transition_measures(int qmax);
CheckOutcome check_central_multiplicativity(int qmax);

// kerov
CheckOutcome check_kerov_end_to_end(int qmax, int kmax);
CheckOutcome check_second_order(int n_rjm, int n_kerov);
CheckOutcome check_kerov_positivity(int nmax);

// pushing
CheckOutcome check_pushing_bijection(int nmax, int qmax);
CheckOutcome check_pushing_expansion(int nmax, int qmax);
CheckOutcome check_pushing_jm_sum(int nmax, int qmax);

std::vector<std::string> suite_names();
/// Runs the checks of a suite ("all" runs every suite) on a worker pool; the
/// result order is fixed. Throws std::invalid_argument on an unknown suite.
std::vector<CheckOutcome> run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace kerovkit
