#include "kerovkit/verify.hpp"

#include "kerovkit/kerov.hpp"
#include "kerovkit/pushing.hpp"
#include "kerovkit/simplifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

namespace kerovkit {

namespace {

// Counts cases and keeps the first few failure messages.
class Tally {
public:
  explicit Tally(std::string name) { out_.name = std::move(name); }

  template <class Describe>
  void expect(bool ok, Describe&& describe)
  {
    ++out_.cases;
    if (ok) return;
    if (failures_++ < 3) {
      if (!out_.detail.empty()) out_.detail += "; ";
      out_.detail += describe();
    }
    out_.passed = false;
  }

  CheckOutcome finish(const std::string& summary = {})
  {
    if (failures_ > 3) out_.detail += "; " + std::to_string(failures_) + " failures in total";
    if (out_.passed && !summary.empty()) out_.detail = summary;
    return out_;
  }

private:
  CheckOutcome out_;
  long failures_ = 0;
};

template <class F>
CheckOutcome guarded(const std::string& name, F&& body)
{
  try {
    return body();
  } catch (const std::exception& e) {
    return CheckOutcome{name, false, 0, std::string("exception: ") + e.what()};
  }
}

std::vector<SigmaSymbol> symbols_up_to_weight(int w)
{
  std::vector<SigmaSymbol> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int left, int largest) {
    if (!current.empty()) out.emplace_back(current);
    for (int k = std::min(left, largest); k >= 1; --k) {
      current.push_back(k);
      rec(left - k, k);
      current.pop_back();
    }
  };
  rec(w, w);
  return out;
}

SigmaCombo truncate_weight(const SigmaCombo& c, int q)
{
  SigmaCombo out;
  for (const auto& [s, coefficient] : c.terms())
    if (s.weight() <= q) out.add(s, coefficient);
  return out;
}

std::string str(const std::vector<int>& v)
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

unsigned default_threads()
{
  if (const char* env = std::getenv("KEROVKIT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CheckOutcome check_worked_examples()
{
  return guarded("worked examples", [] {
    Tally t("worked examples");
    const auto rho = parse_partition("1,2,7,8|3,4,5,6");
    const std::vector<SetPartition> factors{factor_from_ambient(rho, 0, parse_blocks("1,7|2|8")),
                                            factor_from_ambient(rho, 1, parse_blocks("3,5|4,6"))};
    FormalSum expected(8);
    for (const char* p : {"1,7|2,4,6|3,5|8", "1,7|2,4,6|3,5,8", "1,3,5,7|2,4,6|8"}) expected.add(parse_partition(p), 1);
    t.expect(rho_product(rho, std::span<const SetPartition>(factors)) == expected, [] { return "rho-ordered product"; });

    const auto p = parse_partition("1,3|2,5,7|4|6");
    t.expect(sigma_of_partition(p) == SigmaSymbol({2, 1}), [] { return "sigma symbol"; });
    const auto w = winding_cycles(p);
    t.expect(w.size() == 2 && w[0].vertices == std::vector<int>{1, 2, 3, 5, 4} && w[0].k == 2 &&
                 w[1].vertices == std::vector<int>{6, 7} && w[1].k == 1,
             [] { return "winding data"; });
    return t.finish("product and sigma examples reproduced");
  });
}

CheckOutcome check_genus_laws(int nmax)
{
  return guarded("genus and degree laws", [nmax] {
    Tally t("genus and degree laws");
    long zero_sigma = 0;
    for (int n = 1; n <= nmax; ++n)
      for_each_partition(n, [&](const SetPartition& p) {
        const int g = genus(p);
        t.expect(g >= 0, [&] { return to_string(p) + " negative genus"; });
        t.expect((g == 0) == is_noncrossing(p), [&] { return to_string(p) + " genus 0 vs non-crossing"; });
        const auto s = sigma_of_partition(p);
        if (!s) {
          ++zero_sigma;
          return;
        }
        t.expect(filtration_degree(*s) == n - 2 * g, [&] { return to_string(p) + " degree"; });
      });
    return t.finish(std::to_string(zero_sigma) + " partitions have Sigma = 0 and no degree");
  });
}

CheckOutcome check_free_index_laws(int nmax)
{
  return guarded("free index laws", [nmax] {
    Tally t("free index laws");
    long splits = 0;
    for (int n = 1; n <= nmax; ++n)
      for_each_partition(n, [&](const SetPartition& p) {
        const Integer index = free_index(p);
        if (!is_evercrossing(p)) t.expect(index == 0, [&] { return to_string(p) + " non-evercrossing with I != 0"; });
        for (const auto& split : admissible_splits(p)) {
          ++splits;
          t.expect(free_index_by_split(p, split) == index, [&] { return to_string(p) + " split " + str(split); });
        }
      });
    return t.finish(std::to_string(splits) + " splits agree with the direct sum");
  });
}

CheckOutcome check_zero_index_witness(int nmax)
{
  return guarded("evercrossing partition with zero free index", [nmax] {
    Tally t("evercrossing partition with zero free index");
    std::optional<SetPartition> witness;
    for (int n = 1; n <= nmax && !witness; ++n)
      for_each_partition(n, [&](const SetPartition& p) {
        if (!witness && is_evercrossing(p) && free_index(p) == 0) witness = p;
      });
    t.expect(witness.has_value(), [nmax] { return "none with n <= " + std::to_string(nmax); });
    return t.finish(witness ? "witness " + to_string(*witness) : "");
  });
}

CheckOutcome check_simplify_steps(int nmax)
{
  return guarded("simplify preserves genus and free index at every step", [nmax] {
    Tally t("simplify preserves genus and free index at every step");
    for (int n = 1; n <= nmax; ++n)
      for_each_partition(n, [&](const SetPartition& p) {
        const int g = genus_or_zero(p);
        const Integer index = free_index(p);
        const auto trace = simplify_trace(p);
        for (std::size_t i = 1; i < trace.size(); ++i) {
          const int gi = genus_or_zero(trace[i]);
          const Integer ii = free_index(trace[i]);
          t.expect(gi == g && ii == index, [&] {
            return to_string(p) + " (genus " + std::to_string(g) + ", I " + to_string(index) + ") step " +
                   std::to_string(i) + " gives genus " + std::to_string(gi) + ", I " + to_string(ii);
          });
        }
      });
    return t.finish();
  });
}

CheckOutcome check_simplify_bound(int nmax)
{
  return guarded("simplify bound on evercrossing input", [nmax] {
    Tally t("simplify bound on evercrossing input");
    for (int n = 1; n <= nmax; ++n)
      for_each_partition(n, [&](const SetPartition& p) {
        if (!is_evercrossing(p)) return;
        const auto r = simplify(p);
        const int g = genus_or_zero(p);
        t.expect(is_evercrossing(r), [&] { return to_string(p) + " loses evercrossing"; });
        if (g >= 1) t.expect(r.points() <= 12 * g - 6, [&] { return to_string(p) + " reduces to " + to_string(r); });
      });
    return t.finish();
  });
}

CheckOutcome check_genus_one_census(int nmax, unsigned threads)
{
  return guarded("genus one census", [nmax, threads] {
    Tally t("genus one census");
    const Census c = genus_census(1, nmax, threads);
    const std::vector<std::pair<PairPartition, Integer>> expected{
        {PairPartition(4, {{1, 3}, {2, 4}}), -1},
        {PairPartition(6, {{1, 4}, {2, 5}, {3, 6}}), -2},
    };
    t.expect(c.classes.size() == expected.size(), [&] { return std::to_string(c.classes.size()) + " classes"; });
    for (std::size_t i = 0; i < std::min(c.classes.size(), expected.size()); ++i)
      t.expect(c.classes[i].reduced == expected[i].first && c.classes[i].free_index == expected[i].second,
               [&] { return "class " + to_string(c.classes[i].reduced) + " I " + to_string(c.classes[i].free_index); });
    for (const auto& e : c.classes) t.expect(e.reduced.points() <= 6, [&] { return to_string(e.reduced) + " too large"; });
    return t.finish("two rotation classes, I = -1 and -2");
  });
}

CheckOutcome check_homomorphism_catalog(int nmax, int q, long min_instances)
{
  return guarded("sigma_map is multiplicative", [nmax, q, min_instances] {
    Tally t("sigma_map is multiplicative");
    std::map<std::pair<int, std::pair<SigmaSymbol, SigmaSymbol>>, SigmaCombo> cache;
    std::map<std::pair<int, SigmaSymbol>, AlgebraElement> expansions;
    auto expand = [&](const SigmaSymbol& s, int d) -> const AlgebraElement& {
      auto [it, fresh] = expansions.try_emplace({d, s});
      if (fresh) it->second = sigma_expand(s, d);
      return it->second;
    };
    // group algebra product of a truncated combination with a symbol
    auto times = [&](const SigmaCombo& c, const SigmaSymbol& s, int d) {
      SigmaCombo out;
      for (const auto& [a, coefficient] : c.terms()) {
        const auto key = std::make_pair(d, std::minmax(a, s));
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, central_product(expand(a, d), expand(s, d))).first;
        out += it->second * coefficient;
      }
      return out;
    };
    long instances = 0;
    for (int n = 1; n <= nmax; ++n) {
      const int d = std::min(n, q);
      for (const auto& rho : noncrossing_partitions(n)) {
        if (rho.block_count() < 2 || rho.block_count() > 3) continue;
        std::vector<std::vector<SetPartition>> choices;
        for (const auto& b : rho.blocks()) choices.push_back(set_partitions(static_cast<int>(b.size())));
        std::vector<SetPartition> pick(choices.size());
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
          if (i == choices.size()) {
            ++instances;
            const auto lhs = truncate_weight(sigma_map(rho_product(rho, std::span<const SetPartition>(pick))), d);
            SigmaCombo rhs(SigmaSymbol{});
            for (const auto& f : pick) {
              const auto s = sigma_of_partition(f);
              rhs = s ? times(rhs, *s, d) : SigmaCombo();
            }
            t.expect(lhs == rhs, [&] { return to_string(rho) + " at degree " + std::to_string(d); });
            return;
          }
          for (const auto& p : choices[i]) {
            pick[i] = p;
            rec(i + 1);
          }
        };
        rec(0);
      }
    }
    t.expect(instances >= min_instances, [&] { return "only " + std::to_string(instances) + " instances"; });
    return t.finish(std::to_string(instances) + " instances");
  });
}

CheckOutcome check_partition_moments(int nmax)
{
  return guarded("moment and cumulant identities for partitions", [nmax] {
    Tally t("moment and cumulant identities for partitions");
    for (int n = 1; n <= nmax; ++n) {
      t.expect(cumulant_pp(n) == cumulant_pp_by_moebius(n), [n] { return "cumulant " + std::to_string(n); });
      for (const auto& rho : noncrossing_partitions(n))
        t.expect(moment_pp_rho(rho) == moment_pp_rho_product_form(rho), [&] { return "moment " + to_string(rho); });
    }
    // moments from cumulants inside the Sigma algebra
    ValueSequence<SigmaCombo> r, m;
    for (int n = 1; n <= nmax; ++n) {
      r.push_back(rjm_in_sigma(n));
      m.push_back(mjm_in_sigma(n));
    }
    t.expect(moments_from_cumulants(r) == m, [] { return "moments from cumulants"; });
    return t.finish();
  });
}

CheckOutcome check_sigma_product_against_group(int q)
{
  return guarded("Sigma structure constants", [q] {
    Tally t("Sigma structure constants");
    const auto symbols = symbols_up_to_weight(q);
    for (std::size_t i = 0; i < symbols.size(); ++i)
      for (std::size_t j = i; j < symbols.size(); ++j) {
        const auto& a = symbols[i];
        const auto& b = symbols[j];
        if (a.weight() + b.weight() > q + 2) continue;
        const auto expected = central_product(sigma_expand(a, q), sigma_expand(b, q));
        t.expect(truncate_weight(sigma_product(a, b), q) == expected,
                 [&] { return to_string(a) + " * " + to_string(b); });
      }
    return t.finish();
  });
}

CheckOutcome check_jm_decomposition(int kmax, int qmax)
{
  return guarded("Jucys-Murphy moments in the Sigma basis", [kmax, qmax] {
    Tally t("Jucys-Murphy moments in the Sigma basis");
    for (int k = 1; k <= kmax; ++k)
      for (int q = 1; q <= qmax; ++q)
        t.expect(decompose_sigma_basis(jm_power_expectation(k, q)) == truncate_weight(mjm_in_sigma(k), q),
                 [&] { return "k=" + std::to_string(k) + " q=" + std::to_string(q); });
    return t.finish();
  });
}

CheckOutcome check_characters(int qmax)
{
  return guarded("characters", [qmax] {
    Tally t("characters");
    for (int q = 1; q <= qmax; ++q) {
      const auto diagrams = young_diagrams(q);
      std::vector<Integer> class_size;
      for (const auto& mu : diagrams) {
        Integer z = 1;
        std::map<int, int> mult;
        for (int k : mu.rows) {
          z *= k;
          ++mult[k];
        }
        for (const auto& [k, m] : mult) z *= factorial(m);
        class_size.push_back(factorial(q) / z);
      }
      for (std::size_t a = 0; a < diagrams.size(); ++a) {
        const std::vector<int> identity(static_cast<std::size_t>(q), 1);
        t.expect(character(diagrams[a], identity) == hook_length_dimension(diagrams[a]),
                 [&] { return "dimension of " + to_string(diagrams[a]); });
        for (std::size_t b = a; b < diagrams.size(); ++b) {
          Integer sum = 0;
          for (std::size_t c = 0; c < diagrams.size(); ++c)
            sum += class_size[c] * character(diagrams[a], diagrams[c].rows) * character(diagrams[b], diagrams[c].rows);
          t.expect(sum == (a == b ? factorial(q) : Integer(0)),
                   [&] { return "orthogonality " + to_string(diagrams[a]) + " " + to_string(diagrams[b]); });
        }
      }
    }
    return t.finish();
  });
}

CheckOutcome check_transition_measures(int qmax)
{
  return guarded("transition measures", [qmax] {
    Tally t("transition measures");
    for (int q = 0; q <= qmax; ++q)
      for (const auto& lambda : q == 0 ? std::vector<YoungDiagram>{YoungDiagram()} : young_diagrams(q)) {
        const auto mu = transition_measure(lambda);
        bool positive = true;
        for (const auto& [x, w] : mu.atoms) positive = positive && w > 0;
        const auto m = measure_moments(mu, 2);
        t.expect(positive && m[0] == 1 && m[1] == 0 && m[2] == q, [&] { return to_string(lambda); });
      }
    return t.finish();
  });
}

CheckOutcome check_central_multiplicativity(int qmax)
{
  return guarded("central values are multiplicative", [qmax] {
    Tally t("central values are multiplicative");
    const auto symbols = symbols_up_to_weight(3);
    for (int q = 1; q <= qmax; ++q)
      for (const auto& lambda : young_diagrams(q))
        for (const auto& a : symbols)
          for (const auto& b : symbols)
            t.expect(central_value(a, lambda) * central_value(b, lambda) == central_value(sigma_product(a, b), lambda),
                     [&] { return to_string(lambda) + " " + to_string(a) + " " + to_string(b); });
    return t.finish();
  });
}

CheckOutcome check_kerov_end_to_end(int qmax, int kmax)
{
  return guarded("Kerov polynomials against characters", [qmax, kmax] {
    Tally t("Kerov polynomials against characters");
    for (int q = 1; q <= qmax; ++q)
      for (const auto& lambda : young_diagrams(q)) {
        const auto m = measure_moments(transition_measure(lambda), std::min(kmax, q) + 1);
        const auto cumulants = cumulants_from_moments(ValueSequence<Rational>(std::vector<Rational>(m.begin() + 1, m.end())));
        for (int n = 1; n <= std::min(kmax, q); ++n) {
          const SigmaSymbol s({n});
          t.expect(central_value(s, lambda) == evaluate(kerov_polynomial(s), cumulants),
                   [&] { return to_string(lambda) + " n=" + std::to_string(n); });
        }
      }
    return t.finish();
  });
}

CheckOutcome check_second_order(int n_rjm, int n_kerov)
{
  return guarded("second-order terms", [n_rjm, n_kerov] {
    Tally t("second-order terms");
    for (int n = 2; n <= n_rjm; ++n)
      t.expect(degree_at_least(rjm_in_sigma(n), n - 2) == degree_at_least(rjm_second_order_sigma(n), n - 2),
               [n] { return "cumulant " + std::to_string(n); });
    for (int n = 1; n <= n_kerov; ++n)
      t.expect(graded_part(kerov_polynomial({n}), n - 1) == second_order_term(n + 1),
               [n] { return "K_" + std::to_string(n); });
    return t.finish();
  });
}

CheckOutcome check_kerov_positivity(int nmax)
{
  return guarded("Kerov coefficients are nonnegative integers", [nmax] {
    Tally t("Kerov coefficients are nonnegative integers");
    for (int n = 1; n <= nmax; ++n) {
      const auto k = kerov_polynomial({n});
      for (const auto& [m, c] : k.terms())
        t.expect(c.get_den() == 1 && c >= 0, [&] { return "K_" + std::to_string(n) + " coefficient " + to_string(c); });
    }
    return t.finish();
  });
}

CheckOutcome check_pushing_bijection(int nmax, int qmax)
{
  return guarded("pushing sequences: bijection and diagram", [nmax, qmax] {
    Tally t("pushing sequences: bijection and diagram");
    for (int q = 1; q <= qmax; ++q)
      for (int n = 0; n <= nmax; ++n) {
        const auto adm = admissible_sequences(n, q);
        const auto push = pushing_sequences(n, q);
        t.expect(adm.size() == push.size(), [&] { return "counts at n=" + std::to_string(n); });
        for (const auto& a : adm)
          t.expect(push_to_adm(adm_to_push(a)) == a, [&] { return "round trip " + str(a.entries); });
        for (const auto& p : push) {
          const auto a = push_to_adm(p);
          t.expect(adm_to_push(a) == p, [&] { return "round trip " + to_string(p); });
          t.expect(push_to_partial_perm(p) == adm_to_partial_perm(a), [&] { return "diagram " + to_string(p); });
        }
      }
    return t.finish();
  });
}

CheckOutcome check_pushing_expansion(int nmax, int qmax)
{
  return guarded("pushing partitions expand to Sigma", [nmax, qmax] {
    Tally t("pushing partitions expand to Sigma");
    for (int n = 2; n <= nmax; ++n)
      for (const auto& pi : set_partitions(n)) {
        if (!is_pushing_partition(pi)) continue;
        const auto s = sigma_of_partition(pi);
        for (int q = 1; q <= qmax; ++q)
          t.expect(s && partition_pushing_expansion(pi, q) == sigma_expand(*s, q),
                   [&] { return to_string(pi) + " q=" + std::to_string(q); });
      }
    return t.finish();
  });
}

CheckOutcome check_pushing_jm_sum(int nmax, int qmax)
{
  return guarded("pushing partitions sum to Jucys-Murphy moments", [nmax, qmax] {
    Tally t("pushing partitions sum to Jucys-Murphy moments");
    for (int k = 1; k <= nmax; ++k)
      for (int q = 1; q <= qmax; ++q) {
        AlgebraElement total(q);
        for (const auto& pi : set_partitions(k)) total += partition_pushing_expansion(pi, q);
        t.expect(total == jm_power_expectation(k, q), [&] { return "k=" + std::to_string(k) + " q=" + std::to_string(q); });
      }
    return t.finish();
  });
}

std::vector<std::string> suite_names() { return {"core", "algebra", "oracle", "kerov", "pushing"}; }

std::vector<CheckOutcome> run_suite(const std::string& suite, const VerifyOptions& o)
{
  const unsigned threads = o.threads ? o.threads : default_threads();
  const int n = o.nmax, q = o.qmax;
  std::vector<std::pair<std::string, std::function<CheckOutcome()>>> checks;
  auto want = [&](const char* name) { return suite == "all" || suite == name; };
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw std::invalid_argument("unknown suite: " + suite);
  if (want("core")) {
    checks.emplace_back("core", [] { return check_worked_examples(); });
    checks.emplace_back("core", [n] { return check_genus_laws(n); });
    checks.emplace_back("core", [n] { return check_free_index_laws(n); });
    checks.emplace_back("core", [n] { return check_zero_index_witness(n); });
    checks.emplace_back("core", [n] { return check_simplify_steps(n); });
    checks.emplace_back("core", [n] { return check_simplify_bound(n); });
    checks.emplace_back("core", [n] { return check_genus_one_census(n, 1); });
  }
  if (want("algebra")) {
    checks.emplace_back("algebra", [n, q] { return check_homomorphism_catalog(n, q, 0); });
    checks.emplace_back("algebra", [n] { return check_partition_moments(n); });
    checks.emplace_back("algebra", [q] { return check_sigma_product_against_group(q); });
  }
  if (want("oracle")) {
    checks.emplace_back("oracle", [q] { return check_jm_decomposition(std::min(q, 6), q); });
    checks.emplace_back("oracle", [q] { return check_characters(q); });
    checks.emplace_back("oracle", [q] { return check_transition_measures(q + 3); });
    checks.emplace_back("oracle", [q] { return check_central_multiplicativity(q); });
  }
  if (want("kerov")) {
    checks.emplace_back("kerov", [q] { return check_kerov_end_to_end(q + 2, 6); });
    checks.emplace_back("kerov", [n] { return check_second_order(n + 1, n); });
    checks.emplace_back("kerov", [] { return check_kerov_positivity(6); });
  }
  if (want("pushing")) {
    const int pn = std::min(n, 5), pq = std::min(q, 4);
    checks.emplace_back("pushing", [pn, pq] { return check_pushing_bijection(pn, pq); });
    checks.emplace_back("pushing", [pn, pq] { return check_pushing_expansion(pn, pq); });
    checks.emplace_back("pushing", [pn, pq] { return check_pushing_jm_sum(pn, pq); });
  }

  std::vector<CheckOutcome> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < checks.size();) {
      results[i] = checks[i].second();
      results[i].name = checks[i].first + ": " + results[i].name;
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < std::min<std::size_t>(threads, checks.size()); ++i) pool.emplace_back(worker);
  worker();
  pool.clear();
  return results;
}

}  // namespace kerovkit
