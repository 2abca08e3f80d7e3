// kerovkit command-line front end. JSON on stdout for every command except
// verify, which prints one tab-separated line per check.

#include "kerovkit/json_io.hpp"
#include "kerovkit/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace kerovkit;

namespace {

std::vector<int> parse_ints(const std::string& text)
{
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, end - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw std::invalid_argument("expected comma-separated integers: " + text);
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

YoungDiagram parse_diagram(const std::string& text) { return YoungDiagram(parse_ints(text)); }

Json describe_partition(const SetPartition& p)
{
  Json out{{"partition", to_string(p)}, {"n", p.size()}};
  const auto s = sigma_of_partition(p);
  out["symbol"] = s ? to_json(*s) : Json(nullptr);
  out["degree"] = s ? Json(filtration_degree(*s)) : Json(nullptr);
  if (p.size() == 0) return out;
  out["genus"] = genus(p);
  out["evercrossing"] = is_evercrossing(p);
  out["free_index"] = to_string(free_index(p));
  out["winding"] = to_json(winding_cycles(p));
  return out;
}

void print(const std::string& command, Json result) { std::cout << envelope(command, std::move(result)).dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact calculus of partitions, Sigma expansions and Kerov polynomials"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string partition;
  auto* sigma = app.add_subcommand("sigma", "Sigma symbol, genus, degree and free index of a partition");
  sigma->add_option("--partition", partition, "blocks such as 1,3|2,5,7|4|6")->required();
  sigma->callback([&] {
    action = [&] {
      print("sigma", describe_partition(parse_partition(partition)));
      return 0;
    };
  });

  std::string rho;
  std::vector<std::string> factors;
  auto* product = app.add_subcommand("product", "rho-ordered product; one --factor per block of rho, in ambient labels");
  product->add_option("--rho", rho)->required();
  product->add_option("--factor", factors)->required();
  product->callback([&] {
    action = [&] {
      const auto r = parse_partition(rho);
      if (static_cast<int>(factors.size()) != r.block_count())
        throw std::invalid_argument("need one factor per block of rho");
      std::vector<SetPartition> fs;
      for (std::size_t i = 0; i < factors.size(); ++i)
        fs.push_back(factor_from_ambient(r, static_cast<int>(i), parse_blocks(factors[i])));
      const auto f = rho_product(r, std::span<const SetPartition>(fs));
      print("product", {{"sum", to_json(f)}, {"sigma", to_json(sigma_map(f))}});
      return 0;
    };
  });

  std::string ks;
  auto* kerov = app.add_subcommand("kerov", "Kerov polynomial of Sigma_{ks}");
  kerov->add_option("--ks", ks, "e.g. 4 or 2,2")->required();
  kerov->callback([&] {
    action = [&] {
      const SigmaSymbol s(parse_ints(ks));
      print("kerov", {{"symbol", to_json(s)}, {"polynomial", to_json(kerov_polynomial(s))}});
      return 0;
    };
  });

  int n = 0;
  bool second_order = false;
  auto* rjm = app.add_subcommand("rjm", "free cumulant R_n of the Jucys-Murphy element in the Sigma basis");
  rjm->add_option("--n", n)->required()->check(CLI::Range(1, 12));
  rjm->add_flag("--second-order", second_order, "only the closed-form terms of degree >= n-2");
  rjm->callback([&] {
    action = [&] {
      print("rjm", {{"n", n}, {"second_order", second_order},
                    {"combination", to_json(second_order ? rjm_second_order_sigma(n) : rjm_in_sigma(n))}});
      return 0;
    };
  });

  std::string a, b;
  auto* expand = app.add_subcommand("expand-product", "Sigma_a * Sigma_b in the Sigma basis");
  expand->add_option("--a", a)->required();
  expand->add_option("--b", b)->required();
  expand->callback([&] {
    action = [&] {
      const SigmaSymbol sa(parse_ints(a)), sb(parse_ints(b));
      print("expand-product", {{"a", to_json(sa)}, {"b", to_json(sb)}, {"product", to_json(sigma_product(sa, sb))}});
      return 0;
    };
  });

  bool trace = false;
  auto* simplify_cmd = app.add_subcommand("simplify", "reduce a partition to a small pair partition");
  simplify_cmd->add_option("--partition", partition)->required();
  simplify_cmd->add_flag("--trace", trace, "list every intermediate object");
  simplify_cmd->callback([&] {
    action = [&] {
      const auto p = parse_partition(partition);
      const auto r = simplify(p);
      Json out{{"input", to_string(p)}, {"reduced", to_json(r)}, {"genus", genus_or_zero(p)},
               {"free_index", to_string(free_index(p))}, {"reduced_free_index", to_string(free_index(r))}};
      if (trace) {
        Json steps = Json::array();
        for (const auto& s : simplify_trace(p))
          steps.push_back({{"partition", to_string(s)}, {"genus", genus_or_zero(s)}, {"free_index", to_string(free_index(s))}});
        out["trace"] = steps;
      }
      print("simplify", out);
      return 0;
    };
  });

  int g = 1, nmax = 7, qmax = 6;
  unsigned threads = 0;
  auto* census = app.add_subcommand("census", "reduced classes of evercrossing partitions of a given genus");
  census->add_option("--genus", g)->required()->check(CLI::Range(0, 8));
  census->add_option("--nmax", nmax)->check(CLI::Range(1, 10));
  census->add_option("--threads", threads);
  census->callback([&] {
    action = [&] {
      print("census", to_json(genus_census(g, nmax, threads ? threads : default_threads())));
      return 0;
    };
  });

  std::string lambda;
  int moments = -1, cumulants = -1;
  auto* measure = app.add_subcommand("transition-measure", "transition measure of a Young diagram");
  measure->add_option("--lambda", lambda)->required();
  measure->add_option("--moments", moments, "print M_1..M_K")->check(CLI::Range(0, 40));
  measure->add_option("--cumulants", cumulants, "print R_1..R_K")->check(CLI::Range(0, 12));
  measure->callback([&] {
    action = [&] {
      const auto diagram = parse_diagram(lambda);
      const auto mu = transition_measure(diagram);
      Json out{{"lambda", diagram.rows}, {"measure", to_json(mu)}};
      const int upto = std::max(moments, cumulants);
      if (upto > 0) {
        const auto m = measure_moments(mu, upto);
        const std::vector<Rational> tail(m.begin() + 1, m.end());
        if (moments > 0) {
          Json list = Json::array();
          for (int i = 0; i < moments; ++i) list.push_back(to_json(tail[static_cast<std::size_t>(i)]));
          out["moments"] = list;
        }
        if (cumulants > 0) {
          const auto r = cumulants_from_moments(ValueSequence<Rational>(tail));
          Json list = Json::array();
          for (int i = 1; i <= cumulants; ++i) list.push_back(to_json(r[i]));
          out["cumulants"] = list;
        }
      }
      print("transition-measure", out);
      return 0;
    };
  });

  std::string type;
  auto* character_cmd = app.add_subcommand("character", "irreducible character (--type) or central value (--ks)");
  character_cmd->add_option("--lambda", lambda)->required();
  auto* type_opt = character_cmd->add_option("--type", type, "cycle type of the class");
  auto* ks_opt = character_cmd->add_option("--ks", ks, "Sigma symbol");
  type_opt->excludes(ks_opt);
  character_cmd->callback([&] {
    action = [&] {
      const auto diagram = parse_diagram(lambda);
      if (!type.empty()) {
        const auto t = parse_ints(type);
        print("character", {{"lambda", diagram.rows}, {"type", t}, {"value", to_string(character(diagram, t))}});
      } else if (!ks.empty()) {
        const SigmaSymbol s(parse_ints(ks));
        print("character", {{"lambda", diagram.rows}, {"symbol", to_json(s)}, {"value", to_json(central_value(s, diagram))}});
      } else {
        throw std::invalid_argument("give --type or --ks");
      }
      return 0;
    };
  });

  auto* sigma_value = app.add_subcommand("sigma-value", "value of Sigma_{ks} in the representation lambda");
  sigma_value->add_option("--lambda", lambda)->required();
  sigma_value->add_option("--ks", ks)->required();
  sigma_value->callback([&] {
    action = [&] {
      const auto diagram = parse_diagram(lambda);
      const SigmaSymbol s(parse_ints(ks));
      print("sigma-value", {{"lambda", diagram.rows}, {"symbol", to_json(s)}, {"value", to_json(central_value(s, diagram))}});
      return 0;
    };
  });

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "exhaustive consistency checks");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"core", "algebra", "oracle", "kerov", "pushing", "all"}));
  verify->add_option("--nmax", nmax)->check(CLI::Range(1, 9));
  verify->add_option("--qmax", qmax)->check(CLI::Range(1, 8));
  verify->add_option("--threads", threads);
  verify->callback([&] {
    action = [&] {
      const auto results = run_suite(suite, VerifyOptions{nmax, qmax, threads});
      bool ok = true;
      for (const auto& r : results) {
        ok = ok && r.passed;
        std::cout << (r.passed ? "PASS" : "FAIL") << '\t' << r.name << '\t' << r.cases << '\t' << r.detail << '\n';
      }
      return ok ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
