// Command-line front end: A111384 values, S_M(A) reports, the ternary
// construction, witness search, and a built-in regression check.
//
// Exit codes: 0 success (or certified equality for `search`), 2 inconclusive
// search, 1 error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trisum/trisum.hpp"

namespace {

using trisum::Element;

std::vector<Element> parse_set_literal(const std::vector<std::string>& args) {
  std::string joined;
  for (const auto& a : args) joined += a + ",";
  std::vector<Element> out;
  std::string token;
  const auto flush = [&] {
    if (token.empty()) return;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a natural number: '" + token + "'");
    }
    if (pos != token.size()) {
      throw std::invalid_argument("not a natural number: '" + token + "'");
    }
    out.push_back(static_cast<Element>(v));
    token.clear();
  };
  for (char c : joined) {
    if (c == ',' || c == ' ' || c == '\t') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  if (out.empty()) throw std::invalid_argument("empty set literal");
  return out;
}

trisum::Universe parse_universe(const std::string& name) {
  if (name == "primes") return trisum::Universe::Primes;
  if (name == "tset") return trisum::Universe::TSet;
  throw std::invalid_argument("unknown universe '" + name + "' (use primes or tset)");
}

void print_report_text(const trisum::ElementSet& set, trisum::Universe u,
                       const trisum::SumReport& rep) {
  std::cout << "n: " << set.size() << "\n";
  std::cout << "universe: " << trisum::to_string(u) << "\n";
  std::cout << "triple_count: " << rep.triple_count << "\n";
  std::cout << "in_universe_triples: " << rep.in_universe_triples << "\n";
  std::cout << "distinct_count: " << rep.distinct_count << "\n";
  std::cout << "collisions: " << rep.collisions << "\n";
  std::cout << "sums:";
  for (Element s : rep.sums) std::cout << " " << s;
  std::cout << "\n";
}

void print_certificate_text(const trisum::Certificate& cert) {
  std::cout << "method: " << trisum::to_string(cert.config.method) << "\n";
  std::cout << "n: " << cert.config.n << "\n";
  std::cout << "pool_limit: " << cert.config.pool_limit << "\n";
  std::cout << "seed: " << cert.config.seed << "\n";
  std::cout << "budget: " << cert.config.budget << "\n";
  std::cout << "witness:";
  for (Element x : cert.witness) std::cout << " " << x;
  std::cout << "\n";
  std::cout << "achieved: " << cert.achieved << "\n";
  std::cout << "bound: " << cert.bound << "\n";
  std::cout << "certified_equality: " << (cert.certified_equality ? "true" : "false") << "\n";
  std::cout << "pool_exhausted: " << (cert.pool_exhausted ? "true" : "false") << "\n";
}

// The known 8-element witness set with |S_P(A)| = 48 = A111384(8).
const std::vector<Element> kWitness8 = {499, 1483, 2777, 4363, 5237, 5507, 6043, 6197};

int run_selfcheck() {
  int failures = 0;
  const auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
  };

  bool formula_ok = true;
  for (std::uint64_t n = 0; n <= 10000; ++n) {
    if (trisum::a111384_closed(n) != trisum::a111384_binomial(n)) {
      formula_ok = false;
      break;
    }
  }
  check("a111384 closed form equals binomial form for n <= 10^4", formula_ok);

  const auto rep =
      trisum::evaluate(trisum::ElementSet::from_values(kWitness8), trisum::Universe::Primes);
  check("known 8-set reaches 48 distinct prime sums", rep.distinct_count == 48);

  bool construction_ok = true;
  try {
    for (int n = 3; n <= 30; ++n) {
      const auto w = trisum::verify(n);
      if (!w.distinct_ok || w.report.distinct_count != w.bound) construction_ok = false;
    }
  } catch (const std::exception&) {
    construction_ok = false;
  }
  check("ternary construction meets the bound for 3 <= n <= 30", construction_ok);

  std::cout << (failures == 0 ? "all checks passed" : "some checks FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prime triple-sum bounds, witnesses and searches"};
  app.set_version_flag("--version", std::string("trisum ") + trisum::kVersion);
  app.require_subcommand(1);

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "print A111384(n)");
  std::uint64_t bound_n = 0;
  std::vector<std::uint64_t> bound_range;
  bool bfile = false;
  auto* bound_n_opt = bound_cmd->add_option("n", bound_n, "single index");
  auto* bound_range_opt =
      bound_cmd->add_option("--range", bound_range, "inclusive index range LO HI")
          ->expected(2);
  bound_cmd->add_flag("--bfile", bfile, "emit OEIS b-file lines 'n a(n)'");
  bound_n_opt->excludes(bound_range_opt);

  // sumset
  auto* sumset_cmd = app.add_subcommand("sumset", "evaluate S_M(A) for a set literal");
  std::string sumset_universe = "primes";
  bool sumset_json = false;
  std::vector<std::string> sumset_literal;
  sumset_cmd->add_option("--universe", sumset_universe, "primes or tset")
      ->check(CLI::IsMember({"primes", "tset"}));
  sumset_cmd->add_flag("--json", sumset_json, "emit the report as JSON");
  sumset_cmd->add_option("set", sumset_literal, "comma-separated distinct naturals")
      ->required()
      ->take_all();

  // construct
  auto* construct_cmd =
      app.add_subcommand("construct", "build the extremal subset of T of size n");
  int construct_n = 0;
  bool construct_verify = false;
  construct_cmd->add_option("n", construct_n, "set size (0..36)")->required();
  construct_cmd->add_flag("--verify", construct_verify,
                          "check distinct sums and the A111384 equality");

  // search
  auto* search_cmd = app.add_subcommand("search", "search prime witness sets");
  trisum::SearchConfig cfg;
  std::string method = "exhaustive";
  bool search_json = false;
  search_cmd->add_option("n", cfg.n, "witness set size")->required();
  search_cmd->add_option("--method", method, "exhaustive, certificate or local")
      ->check(CLI::IsMember({"exhaustive", "certificate", "local"}));
  search_cmd->add_option("--pool-limit", cfg.pool_limit, "candidate pool: primes <= limit");
  search_cmd->add_option("--seed", cfg.seed, "randomness seed (echoed in output)");
  search_cmd->add_option("--budget", cfg.budget, "iteration budget; 0 = unlimited");
  search_cmd->add_option("--threads", cfg.threads, "worker threads; 0 = all cores");
  search_cmd->add_option("--restarts", cfg.local.restarts, "local search restarts");
  search_cmd->add_option("--moves-per-restart", cfg.local.moves_per_restart,
                         "local search move cap per restart");
  search_cmd->add_option("--plateau", cfg.local.plateau_tolerance,
                         "non-improving moves tolerated before a restart ends");
  search_cmd->add_flag("--anneal", cfg.local.annealing,
                       "use simulated-annealing acceptance");
  search_cmd->add_flag("--json", search_json, "emit the certificate as JSON");

  // selfcheck
  auto* selfcheck_cmd =
      app.add_subcommand("selfcheck", "run the built-in regression checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bound_cmd->parsed()) {
      if (bound_range_opt->count() > 0) {
        if (bound_range[0] > bound_range[1]) {
          throw std::invalid_argument("range low exceeds range high");
        }
        for (std::uint64_t i = bound_range[0]; i <= bound_range[1]; ++i) {
          if (bfile) {
            std::cout << i << " " << trisum::a111384_closed(i) << "\n";
          } else {
            std::cout << trisum::a111384_closed(i) << "\n";
          }
        }
      } else if (bound_n_opt->count() > 0) {
        if (bfile) {
          std::cout << bound_n << " " << trisum::a111384_closed(bound_n) << "\n";
        } else {
          std::cout << trisum::a111384_closed(bound_n) << "\n";
        }
      } else {
        throw std::invalid_argument("bound needs an index or --range LO HI");
      }
      return 0;
    }

    if (sumset_cmd->parsed()) {
      const trisum::Universe u = parse_universe(sumset_universe);
      const auto set = trisum::ElementSet::from_values(parse_set_literal(sumset_literal));
      std::string offenders;
      for (Element x : set) {
        if (!trisum::in_universe(u, x)) offenders += " " + std::to_string(x);
      }
      if (!offenders.empty()) {
        throw std::invalid_argument("not in universe " + std::string(trisum::to_string(u)) +
                                    ":" + offenders);
      }
      const auto rep = trisum::evaluate(set, u);
      if (sumset_json) {
        std::cout << trisum::report_to_json(set, u, rep).dump() << "\n";
      } else {
        print_report_text(set, u, rep);
      }
      return 0;
    }

    if (construct_cmd->parsed()) {
      if (construct_verify) {
        const auto w = trisum::verify(construct_n);
        std::cout << "n: " << w.n << "\n";
        std::cout << "set:";
        for (Element x : w.set) std::cout << " " << x;
        std::cout << "\n";
        std::cout << "distinct_sums: " << (w.distinct_ok ? "true" : "false") << "\n";
        std::cout << "distinct_count: " << w.report.distinct_count << "\n";
        std::cout << "bound: " << w.bound << "\n";
        std::cout << "meets_bound: "
                  << (w.report.distinct_count == w.bound ? "true" : "false") << "\n";
      } else {
        const auto set = trisum::construct(construct_n);
        for (std::size_t i = 0; i < set.size(); ++i) {
          std::cout << (i > 0 ? " " : "") << set[i];
        }
        std::cout << "\n";
      }
      return 0;
    }

    if (search_cmd->parsed()) {
      cfg.method = trisum::search_method_from_string(method);
      const auto cert = trisum::run_search(cfg);
      if (search_json) {
        std::cout << trisum::certificate_to_json(cert).dump() << "\n";
      } else {
        print_certificate_text(cert);
      }
      return cert.certified_equality ? 0 : 2;
    }

    if (selfcheck_cmd->parsed()) {
      return run_selfcheck();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
