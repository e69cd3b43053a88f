#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "residua/catalog.hpp"
#include "residua/classify.hpp"
#include "residua/error.hpp"
#include "residua/factorize.hpp"
#include "residua/formation.hpp"
#include "residua/verify.hpp"

namespace {

using namespace residua;

uint32_t env_uint(const char* name, uint32_t fallback, uint32_t hard_max) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  unsigned long v = std::strtoul(raw, &end, 10);
  if (!end || *end != '\0' || v == 0 || v > hard_max)
    throw ParseError(std::string(name) + " must be an integer in 1.." +
                     std::to_string(hard_max));
  return static_cast<uint32_t>(v);
}

void print_claims(const std::vector<ClaimResult>& rows) {
  for (const ClaimResult& r : rows) {
    std::cout << r.claim << " [" << to_string(r.status);
    if (!r.reason.empty()) std::cout << ": " << r.reason;
    std::cout << "] " << r.factorization;
    if (!r.witness.empty()) {
      std::cout << " {";
      for (size_t i = 0; i < r.witness.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << r.witness[i].first << "=" << r.witness[i].second;
      }
      std::cout << "}";
    }
    std::cout << "\n";
  }
}

int claims_exit_code(const std::vector<ClaimResult>& rows) {
  for (const ClaimResult& r : rows)
    if (r.status == ClaimStatus::Fails) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"residua: finite-group formation residuals, mutually permutable "
               "factorizations, and residual-identity verification"};
  app.require_subcommand(1);

  uint32_t max_order = kDefaultMaxOrder;
  uint32_t census_cap = kDefaultCensusCap;

  std::string group_arg, class_arg, config_arg, json_arg;
  bool flag_mp = false, flag_ss = false, flag_proper = false, flag_oracle = false;
  bool flag_t1 = false, flag_lemmas = false;
  std::vector<uint32_t> t2_primes;
  unsigned jobs = 0;

  auto* cmd_catalog = app.add_subcommand("catalog", "catalog operations");
  auto* cmd_catalog_list =
      cmd_catalog->add_subcommand("list", "list the default catalog with orders");

  auto* cmd_check = app.add_subcommand("check", "test membership of a group in a class");
  cmd_check->add_option("group", group_arg, "builtin name or group file")->required();
  cmd_check->add_option("--class", class_arg, "A|N|U|pU:p|pN:p|E|X*F")->required();

  auto* cmd_residual = app.add_subcommand("residual", "compute a formation residual");
  cmd_residual->add_option("group", group_arg, "builtin name or group file")->required();
  cmd_residual->add_option("--class", class_arg, "A|N|U|pU:p|pN:p|E|X*F")->required();

  auto* cmd_fact = app.add_subcommand("factorize", "enumerate factorizations G = AB");
  cmd_fact->add_option("group", group_arg, "builtin name or group file")->required();
  cmd_fact->add_flag("--mp", flag_mp, "only mutually permutable factorizations");
  cmd_fact->add_flag("--supersoluble", flag_ss, "only supersoluble factors");
  cmd_fact->add_flag("--proper", flag_proper, "only proper factorizations");
  cmd_fact->add_flag("--oracle", flag_oracle,
                     "decide mutual permutability by the full subgroup quantification");

  auto* cmd_verify = app.add_subcommand("verify", "verify residual identities on a group");
  cmd_verify->add_option("group", group_arg, "builtin name or group file")->required();
  cmd_verify->add_flag("--t1", flag_t1, "theorem-1 claims (T1, C1.1)");
  cmd_verify->add_option("--t2", t2_primes, "theorem-2 claims for prime p (repeatable)");
  cmd_verify->add_flag("--lemmas", flag_lemmas, "lemma claims (L1-L5)");

  auto* cmd_census = app.add_subcommand("census", "run all claims over a catalog");
  cmd_census->add_option("--config", config_arg, "catalog config file");
  cmd_census->add_option("--json", json_arg, "write the JSON report here");
  cmd_census->add_option("--jobs", jobs, "worker threads (default: hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    max_order = env_uint("RESIDUA_MAX_ORDER", kDefaultMaxOrder, kHardMaxOrder);
    census_cap = env_uint("RESIDUA_CENSUS_CAP", kDefaultCensusCap, kHardMaxOrder);

    if (cmd_catalog_list->parsed()) {
      for (const CatalogEntry& e : default_catalog()) {
        GroupPtr g = resolve_group(e.source, max_order);
        std::cout << e.name << " order=" << g->order << "\n";
      }
      return 0;
    }

    if (cmd_check->parsed()) {
      GroupPtr g = resolve_group(group_arg, max_order);
      Formation f = Formation::parse(class_arg);
      std::cout << (membership(g, f) ? "true" : "false") << "\n";
      return 0;
    }

    if (cmd_residual->parsed()) {
      GroupPtr g = resolve_group(group_arg, max_order);
      Formation f = Formation::parse(class_arg);
      Subgroup r = residual(g, f);
      std::cout << "order " << r.order() << "\n";
      std::cout << "generators: " << generator_words(r) << "\n";
      return 0;
    }

    if (cmd_fact->parsed()) {
      GroupPtr g = resolve_group(group_arg, max_order);
      auto subs = all_subgroups(g, census_cap);
      auto cls = classify_subgroups(subs);
      FactorFilter filter;
      filter.proper_only = flag_proper;
      filter.supersoluble_only = flag_ss;
      auto facts = enumerate_factorizations(g, subs, cls, filter);
      for (Factorization& f : facts) {
        if (flag_oracle)
          f.mutually_permutable = is_mutually_permutable_oracle(g, f.a, f.b, subs);
        if (flag_mp && !f.mutually_permutable) continue;
        std::cout << factorization_description(f) << " |A|=" << f.a.order()
                  << " |B|=" << f.b.order() << " proper=" << (f.proper ? "yes" : "no")
                  << " mp=" << (f.mutually_permutable ? "yes" : "no")
                  << " supersoluble_factors=" << (f.supersoluble_factors ? "yes" : "no")
                  << " p_supersoluble=";
        if (f.p_supersoluble_primes.empty()) {
          std::cout << "-";
        } else {
          for (size_t i = 0; i < f.p_supersoluble_primes.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << f.p_supersoluble_primes[i];
          }
        }
        std::cout << "\n";
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      for (uint32_t p : t2_primes)
        if (!is_prime(p)) throw ParseError("--t2 needs a prime, got " + std::to_string(p));
      CensusOptions opts;
      opts.max_order = max_order;
      opts.census_cap = census_cap;
      GroupCensus gc = census_group({group_arg, group_arg}, opts);
      if (gc.truncated)
        std::cout << "note: truncated (" << gc.truncated_reason << ")\n";

      bool select_all = !flag_t1 && t2_primes.empty() && !flag_lemmas;
      auto wanted = [&](const std::string& claim) {
        if (select_all) return true;
        if (flag_t1 && (claim == "T1" || claim == "C1.1")) return true;
        for (uint32_t p : t2_primes)
          if (claim == "T2:" + std::to_string(p) || claim == "C2.1:" + std::to_string(p))
            return true;
        if (flag_lemmas && claim.rfind("L", 0) == 0) return true;
        return false;
      };
      std::vector<ClaimResult> rows;
      for (ClaimResult& r : gc.claims)
        if (wanted(r.claim)) rows.push_back(std::move(r));
      print_claims(rows);
      return claims_exit_code(rows);
    }

    if (cmd_census->parsed()) {
      CensusOptions opts;
      opts.max_order = max_order;
      opts.census_cap = census_cap;
      opts.jobs = jobs;
      auto entries = config_arg.empty() ? default_catalog() : load_catalog(config_arg);
      CensusReport report = run_census(entries, opts);
      std::cout << census_to_text(report);
      if (!json_arg.empty()) {
        std::ofstream out(json_arg, std::ios::binary);
        if (!out) throw ParseError("cannot write JSON report to '" + json_arg + "'");
        out << census_to_json(report);
      }
      return census_exit_code(report);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
