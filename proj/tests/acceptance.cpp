// Acceptance suite: runs every acceptance criterion over the default catalog
// and prints one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "residua/catalog.hpp"
#include "residua/classify.hpp"
#include "residua/verify.hpp"

using namespace residua;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - "
            << detail << "\n";
  if (!pass) ++g_failures;
}

uint16_t index_of(const GroupPtr& g, const std::string& cycles) {
  Perm p = parse_permutation(cycles, g->degree);
  for (uint32_t i = 0; i < g->order; ++i)
    if (g->elements[i] == p) return static_cast<uint16_t>(i);
  throw std::logic_error("element not found");
}

struct ClaimTally {
  uint64_t holds = 0;
  uint64_t fails = 0;
  uint64_t skipped = 0;
};

ClaimTally tally(const CensusReport& r, const std::string& prefix) {
  ClaimTally t;
  for (const GroupCensus& gc : r.groups) {
    for (const ClaimResult& c : gc.claims) {
      if (c.claim.rfind(prefix, 0) != 0) continue;
      if (c.status == ClaimStatus::Holds) ++t.holds;
      if (c.status == ClaimStatus::Fails) ++t.fails;
      if (c.status == ClaimStatus::Skipped) ++t.skipped;
    }
  }
  return t;
}

}  // namespace

int main() {
  const auto catalog = default_catalog();
  const CensusOptions opts;

  // Criteria 1-4 read off one full census run.
  auto t0 = std::chrono::steady_clock::now();
  CensusReport census = run_census(catalog, opts);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  // criterion 1: Theorem 1 over every mutually permutable supersoluble
  // factorization, zero failures, census under five minutes.
  {
    ClaimTally t1 = tally(census, "T1");
    std::ostringstream d;
    d << "theorem 1: " << t1.holds << " factorizations verified, " << t1.fails
      << " failures, census " << static_cast<int>(seconds * 1000) << " ms";
    report(1, t1.fails == 0 && t1.holds > 0 && seconds < 300.0 &&
                  census.truncated_groups == 0,
           d.str());
  }

  // criterion 2: Theorem 2 for every prime dividing |G|.
  {
    ClaimTally t2 = tally(census, "T2:");
    std::ostringstream d;
    d << "theorem 2: " << t2.holds << " instances verified, " << t2.fails << " failures";
    report(2, t2.fails == 0 && t2.holds > 0, d.str());
  }

  // criterion 3: Lemma 4 over every supersoluble-factor product (mutual
  // permutability not required), plus the pinned (A4; V4, C3) instance.
  {
    ClaimTally l4 = tally(census, "L4");
    bool pinned = false;
    GroupPtr a4 = build_builtin("A4");
    Subgroup v4 = normal_subgroups(a4)[1];
    Subgroup c3 = cyclic_subgroup(a4, index_of(a4, "(1 2 3)"));
    if (v4.order() == 4 && is_product(a4, v4, c3)) {
      Subgroup gu = residual(a4, Formation::supersoluble());
      Subgroup ab = commutator_subgroup(v4, c3);
      pinned = gu.members == ab.members && gu.order() == 4;
    }
    std::ostringstream d;
    d << "lemma 4: " << l4.holds << " products verified, " << l4.fails
      << " failures; (A4; V4, C3) gives G^U = [A,B] of order 4: "
      << (pinned ? "yes" : "no");
    report(3, l4.fails == 0 && l4.holds > 0 && pinned, d.str());
  }

  // criterion 4: Lemma 1/2/3/5 suites plus the remaining library invariants
  // (normal closure as a lattice meet, commutator symmetry, quotient laws).
  {
    uint64_t lemma_fails = 0, lemma_holds = 0;
    for (const std::string& prefix : {"L1.", "L2.", "L3", "L5"}) {
      ClaimTally t = tally(census, prefix);
      lemma_fails += t.fails;
      lemma_holds += t.holds;
    }

    uint64_t invariant_checks = 0;
    bool invariants_ok = true;
    for (const CatalogEntry& e : catalog) {
      GroupPtr g = resolve_group(e.source, opts.max_order);
      auto lattice = normal_subgroups(g);
      auto subs = all_subgroups(g, opts.census_cap);

      // normal_closure(H) is the meet of the normal subgroups containing H
      for (const Subgroup& h : subs) {
        Subgroup expect = full_subgroup(g);
        for (const Subgroup& n : lattice)
          if (h.members.is_subset_of(n.members)) expect = meet(expect, n);
        if (normal_closure(h).members != expect.members) invariants_ok = false;
        ++invariant_checks;
      }

      // commutator symmetry on consecutive lattice pairs
      for (size_t i = 0; i + 1 < subs.size(); ++i) {
        if (commutator_subgroup(subs[i], subs[i + 1]).members !=
            commutator_subgroup(subs[i + 1], subs[i]).members)
          invariants_ok = false;
        ++invariant_checks;
      }

      // quotient laws over every normal subgroup
      for (const Subgroup& n : lattice) {
        QuotientMap q = quotient_group(g, n);
        if (q.target->order * n.order() != g->order) invariants_ok = false;
        for (uint32_t i = 0; i < g->order && invariants_ok; ++i)
          for (uint32_t j = 0; j < g->order; ++j)
            if (q.image[g->mul(static_cast<uint16_t>(i), static_cast<uint16_t>(j))] !=
                q.target->mul(q.image[i], q.image[j])) {
              invariants_ok = false;
              break;
            }
        ++invariant_checks;
      }
    }

    std::ostringstream d;
    d << "lemmas 1/2/3/5: " << lemma_holds << " rows verified, " << lemma_fails
      << " failures; " << invariant_checks << " structural invariant checks "
      << (invariants_ok ? "clean" : "BROKEN");
    report(4, lemma_fails == 0 && lemma_holds > 0 && invariants_ok, d.str());
  }

  // criterion 5: oracle equivalences, exact agreement.
  {
    uint64_t checks = 0;
    bool ok = true;
    for (const CatalogEntry& e : catalog) {
      GroupPtr g = resolve_group(e.source, opts.max_order);

      // (a) generic lattice residual == fast path for A and N
      for (const char* fname : {"A", "N"}) {
        Formation f = Formation::parse(fname);
        if (residual(g, f).members != residual_generic(g, f).members) ok = false;
        ++checks;
      }

      // (b) cyclic-reduction mutual permutability == full subgroup oracle
      auto subs = all_subgroups(g, opts.census_cap);
      for (size_t i = 0; i < subs.size(); ++i)
        for (size_t j = i; j < subs.size(); ++j) {
          if (!is_product(g, subs[i], subs[j])) continue;
          if (is_mutually_permutable(g, subs[i], subs[j]) !=
              is_mutually_permutable_oracle(g, subs[i], subs[j], subs))
            ok = false;
          ++checks;
        }

      // (c) p-nilpotency via p'-generation == normal-lattice oracle
      auto lattice = normal_subgroups(g);
      for (uint32_t p : prime_divisors(g->order)) {
        bool lattice_says = false;
        for (const Subgroup& n : lattice)
          if (n.order() == p_prime_part(g->order, p)) lattice_says = true;
        if (is_p_nilpotent(g, p) != lattice_says) ok = false;
        ++checks;
      }
    }
    std::ostringstream d;
    d << "oracle equivalence: " << checks << " comparisons, exact agreement: "
      << (ok ? "yes" : "no");
    report(5, ok, d.str());
  }

  // criterion 6: pinned regression values.
  {
    bool ok = true;
    std::ostringstream d;

    GroupPtr a4 = build_builtin("A4");
    GroupPtr s4 = build_builtin("S4");
    uint32_t r1 = residual(a4, Formation::supersoluble()).order();
    uint32_t r1g = residual_generic(a4, Formation::supersoluble()).order();
    uint32_t r2 = residual(s4, Formation::supersoluble()).order();
    if (r1 != 4 || r1g != 4 || r2 != 4) ok = false;

    auto ds = derived_series(s4).orders();
    if (ds != std::vector<uint32_t>{24, 12, 4, 1}) ok = false;

    FactorFilter mp_ss;
    mp_ss.mp_only = true;
    mp_ss.supersoluble_only = true;
    bool a4_empty = factorizations(a4, mp_ss).empty();
    if (!a4_empty) ok = false;

    bool s3_ok = false;
    GroupPtr s3 = build_builtin("S3");
    for (const Factorization& f : factorizations(s3, mp_ss)) {
      if (f.a.order() != 2 || f.b.order() != 3) continue;
      auto rows = verify_theorem("S3", f, TheoremMode::T1);
      if (rows[0].status == ClaimStatus::Holds) {
        bool trivial = true;
        for (const auto& [k, v] : rows[0].witness)
          if ((k == "G^U" || k == "(G')^N" || k == "[A,B]^N") && v != 1) trivial = false;
        s3_ok = trivial;
      }
    }
    if (!s3_ok) ok = false;

    d << "pinned values: |A4^U|=" << r1 << " |S4^U|=" << r2 << " derived(S4)=[";
    for (size_t i = 0; i < ds.size(); ++i) d << (i ? "," : "") << ds[i];
    d << "] A4 mp-supersoluble factorizations: " << (a4_empty ? "none" : "FOUND")
      << "; (S3; A3, C2) trivial T1 residuals: " << (s3_ok ? "yes" : "no");
    report(6, ok, d.str());
  }

  // criterion 7: byte-identical census output across runs and thread counts.
  {
    CensusOptions par = opts;
    par.jobs = 4;
    CensusOptions seq = opts;
    seq.jobs = 1;
    std::string j1 = census_to_json(run_census(catalog, par));
    std::string j2 = census_to_json(run_census(catalog, par));
    std::string j3 = census_to_json(run_census(catalog, seq));
    bool ok = (j1 == j2) && (j1 == j3);
    std::ostringstream d;
    d << "determinism: " << j1.size() << "-byte JSON reports identical across "
      << "repeated parallel runs and a sequential run: " << (ok ? "yes" : "no");
    report(7, ok, d.str());
  }

  if (g_failures) {
    std::cout << g_failures << " criterion(s) failing\n";
    return 1;
  }
  std::cout << "all acceptance criteria pass\n";
  return 0;
}
