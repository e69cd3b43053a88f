#include "residua/verify.hpp"

#include <atomic>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "residua/classify.hpp"
#include "residua/error.hpp"

namespace residua {

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Holds: return "holds";
    case ClaimStatus::Fails: return "fails";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "?";
}

std::string factorization_description(const Factorization& f) {
  return "A=<" + generator_words(f.a) + "> B=<" + generator_words(f.b) + ">";
}

namespace {

// Per-group memo shared by every claim on that group.
struct GroupCache {
  GroupPtr g;
  std::map<std::string, Subgroup> res;   // residuals of G by formation name
  std::map<std::string, Subgroup> dres;  // residuals of G' by formation name
  std::unordered_map<ElemSet, std::vector<Subgroup>, ElemSetHash> factor_normals;
  std::unordered_map<ElemSet, Subgroup, ElemSetHash> sub_derived;

  explicit GroupCache(GroupPtr gp) : g(std::move(gp)) {}

  const Subgroup& residual_of(const Formation& f) {
    auto it = res.find(f.name());
    if (it == res.end()) it = res.emplace(f.name(), residual(g, f)).first;
    return it->second;
  }
  const Subgroup& derived() { return residual_of(Formation::abelian()); }
  const Subgroup& derived_residual(const Formation& f) {
    auto it = dres.find(f.name());
    if (it == dres.end()) it = dres.emplace(f.name(), residual_in(derived(), f)).first;
    return it->second;
  }
  const Subgroup& derived_of(const Subgroup& s) {
    auto it = sub_derived.find(s.members);
    if (it == sub_derived.end())
      it = sub_derived.emplace(s.members, commutator_subgroup(s, s)).first;
    return it->second;
  }
  const std::vector<Subgroup>& normals_of_factor(const Subgroup& s) {
    auto it = factor_normals.find(s.members);
    if (it == factor_normals.end()) {
      Materialized m = materialize(s);
      std::vector<Subgroup> mapped;
      for (const Subgroup& n : normal_subgroups(m.group))
        mapped.push_back(map_back(m, n.members));
      it = factor_normals.emplace(s.members, std::move(mapped)).first;
    }
    return it->second;
  }
};

ClaimResult row(const std::string& group, std::string fact, std::string claim) {
  ClaimResult r;
  r.group = group;
  r.factorization = std::move(fact);
  r.claim = std::move(claim);
  return r;
}

void skip(ClaimResult& r, std::string why) {
  r.status = ClaimStatus::Skipped;
  r.reason = std::move(why);
}

void fail(ClaimResult& r, std::string why) {
  r.status = ClaimStatus::Fails;
  r.reason = std::move(why);
}

bool has_prime(const Factorization& f, uint32_t p) {
  for (uint32_t q : f.p_supersoluble_primes)
    if (q == p) return true;
  return false;
}

ClaimResult t1_row(const std::string& gname, const Factorization& f, GroupCache& c) {
  ClaimResult r = row(gname, factorization_description(f), "T1");
  if (!f.supersoluble_factors) {
    skip(r, "factors not both supersoluble");
    return r;
  }
  if (!f.mutually_permutable) {
    skip(r, "not mutually permutable");
    return r;
  }
  const Subgroup& gu = c.residual_of(Formation::supersoluble());
  const Subgroup& gpn = c.derived_residual(Formation::nilpotent());
  Subgroup ab = commutator_subgroup(f.a, f.b);
  Subgroup abn = residual_in(ab, Formation::nilpotent());
  r.witness = {{"G^U", gu.order()},
               {"G'", c.derived().order()},
               {"(G')^N", gpn.order()},
               {"[A,B]", ab.order()},
               {"[A,B]^N", abn.order()}};
  if (!(is_normal(gpn) && is_normal(abn)))
    fail(r, "mapped nilpotent residual not normal in G");
  else if (!(gu.members == gpn.members && gu.members == abn.members))
    fail(r, "G^U, (G')^N, [A,B]^N not all equal");
  return r;
}

ClaimResult t2_row(const std::string& gname, const Factorization& f, uint32_t p,
                   GroupCache& c) {
  ClaimResult r = row(gname, factorization_description(f), "T2:" + std::to_string(p));
  if (!has_prime(f, p)) {
    skip(r, "factors not both " + std::to_string(p) + "-supersoluble");
    return r;
  }
  if (!f.mutually_permutable) {
    skip(r, "not mutually permutable");
    return r;
  }
  Formation pu = Formation::p_supersoluble(p);
  Formation pn = Formation::p_nilpotent(p);
  const Subgroup& gpu = c.residual_of(pu);
  const Subgroup& gppn = c.derived_residual(pn);
  Subgroup ab = commutator_subgroup(f.a, f.b);
  Subgroup abpn = residual_in(ab, pn);
  r.witness = {{"G^pU", gpu.order()},
               {"G'", c.derived().order()},
               {"(G')^pN", gppn.order()},
               {"[A,B]", ab.order()},
               {"[A,B]^pN", abpn.order()}};
  if (!(is_normal(gppn) && is_normal(abpn)))
    fail(r, "mapped p-nilpotent residual not normal in G");
  else if (!(gpu.members == gppn.members && gpu.members == abpn.members))
    fail(r, "G^pU, (G')^pN, [A,B]^pN not all equal");
  return r;
}

ClaimResult c11_row(const std::string& gname, const Factorization& f, GroupCache& c) {
  ClaimResult r = row(gname, factorization_description(f), "C1.1");
  if (!f.supersoluble_factors) {
    skip(r, "factors not both supersoluble");
    return r;
  }
  if (!f.mutually_permutable) {
    skip(r, "not mutually permutable");
    return r;
  }
  Subgroup ab = commutator_subgroup(f.a, f.b);
  if (!is_nilpotent_sub(ab)) {
    skip(r, "[A,B] not nilpotent");
    return r;
  }
  const Subgroup& gu = c.residual_of(Formation::supersoluble());
  r.witness = {{"[A,B]", ab.order()}, {"G^U", gu.order()}};
  if (!gu.is_trivial()) fail(r, "G not supersoluble");
  return r;
}

ClaimResult c21_row(const std::string& gname, const Factorization& f, uint32_t p,
                    GroupCache& c) {
  ClaimResult r = row(gname, factorization_description(f), "C2.1:" + std::to_string(p));
  if (!has_prime(f, p)) {
    skip(r, "factors not both " + std::to_string(p) + "-supersoluble");
    return r;
  }
  if (!f.mutually_permutable) {
    skip(r, "not mutually permutable");
    return r;
  }
  Subgroup ab = commutator_subgroup(f.a, f.b);
  if (!is_p_nilpotent_sub(ab, p)) {
    skip(r, "[A,B] not " + std::to_string(p) + "-nilpotent");
    return r;
  }
  const Subgroup& gpu = c.residual_of(Formation::p_supersoluble(p));
  r.witness = {{"[A,B]", ab.order()}, {"G^pU", gpu.order()}};
  if (!gpu.is_trivial()) fail(r, "G not " + std::to_string(p) + "-supersoluble");
  return r;
}

ClaimResult l11_row(const std::string& gname, const Factorization& f, GroupCache&) {
  ClaimResult r = row(gname, factorization_description(f), "L1.1");
  Subgroup ab = commutator_subgroup(f.a, f.b);
  r.witness = {{"[A,B]", ab.order()}};
  if (!is_normal(ab)) fail(r, "[A,B] not normal in G");
  return r;
}

ClaimResult l12_row(const std::string& gname, const Factorization& f, GroupCache& c) {
  ClaimResult r = row(gname, factorization_description(f), "L1.2");
  Subgroup ab = commutator_subgroup(f.a, f.b);
  uint32_t checked = 0;
  for (const Subgroup* side : {&f.a, &f.b}) {
    for (const Subgroup& n1 : c.normals_of_factor(*side)) {
      Subgroup prod = join(n1, ab);
      ++checked;
      if (!is_normal(prod)) {
        r.witness = {{"A1", n1.order()}, {"[A,B]", ab.order()}, {"A1[A,B]", prod.order()}};
        fail(r, "A1[A,B] not normal in G for some A1 normal in a factor");
        return r;
      }
    }
  }
  r.witness = {{"instances", checked}};
  return r;
}

ClaimResult l13_row(const std::string& gname, const Factorization& f, GroupCache& c) {
  ClaimResult r = row(gname, factorization_description(f), "L1.3");
  Subgroup ab = commutator_subgroup(f.a, f.b);
  const Subgroup& da = c.derived_of(f.a);
  const Subgroup& db = c.derived_of(f.b);
  Subgroup rhs = join(da, join(db, ab));
  const Subgroup& gp = c.derived();
  r.witness = {{"G'", gp.order()},
               {"A'", da.order()},
               {"B'", db.order()},
               {"[A,B]", ab.order()},
               {"A'B'[A,B]", rhs.order()}};
  if (gp.members != rhs.members) fail(r, "G' != A'B'[A,B]");
  return r;
}

ClaimResult l4_row(const std::string& gname, const Factorization& f, GroupCache& c) {
  ClaimResult r = row(gname, factorization_description(f), "L4");
  if (!f.supersoluble_factors) {
    skip(r, "factors not both supersoluble");
    return r;
  }
  const Subgroup& gu = c.residual_of(Formation::supersoluble());
  Subgroup ab = commutator_subgroup(f.a, f.b);
  r.witness = {{"G^U", gu.order()}, {"[A,B]", ab.order()}};
  if (!gu.members.is_subset_of(ab.members)) fail(r, "G^U not contained in [A,B]");
  return r;
}

ClaimResult l21_row(const std::string& gname, GroupCache& c,
                    const std::vector<Subgroup>& lattice,
                    const std::vector<Formation>& fs) {
  ClaimResult r = row(gname, "-", "L2.1");
  uint32_t checked = 0;
  for (const Subgroup& k : lattice) {
    QuotientMap q = quotient_group(c.g, k);
    for (const Formation& fm : fs) {
      Subgroup lhs = image_subgroup(q, c.residual_of(fm));
      Subgroup rhs = residual(q.target, fm);
      ++checked;
      if (lhs.members != rhs.members) {
        r.witness = {{"K", k.order()}, {"G^F K/K", lhs.order()}, {"(G/K)^F", rhs.order()}};
        fail(r, "quotient residual mismatch for F=" + fm.name());
        return r;
      }
    }
  }
  r.witness = {{"instances", checked}};
  return r;
}

ClaimResult l22_row(const std::string& gname, GroupCache& c,
                    const std::vector<Formation>& fitting) {
  ClaimResult r = row(gname, "-", "L2.2");
  uint32_t checked = 0;
  for (const Formation& x : fitting) {
    Formation comp = Formation::composite(x, Formation::abelian());
    Subgroup lhs = residual_generic(c.g, comp);
    const Subgroup& rhs = c.residual_of(comp);  // computed as (G^A)^X
    ++checked;
    if (lhs.members != rhs.members) {
      r.witness = {{"G^(XA) lattice", lhs.order()}, {"(G^A)^X", rhs.order()}};
      fail(r, "composite residual mismatch for X=" + x.name());
      return r;
    }
  }
  r.witness = {{"instances", checked}};
  return r;
}

ClaimResult l23_row(const std::string& gname, GroupCache& c,
                    const std::vector<uint32_t>& primes) {
  ClaimResult r = row(gname, "-", "L2.3");
  uint32_t checked = 0;
  Formation na = Formation::composite(Formation::nilpotent(), Formation::abelian());
  const Subgroup& gna = c.residual_of(na);
  const Subgroup& gu = c.residual_of(Formation::supersoluble());
  ++checked;
  if (!gna.members.is_subset_of(gu.members)) {
    r.witness = {{"G^(NA)", gna.order()}, {"G^U", gu.order()}};
    fail(r, "G^(NA) not contained in G^U");
    return r;
  }
  for (uint32_t p : primes) {
    const Subgroup& gpu = c.residual_of(Formation::p_supersoluble(p));
    const Subgroup& gpn = c.residual_of(Formation::p_nilpotent(p));
    ++checked;
    if (!gpu.members.is_subset_of(gpn.members)) {
      r.witness = {{"G^pU", gpu.order()}, {"G^pN", gpn.order()}};
      fail(r, "G^pU not contained in G^pN for p=" + std::to_string(p));
      return r;
    }
  }
  r.witness = {{"instances", checked}};
  return r;
}

ClaimResult l3_row(const std::string& gname, GroupCache& c,
                   const std::vector<Subgroup>* all_subs,
                   const std::vector<uint32_t>& primes) {
  ClaimResult r = row(gname, "-", "L3");
  if (c.g->order > 48) {
    skip(r, "group order above 48");
    return r;
  }
  if (!all_subs) {
    skip(r, "subgroup lattice unavailable");
    return r;
  }
  uint32_t checked = 0;
  for (const Subgroup& h : *all_subs) {
    if (!is_subnormal(h)) continue;
    Subgroup cl = normal_closure(h);
    if (is_nilpotent_sub(h)) {
      ++checked;
      if (!is_nilpotent_sub(cl)) {
        r.witness = {{"H", h.order()}, {"H^G", cl.order()}};
        fail(r, "normal closure of nilpotent subnormal subgroup not nilpotent");
        return r;
      }
    }
    for (uint32_t p : primes) {
      if (is_p_nilpotent_sub(h, p)) {
        ++checked;
        if (!is_p_nilpotent_sub(cl, p)) {
          r.witness = {{"H", h.order()}, {"H^G", cl.order()}};
          fail(r, "normal closure of " + std::to_string(p) +
                      "-nilpotent subnormal subgroup not " + std::to_string(p) +
                      "-nilpotent");
          return r;
        }
      }
    }
  }
  r.witness = {{"instances", checked}};
  return r;
}

ClaimResult l5_row(const std::string& gname, GroupCache& c,
                   const std::vector<Subgroup>& lattice,
                   const std::vector<Formation>& fitting) {
  ClaimResult r = row(gname, "-", "L5");
  uint32_t checked = 0;
  std::vector<std::map<std::string, Subgroup>> memo(lattice.size());
  auto res_of = [&](size_t i, const Formation& x) -> const Subgroup& {
    auto it = memo[i].find(x.name());
    if (it == memo[i].end()) it = memo[i].emplace(x.name(), residual_in(lattice[i], x)).first;
    return it->second;
  };
  for (size_t i = 0; i < lattice.size(); ++i) {
    for (size_t j = i; j < lattice.size(); ++j) {
      uint64_t lhs = static_cast<uint64_t>(lattice[i].order()) * lattice[j].order();
      uint64_t rhs =
          static_cast<uint64_t>(c.g->order) * meet(lattice[i], lattice[j]).order();
      if (lhs != rhs) continue;  // product does not cover G
      for (const Formation& x : fitting) {
        Subgroup sum = join(res_of(i, x), res_of(j, x));
        const Subgroup& gx = c.residual_of(x);
        ++checked;
        if (sum.members != gx.members) {
          r.witness = {{"A", lattice[i].order()},
                       {"B", lattice[j].order()},
                       {"G^X", gx.order()},
                       {"A^X B^X", sum.order()}};
          fail(r, "G^X != A^X B^X for X=" + x.name());
          return r;
        }
      }
    }
  }
  r.witness = {{"instances", checked}};
  return r;
}

std::vector<ClaimResult> group_rows(const std::string& gname, GroupCache& c,
                                    const std::vector<Subgroup>* all_subs) {
  auto primes = prime_divisors(c.g->order);
  std::vector<Formation> l21_formations = {Formation::abelian(), Formation::nilpotent(),
                                           Formation::supersoluble()};
  std::vector<Formation> fitting = {Formation::nilpotent()};
  for (uint32_t p : primes) {
    l21_formations.push_back(Formation::p_nilpotent(p));
    fitting.push_back(Formation::p_nilpotent(p));
  }
  auto lattice = normal_subgroups(c.g);
  std::vector<ClaimResult> out;
  out.push_back(l21_row(gname, c, lattice, l21_formations));
  out.push_back(l22_row(gname, c, fitting));
  out.push_back(l23_row(gname, c, primes));
  out.push_back(l3_row(gname, c, all_subs, primes));
  out.push_back(l5_row(gname, c, lattice, fitting));
  return out;
}

}  // namespace

std::vector<ClaimResult> verify_theorem(const std::string& group_name,
                                        const Factorization& f, TheoremMode mode,
                                        uint32_t p) {
  GroupCache c(f.parent);
  if (mode == TheoremMode::T1)
    return {t1_row(group_name, f, c), c11_row(group_name, f, c)};
  if (!is_prime(p)) throw DomainError("T2 needs a prime p");
  return {t2_row(group_name, f, p, c), c21_row(group_name, f, p, c)};
}

std::vector<ClaimResult> verify_factorization_lemmas(const std::string& group_name,
                                                     const Factorization& f) {
  GroupCache c(f.parent);
  return {l11_row(group_name, f, c), l12_row(group_name, f, c),
          l13_row(group_name, f, c), l4_row(group_name, f, c)};
}

std::vector<ClaimResult> verify_group_lemmas(const std::string& group_name,
                                             const GroupPtr& g,
                                             const std::vector<Subgroup>* all_subs) {
  GroupCache c(g);
  return group_rows(group_name, c, all_subs);
}

GroupCensus census_group(const CatalogEntry& entry, const CensusOptions& opts) {
  GroupCensus gc;
  gc.name = entry.name;
  GroupPtr g;
  try {
    g = resolve_group(entry.source, opts.max_order);
  } catch (const CapError& e) {
    gc.truncated = true;
    gc.truncated_reason = e.what();
    return gc;
  }
  gc.order = g->order;

  GroupCache cache(g);
  std::vector<Subgroup> subs;
  bool have_subs = false;
  try {
    subs = all_subgroups(g, opts.census_cap);
    have_subs = true;
    gc.subgroup_count = static_cast<uint32_t>(subs.size());
  } catch (const CapError& e) {
    gc.truncated = true;
    gc.truncated_reason = e.what();
  }

  for (ClaimResult& r : group_rows(gc.name, cache, have_subs ? &subs : nullptr))
    gc.claims.push_back(std::move(r));

  if (!have_subs) return gc;

  auto cls = classify_subgroups(subs);
  auto facts = enumerate_factorizations(g, subs, cls, {});
  gc.factorization_count = static_cast<uint32_t>(facts.size());
  auto primes = prime_divisors(g->order);

  for (const Factorization& f : facts) {
    if (f.mutually_permutable && f.supersoluble_factors) ++gc.mp_supersoluble_count;
    gc.claims.push_back(t1_row(gc.name, f, cache));
    for (uint32_t p : primes) gc.claims.push_back(t2_row(gc.name, f, p, cache));
    gc.claims.push_back(c11_row(gc.name, f, cache));
    for (uint32_t p : primes) gc.claims.push_back(c21_row(gc.name, f, p, cache));
    gc.claims.push_back(l11_row(gc.name, f, cache));
    gc.claims.push_back(l12_row(gc.name, f, cache));
    gc.claims.push_back(l13_row(gc.name, f, cache));
    gc.claims.push_back(l4_row(gc.name, f, cache));
  }

  // Relaxation probe: with G^U != (G')^N, every supersoluble non-MP
  // factorization witnesses that the permutability hypothesis matters.
  const Subgroup& gu = cache.residual_of(Formation::supersoluble());
  const Subgroup& gpn = cache.derived_residual(Formation::nilpotent());
  if (gu.members != gpn.members) {
    for (const Factorization& f : facts) {
      if (f.supersoluble_factors && !f.mutually_permutable)
        gc.relaxation.push_back(
            {gc.name, factorization_description(f), gu.order(), gpn.order()});
    }
  }
  return gc;
}

CensusReport run_census(const std::vector<CatalogEntry>& entries,
                        const CensusOptions& opts) {
  CensusReport report;
  report.catalog = entries;
  report.options = opts;
  report.groups.resize(entries.size());

  unsigned jobs = opts.jobs ? opts.jobs : std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  jobs = static_cast<unsigned>(
      std::min<size_t>(jobs, std::max<size_t>(entries.size(), 1)));

  std::atomic<size_t> cursor{0};
  std::vector<std::exception_ptr> errors(entries.size());
  auto worker = [&] {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= entries.size()) break;
      try {
        report.groups[i] = census_group(entries[i], opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (const GroupCensus& gc : report.groups) {
    if (gc.truncated) ++report.truncated_groups;
    for (const ClaimResult& r : gc.claims) {
      switch (r.status) {
        case ClaimStatus::Holds: ++report.holds; break;
        case ClaimStatus::Fails: ++report.fails; break;
        case ClaimStatus::Skipped: ++report.skipped; break;
      }
    }
  }
  return report;
}

int census_exit_code(const CensusReport& r) { return r.fails > 0 ? 1 : 0; }

std::string census_to_text(const CensusReport& r) {
  std::ostringstream out;
  out << "residua census\n";
  out << "config: max_order=" << r.options.max_order
      << " census_cap=" << r.options.census_cap << " groups=" << r.groups.size()
      << "\n\n";
  for (const GroupCensus& gc : r.groups) {
    uint64_t holds = 0, fails = 0, skipped = 0;
    for (const ClaimResult& c : gc.claims) {
      if (c.status == ClaimStatus::Holds) ++holds;
      if (c.status == ClaimStatus::Fails) ++fails;
      if (c.status == ClaimStatus::Skipped) ++skipped;
    }
    out << gc.name << " order=" << gc.order << " subgroups=" << gc.subgroup_count
        << " factorizations=" << gc.factorization_count
        << " mp_supersoluble=" << gc.mp_supersoluble_count << " holds=" << holds
        << " skipped=" << skipped << " fails=" << fails;
    if (gc.truncated) out << " TRUNCATED (" << gc.truncated_reason << ")";
    out << "\n";
  }

  out << "\nfailures:\n";
  bool any_fail = false;
  for (const GroupCensus& gc : r.groups) {
    for (const ClaimResult& c : gc.claims) {
      if (c.status != ClaimStatus::Fails) continue;
      any_fail = true;
      out << "  " << c.group << " " << c.claim << " " << c.factorization << " : "
          << c.reason << " {";
      for (size_t i = 0; i < c.witness.size(); ++i) {
        if (i) out << ", ";
        out << c.witness[i].first << "=" << c.witness[i].second;
      }
      out << "}\n";
    }
  }
  if (!any_fail) out << "  (none)\n";

  out << "\nrelaxation probe (supersoluble factors, not mutually permutable, G^U != (G')^N):\n";
  bool any_hit = false;
  for (const GroupCensus& gc : r.groups) {
    for (const RelaxationHit& h : gc.relaxation) {
      any_hit = true;
      out << "  " << h.group << " " << h.factorization << " : |G^U|=" << h.gu_order
          << " |(G')^N|=" << h.gprime_n_order << "\n";
    }
  }
  if (!any_hit) out << "  (none)\n";

  out << "\nsummary: claims=" << (r.holds + r.fails + r.skipped) << " holds=" << r.holds
      << " skipped=" << r.skipped << " fails=" << r.fails
      << " truncated_groups=" << r.truncated_groups << "\n";
  return out.str();
}

std::string census_to_json(const CensusReport& r) {
  nlohmann::json j;
  j["config"]["max_order"] = r.options.max_order;
  j["config"]["census_cap"] = r.options.census_cap;
  {
    auto names = nlohmann::json::array();
    for (const CatalogEntry& e : r.catalog) names.push_back(e.name);
    j["config"]["catalog"] = std::move(names);
  }
  auto groups = nlohmann::json::array();
  auto claims = nlohmann::json::array();
  auto probe = nlohmann::json::array();
  for (const GroupCensus& gc : r.groups) {
    nlohmann::json g;
    g["group"] = gc.name;
    g["order"] = gc.order;
    g["subgroups"] = gc.subgroup_count;
    g["factorizations"] = gc.factorization_count;
    g["mp_supersoluble"] = gc.mp_supersoluble_count;
    g["truncated"] = gc.truncated;
    if (gc.truncated) g["truncated_reason"] = gc.truncated_reason;
    groups.push_back(std::move(g));
    for (const ClaimResult& c : gc.claims) {
      nlohmann::json row;
      row["group"] = c.group;
      row["factorization"] = c.factorization;
      row["claim"] = c.claim;
      row["status"] = to_string(c.status);
      if (!c.reason.empty()) row["reason"] = c.reason;
      auto w = nlohmann::json::object();
      for (const auto& [k, v] : c.witness) w[k] = v;
      row["witness_orders"] = std::move(w);
      claims.push_back(std::move(row));
    }
    for (const RelaxationHit& h : gc.relaxation) {
      nlohmann::json row;
      row["group"] = h.group;
      row["factorization"] = h.factorization;
      row["gu_order"] = h.gu_order;
      row["gprime_n_order"] = h.gprime_n_order;
      probe.push_back(std::move(row));
    }
  }
  j["groups"] = std::move(groups);
  j["claims"] = std::move(claims);
  j["relaxation_probe"] = std::move(probe);
  j["summary"]["holds"] = r.holds;
  j["summary"]["fails"] = r.fails;
  j["summary"]["skipped"] = r.skipped;
  j["summary"]["truncated_groups"] = r.truncated_groups;
  return j.dump(1) + "\n";
}

}  // namespace residua
