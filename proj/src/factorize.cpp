#include "residua/factorize.hpp"

#include <algorithm>
#include <unordered_set>

#include "residua/classify.hpp"
#include "residua/error.hpp"
#include "residua/formation.hpp"

namespace residua {

bool is_product(const GroupPtr& g, const Subgroup& a, const Subgroup& b) {
  if (a.parent != g || b.parent != g)
    throw DomainError("factors belong to a different group");
  uint64_t lhs = static_cast<uint64_t>(a.order()) * b.order();
  uint64_t rhs = static_cast<uint64_t>(g->order) * meet(a, b).order();
  return lhs == rhs;
}

bool permutes(const Subgroup& u, const Subgroup& b) {
  if (u.parent != b.parent) throw DomainError("subgroups have different parent groups");
  return set_product(u, b) == set_product(b, u);
}

bool is_mutually_permutable(const GroupPtr& g, const Subgroup& a, const Subgroup& b) {
  if (!is_product(g, a, b))
    throw DomainError("is_mutually_permutable requires a product factorization");
  std::unordered_set<ElemSet, ElemSetHash> tried;
  auto cyclic_side = [&](const Subgroup& from, const Subgroup& fixed) {
    tried.clear();
    for (uint16_t x : from.members.to_vector()) {
      Subgroup cyc = cyclic_subgroup(g, x);
      if (!tried.insert(cyc.members).second) continue;
      if (!permutes(cyc, fixed)) return false;
    }
    return true;
  };
  return cyclic_side(a, b) && cyclic_side(b, a);
}

bool is_mutually_permutable_oracle(const GroupPtr& g, const Subgroup& a,
                                   const Subgroup& b,
                                   const std::vector<Subgroup>& all_subs) {
  if (!is_product(g, a, b))
    throw DomainError("is_mutually_permutable_oracle requires a product factorization");
  for (const Subgroup& s : all_subs) {
    if (s.members.is_subset_of(a.members) && !permutes(s, b)) return false;
    if (s.members.is_subset_of(b.members) && !permutes(a, s)) return false;
  }
  return true;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, uint32_t census_cap) {
  if (g->order > census_cap)
    throw CapError("subgroup census cap " + std::to_string(census_cap) +
                   " exceeded by group of order " + std::to_string(g->order));

  std::unordered_set<ElemSet, ElemSetHash> seen;
  std::vector<Subgroup> all;
  auto add = [&](Subgroup s) -> bool {
    if (seen.insert(s.members).second) {
      all.push_back(std::move(s));
      return true;
    }
    return false;
  };

  std::vector<Subgroup> base;
  for (uint32_t x = 0; x < g->order; ++x) {
    Subgroup cyc = cyclic_subgroup(g, static_cast<uint16_t>(x));
    if (add(cyc)) base.push_back(std::move(cyc));
  }

  std::vector<Subgroup> frontier = base;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& f : frontier) {
      for (const Subgroup& b : base) {
        if (b.members.is_subset_of(f.members)) continue;
        Subgroup j = join(f, b);
        if (add(j)) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }

  std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    uint32_t oa = a.order(), ob = b.order();
    if (oa != ob) return oa < ob;
    return ElemSet::compare(a.members, b.members) < 0;
  });
  return all;
}

std::vector<SubgroupClassification> classify_subgroups(const std::vector<Subgroup>& subs) {
  std::vector<SubgroupClassification> out(subs.size());
  if (subs.empty()) return out;
  auto primes = prime_divisors(subs.front().parent->order);
  for (size_t i = 0; i < subs.size(); ++i) {
    SubgroupClassification& c = out[i];
    c.primes = primes;
    c.nilpotent = is_nilpotent_sub(subs[i]);
    GroupPtr as_group = materialize(subs[i]).group;
    auto factors = chief_series(as_group).factor_orders;
    c.supersoluble = std::all_of(factors.begin(), factors.end(),
                                 [](uint32_t f) { return is_prime(f); });
    c.p_supersoluble.resize(primes.size());
    c.p_nilpotent.resize(primes.size());
    for (size_t pi = 0; pi < primes.size(); ++pi) {
      uint32_t p = primes[pi];
      c.p_supersoluble[pi] = std::all_of(factors.begin(), factors.end(),
                                         [p](uint32_t f) { return f % p != 0 || f == p; });
      c.p_nilpotent[pi] = is_p_nilpotent_sub(subs[i], p);
    }
  }
  return out;
}

std::vector<Factorization> enumerate_factorizations(
    const GroupPtr& g, const std::vector<Subgroup>& subs,
    const std::vector<SubgroupClassification>& cls, const FactorFilter& filter) {
  std::vector<Factorization> out;
  auto primes = prime_divisors(g->order);
  // subs is sorted ascending, so i <= j gives the canonical smaller-first pair.
  for (size_t i = 0; i < subs.size(); ++i) {
    for (size_t j = i; j < subs.size(); ++j) {
      if (!is_product(g, subs[i], subs[j])) continue;
      Factorization f;
      f.parent = g;
      f.a = subs[i];
      f.b = subs[j];
      f.proper = !subs[i].is_full() && !subs[j].is_full();
      f.supersoluble_factors = cls[i].supersoluble && cls[j].supersoluble;
      for (size_t pi = 0; pi < primes.size(); ++pi)
        if (cls[i].p_supersoluble[pi] && cls[j].p_supersoluble[pi])
          f.p_supersoluble_primes.push_back(primes[pi]);
      if (filter.proper_only && !f.proper) continue;
      if (filter.supersoluble_only && !f.supersoluble_factors) continue;
      f.mutually_permutable = is_mutually_permutable(g, f.a, f.b);
      if (filter.mp_only && !f.mutually_permutable) continue;
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<Factorization> factorizations(const GroupPtr& g, const FactorFilter& filter,
                                          uint32_t census_cap) {
  auto subs = all_subgroups(g, census_cap);
  auto cls = classify_subgroups(subs);
  return enumerate_factorizations(g, subs, cls, filter);
}

}  // namespace residua
