#include "residua/classify.hpp"

#include "residua/error.hpp"
#include "residua/formation.hpp"

namespace residua {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint32_t> prime_divisors(uint32_t n) {
  std::vector<uint32_t> out;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

uint32_t p_prime_part(uint32_t n, uint32_t p) {
  while (n % p == 0) n /= p;
  return n;
}

ChiefFactorProfile chief_series(const GroupPtr& g) {
  ChiefFactorProfile out;
  out.series.parent = g;
  out.series.kind = SeriesKind::Chief;
  Subgroup cur = trivial_subgroup(g);
  out.series.terms.push_back(cur);
  while (cur.order() < g->order) {
    QuotientMap q = quotient_group(g, cur);
    auto lattice = normal_subgroups(q.target);
    // Sorted ascending by (order, set order); the first nontrivial entry is a
    // minimal normal subgroup, and the sort is exactly the tie-break rule.
    const Subgroup* min_normal = nullptr;
    for (const Subgroup& n : lattice) {
      if (n.order() >= 2) {
        min_normal = &n;
        break;
      }
    }
    cur = preimage_subgroup(q, *min_normal);
    out.series.terms.push_back(cur);
    out.factor_orders.push_back(min_normal->order());
  }
  return out;
}

bool is_nilpotent(const GroupPtr& g) { return is_nilpotent_sub(full_subgroup(g)); }
bool is_soluble(const GroupPtr& g) { return is_soluble_sub(full_subgroup(g)); }

bool is_nilpotent_sub(const Subgroup& h) {
  return lower_central_series_of(h).limit().is_trivial();
}

bool is_soluble_sub(const Subgroup& h) {
  return derived_series_of(h).limit().is_trivial();
}

bool is_supersoluble(const GroupPtr& g) {
  for (uint32_t f : chief_series(g).factor_orders)
    if (!is_prime(f)) return false;
  return true;
}

bool is_p_supersoluble(const GroupPtr& g, uint32_t p) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  for (uint32_t f : chief_series(g).factor_orders)
    if (f % p == 0 && f != p) return false;
  return true;
}

bool is_p_nilpotent(const GroupPtr& g, uint32_t p) {
  return is_p_nilpotent_sub(full_subgroup(g), p);
}

bool is_p_nilpotent_sub(const Subgroup& h, uint32_t p) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  const Group& g = *h.parent;
  ElemSet seed(g.order);
  for (uint16_t x : h.members.to_vector())
    if (element_order(g, x) % p != 0) seed.set(x);
  Subgroup gen = generated_subgroup(h.parent, seed);
  return gen.order() == p_prime_part(h.order(), p);
}

}  // namespace residua
