#pragma once

#include <cstdint>
#include <vector>

#include "residua/subgroup.hpp"

namespace residua {

inline constexpr uint32_t kDefaultCensusCap = 96;

/// A pair of subgroups with A*B = G, annotated with its classification.
/// Stored canonically: |A| <= |B|, ties broken by deterministic set order.
struct Factorization {
  GroupPtr parent;
  Subgroup a;
  Subgroup b;
  bool mutually_permutable = false;
  bool proper = false;               // A != G and B != G
  bool supersoluble_factors = false;
  // Primes p dividing |G| for which both factors are p-supersoluble.
  std::vector<uint32_t> p_supersoluble_primes;
};

/// True iff |A| * |B| = |G| * |A meet B|, i.e. the product set covers G.
bool is_product(const GroupPtr& g, const Subgroup& a, const Subgroup& b);

/// True iff the element sets U*B and B*U coincide.
bool permutes(const Subgroup& u, const Subgroup& b);

/// Mutual permutability via the cyclic reduction: <a>B = B<a> for every
/// a in A and A<b> = <b>A for every b in B. Requires is_product.
bool is_mutually_permutable(const GroupPtr& g, const Subgroup& a, const Subgroup& b);

/// Brute-force variant quantifying over every subgroup U <= A and V <= B.
/// The subgroup list must be all_subgroups of the parent.
bool is_mutually_permutable_oracle(const GroupPtr& g, const Subgroup& a,
                                   const Subgroup& b,
                                   const std::vector<Subgroup>& all_subs);

/// The complete subgroup lattice: join-closure of all cyclic subgroups.
/// Sorted ascending by (order, deterministic set order). Throws CapError
/// when |G| exceeds the census cap.
std::vector<Subgroup> all_subgroups(const GroupPtr& g,
                                    uint32_t census_cap = kDefaultCensusCap);

/// Per-subgroup class data shared by factorization enumeration and reports.
struct SubgroupClassification {
  bool supersoluble = false;
  bool nilpotent = false;
  std::vector<uint32_t> primes;           // prime divisors of |G|, ascending
  std::vector<bool> p_supersoluble;       // aligned with primes
  std::vector<bool> p_nilpotent;          // aligned with primes
};

std::vector<SubgroupClassification> classify_subgroups(const std::vector<Subgroup>& subs);

struct FactorFilter {
  bool proper_only = false;
  bool mp_only = false;
  bool supersoluble_only = false;
};

/// All unordered pairs {A, B} with product covering G, classified and in
/// canonical order.
std::vector<Factorization> factorizations(const GroupPtr& g, const FactorFilter& filter = {},
                                          uint32_t census_cap = kDefaultCensusCap);

/// Same, reusing a precomputed lattice and classification table.
std::vector<Factorization> enumerate_factorizations(
    const GroupPtr& g, const std::vector<Subgroup>& subs,
    const std::vector<SubgroupClassification>& cls, const FactorFilter& filter);

}  // namespace residua
