#pragma once

#include <cstdint>
#include <vector>

#include "residua/subgroup.hpp"

namespace residua {

/// Ascending chief series 1 = N0 < N1 < ... < Nk = G; every term is normal in
/// G and every factor N_{i+1}/N_i is a minimal normal subgroup of G/N_i.
struct ChiefFactorProfile {
  SubgroupSeries series;               // kind = Chief, ascending, includes 1 and G
  std::vector<uint32_t> factor_orders;
};

ChiefFactorProfile chief_series(const GroupPtr& g);

bool is_nilpotent(const GroupPtr& g);
bool is_soluble(const GroupPtr& g);
bool is_supersoluble(const GroupPtr& g);

/// Every chief factor of order divisible by p has order exactly p.
bool is_p_supersoluble(const GroupPtr& g, uint32_t p);

/// Possession of a normal p-complement, decided by generating from the
/// p'-elements: the complement, when it exists, is exactly that set.
bool is_p_nilpotent(const GroupPtr& g, uint32_t p);

// Ambient variants: classify a subgroup as a group in its own right without
// re-indexing it (series and element orders live in the parent table).
bool is_nilpotent_sub(const Subgroup& h);
bool is_soluble_sub(const Subgroup& h);
bool is_p_nilpotent_sub(const Subgroup& h, uint32_t p);

bool is_prime(uint32_t n);
std::vector<uint32_t> prime_divisors(uint32_t n);
/// Largest divisor of n coprime to p.
uint32_t p_prime_part(uint32_t n, uint32_t p);

}  // namespace residua
