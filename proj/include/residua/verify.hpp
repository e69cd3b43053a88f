#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "residua/catalog.hpp"
#include "residua/factorize.hpp"
#include "residua/formation.hpp"

namespace residua {

enum class ClaimStatus { Holds, Fails, Skipped };

const char* to_string(ClaimStatus s);

/// One verdict row. Claim ids: T1, T2:<p>, C1.1, C2.1:<p>, L1.1, L1.2, L1.3,
/// L2.1, L2.2, L2.3, L3, L4, L5. Group-level claims carry factorization "-".
/// A Fails row always carries enough witness orders to re-derive the failure.
struct ClaimResult {
  std::string group;
  std::string factorization;
  std::string claim;
  ClaimStatus status = ClaimStatus::Holds;
  std::string reason;  // skip reason or failure description
  std::vector<std::pair<std::string, uint32_t>> witness;
};

/// "A=<gens> B=<gens>" in cycle notation.
std::string factorization_description(const Factorization& f);

enum class TheoremMode { T1, T2 };

/// Theorem verdict plus its corollary verdict (C1.1 for T1, C2.1:p for T2).
/// Unmet mathematical preconditions yield Skipped rows, never errors.
std::vector<ClaimResult> verify_theorem(const std::string& group_name,
                                        const Factorization& f, TheoremMode mode,
                                        uint32_t p = 0);

/// The factorization-level lemma rows L1.1, L1.2, L1.3, L4.
std::vector<ClaimResult> verify_factorization_lemmas(const std::string& group_name,
                                                     const Factorization& f);

/// The group-level lemma rows L2.1, L2.2, L2.3, L3, L5, aggregated over all
/// instances (every normal subgroup, formation, subnormal subgroup, or
/// normal product pair). L3 needs the subgroup lattice and is skipped above
/// order 48 or when the lattice is unavailable.
std::vector<ClaimResult> verify_group_lemmas(const std::string& group_name,
                                             const GroupPtr& g,
                                             const std::vector<Subgroup>* all_subs);

struct RelaxationHit {
  std::string group;
  std::string factorization;
  uint32_t gu_order = 0;
  uint32_t gprime_n_order = 0;
};

struct GroupCensus {
  std::string name;
  uint32_t order = 0;
  uint32_t subgroup_count = 0;
  uint32_t factorization_count = 0;
  uint32_t mp_supersoluble_count = 0;
  bool truncated = false;
  std::string truncated_reason;
  std::vector<ClaimResult> claims;
  std::vector<RelaxationHit> relaxation;
};

struct CensusOptions {
  uint32_t max_order = kDefaultMaxOrder;
  uint32_t census_cap = kDefaultCensusCap;
  unsigned jobs = 0;  // 0 = hardware concurrency
};

struct CensusReport {
  std::vector<CatalogEntry> catalog;
  CensusOptions options;
  std::vector<GroupCensus> groups;
  uint64_t holds = 0;
  uint64_t fails = 0;
  uint64_t skipped = 0;
  uint32_t truncated_groups = 0;
};

/// Full pipeline for one catalog entry: build, enumerate factorizations,
/// run every claim, record relaxation-probe hits. Cap overruns mark the
/// entry truncated; only malformed input escapes as ParseError.
GroupCensus census_group(const CatalogEntry& entry, const CensusOptions& opts);

/// Census over a catalog. Groups are processed in parallel; the report is
/// assembled in catalog order, so the output does not depend on scheduling.
CensusReport run_census(const std::vector<CatalogEntry>& entries,
                        const CensusOptions& opts = {});

std::string census_to_text(const CensusReport& r);
std::string census_to_json(const CensusReport& r);

/// 0 when every non-skipped claim holds, 1 when any claim fails.
int census_exit_code(const CensusReport& r);

}  // namespace residua
