#pragma once

#include <cstdint>
#include <vector>

#include "residua/elemset.hpp"
#include "residua/group.hpp"

namespace residua {

/// Element-index set within a parent group, closed under product and inverse.
struct Subgroup {
  GroupPtr parent;
  ElemSet members;

  uint32_t order() const { return members.count(); }
  bool contains(uint16_t i) const { return members.test(i); }
  bool is_full() const { return order() == parent->order; }
  bool is_trivial() const { return order() == 1; }
};

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
Subgroup cyclic_subgroup(const GroupPtr& g, uint16_t x);

/// Smallest subgroup containing the seed indices (closure under product).
Subgroup generated_subgroup(const GroupPtr& g, const ElemSet& seed);
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<uint16_t>& seed);

Subgroup join(const Subgroup& h, const Subgroup& k);
Subgroup meet(const Subgroup& h, const Subgroup& k);

/// The element set H*K (not a subgroup in general).
ElemSet set_product(const Subgroup& h, const Subgroup& k);

/// Smallest normal subgroup of the parent containing h.
Subgroup normal_closure(const Subgroup& h);

/// Smallest subgroup of k containing h that is normal in k; requires h <= k.
Subgroup normal_closure_in(const Subgroup& k, const Subgroup& h);

/// Subgroup generated by all commutators h^-1 k^-1 h k over h in H, k in K.
Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k);

bool is_normal(const Subgroup& h);                              // in the parent
bool is_normal_in(const Subgroup& k, const Subgroup& h);        // h normal in k
bool is_subnormal(const Subgroup& h);

enum class SeriesKind { Derived, LowerCentral, Chief };

struct SubgroupSeries {
  GroupPtr parent;
  SeriesKind kind;
  std::vector<Subgroup> terms;

  const Subgroup& limit() const { return terms.back(); }
  std::vector<uint32_t> orders() const;
};

// Both series run until the next term repeats (the repeat is kept once) or
// reaches the trivial subgroup. The last term is always the stable limit.
SubgroupSeries derived_series(const GroupPtr& g);
SubgroupSeries lower_central_series(const GroupPtr& g);
SubgroupSeries derived_series_of(const Subgroup& h);
SubgroupSeries lower_central_series_of(const Subgroup& h);

/// Surjective homomorphism onto the quotient by a normal subgroup. Cosets are
/// indexed by their minimal contained element; target elements are the
/// right-regular permutations of the cosets.
struct QuotientMap {
  GroupPtr source;
  Subgroup kernel;
  GroupPtr target;
  std::vector<uint16_t> image;  // source element index -> target element index
};

QuotientMap quotient_group(const GroupPtr& g, const Subgroup& n);

Subgroup image_subgroup(const QuotientMap& q, const Subgroup& h);
Subgroup preimage_subgroup(const QuotientMap& q, const Subgroup& m);

/// A subgroup re-indexed as a group in its own right. The element ordering
/// follows the same breadth-first rule as build_group applied to the
/// deterministic generating set, so materialization is reproducible.
struct Materialized {
  GroupPtr group;
  Subgroup of;                       // the subgroup this came from
  std::vector<uint16_t> to_parent;   // new index -> parent index
};

Materialized materialize(const Subgroup& h);

/// Translates a member set of m.group back into the parent.
Subgroup map_back(const Materialized& m, const ElemSet& sub);

/// Greedy deterministic generating set: scan members ascending, keep those
/// outside the span so far. Empty for the trivial subgroup.
std::vector<uint16_t> generating_set(const Subgroup& h);

/// Cycle-notation words for a generating set, e.g. "(1 2 3), (1 2)".
/// The trivial subgroup prints as "()".
std::string generator_words(const Subgroup& h);

}  // namespace residua
