#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "residua/subgroup.hpp"

namespace residua {

/// Descriptor of a group class with a membership test and residual strategy.
/// Atomic classes: E (all groups), A (abelian), N (nilpotent),
/// U (supersoluble), pU:p (p-supersoluble), pN:p (p-nilpotent, the class of
/// groups with a normal p-complement). Composite X*F is the product class
/// { G : the F-residual of G lies in X }.
class Formation {
 public:
  enum class Kind { All, Abelian, Nilpotent, Supersoluble, PSupersoluble, PNilpotent, Composite };

  static Formation all() { return Formation(Kind::All); }
  static Formation abelian() { return Formation(Kind::Abelian); }
  static Formation nilpotent() { return Formation(Kind::Nilpotent); }
  static Formation supersoluble() { return Formation(Kind::Supersoluble); }
  static Formation p_supersoluble(uint32_t p);
  static Formation p_nilpotent(uint32_t p);
  static Formation composite(Formation outer, Formation inner);

  /// Parses "A", "N", "U", "E", "pU:<p>", "pN:<p>", or "X*F" (split at the
  /// first '*'; the right side is parsed recursively).
  static Formation parse(std::string_view text);

  Kind kind() const { return kind_; }
  uint32_t prime() const { return p_; }
  const Formation& outer() const { return *outer_; }
  const Formation& inner() const { return *inner_; }

  /// Canonical name, round-trips through parse.
  std::string name() const;

 private:
  explicit Formation(Kind k, uint32_t p = 0) : kind_(k), p_(p) {}

  Kind kind_;
  uint32_t p_ = 0;
  std::shared_ptr<const Formation> outer_, inner_;
};

/// Membership of g in the class described by f.
bool membership(const GroupPtr& g, const Formation& f);

/// Membership of a subgroup, viewed as a group in its own right.
bool membership_sub(const Subgroup& h, const Formation& f);

/// The complete normal-subgroup lattice: join-closure of the normal closures
/// of all cyclic subgroups, plus the trivial subgroup. Sorted ascending by
/// (order, deterministic set order).
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

/// The F-residual: the smallest normal subgroup with quotient in F.
/// Dispatches to fast paths (A: derived subgroup; N: lower-central limit;
/// composite: residual of the inner residual) and to the generic lattice
/// engine for U, pU, pN.
Subgroup residual(const GroupPtr& g, const Formation& f);

/// Generic engine: filter the normal-subgroup lattice by quotient
/// membership and intersect the minimal members. Works for every class;
/// the fast paths are required to agree with it.
Subgroup residual_generic(const GroupPtr& g, const Formation& f);

/// F-residual of a subgroup as a group in its own right, translated back
/// into the parent (A and N are computed ambiently; other classes
/// materialize the subgroup).
Subgroup residual_in(const Subgroup& h, const Formation& f);

}  // namespace residua
