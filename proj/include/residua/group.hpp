#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "residua/perm.hpp"

namespace residua {

inline constexpr uint32_t kDefaultMaxOrder = 512;
// Element indices are 16-bit and the Cayley table is order^2 entries, so the
// order cap cannot be raised past this.
inline constexpr uint32_t kHardMaxOrder = 8192;

/// A fully enumerated finite group. elements[0] is the identity; the element
/// ordering is breadth-first closure order from the generators with ties
/// broken by lexicographic comparison of image tables, so two builds of the
/// same generator list are identical. Immutable after construction.
struct Group {
  uint32_t degree = 0;
  uint32_t order = 0;
  std::vector<Perm> elements;
  std::vector<uint16_t> cayley;      // row-major order x order
  std::vector<uint16_t> inverse;
  std::vector<uint16_t> generators;  // element indices of the defining generators

  uint16_t mul(uint16_t i, uint16_t j) const {
    return cayley[static_cast<size_t>(i) * order + j];
  }
  uint16_t inv(uint16_t i) const { return inverse[i]; }
  /// g^-1 * x * g
  uint16_t conj(uint16_t x, uint16_t g) const { return mul(mul(inv(g), x), g); }
};

using GroupPtr = std::shared_ptr<const Group>;

/// Enumerates the closure of the generators. Throws DomainError on degree 0
/// or mismatched generator degrees, CapError when the closure would exceed
/// max_order.
GroupPtr build_group(uint32_t degree, const std::vector<Perm>& generators,
                     uint32_t max_order = kDefaultMaxOrder);

/// Least k >= 1 with elements[i]^k = identity.
uint32_t element_order(const Group& g, uint16_t i);

/// Conjugation orbits; the class of the identity comes first and each class
/// is listed ascending, classes ordered by smallest member.
std::vector<std::vector<uint16_t>> conjugacy_classes(const Group& g);

bool is_abelian(const Group& g);

}  // namespace residua
