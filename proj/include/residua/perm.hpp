#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace residua {

/// Permutation of the points 1..degree. Points are stored 0-based; all
/// textual I/O is 1-based cycle notation, e.g. "(1 2 3)(4 5)".
class Perm {
 public:
  Perm() = default;

  /// Identity on `degree` points.
  static Perm identity(uint32_t degree);

  /// Takes ownership of a 0-based image table; validates it is a bijection.
  static Perm from_images(std::vector<uint16_t> images);

  uint32_t degree() const { return static_cast<uint32_t>(img_.size()); }
  uint16_t apply(uint16_t point) const { return img_[point]; }
  const std::vector<uint16_t>& images() const { return img_; }

  /// Composition, this applied first: (a * b)(x) = b(a(x)).
  Perm operator*(const Perm& rhs) const;

  Perm inverse() const;
  bool is_identity() const;

  /// Disjoint-cycle form, 1-based; identity prints as "()".
  std::string to_cycles() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) = default;

 private:
  std::vector<uint16_t> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const;
};

/// Parses cycle notation over the points 1..degree. Points absent from the
/// text are fixed; "()" is the identity. Throws ParseError on malformed
/// syntax, out-of-range points, or a point repeated anywhere in the text.
Perm parse_permutation(std::string_view text, uint32_t degree);

}  // namespace residua
