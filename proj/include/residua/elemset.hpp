#pragma once

#include <cstdint>
#include <vector>

#include "residua/setops.hpp"

namespace residua {

/// Bitset over the element indices 0..universe-1 of one group.
/// All set algebra goes through the runtime-selected setops kernels.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(uint32_t universe)
      : nbits_(universe), w_((universe + 63) / 64, 0) {}

  uint32_t universe() const { return nbits_; }

  bool test(uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(uint32_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(uint32_t i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  uint32_t count() const {
    return static_cast<uint32_t>(setops::active_kernels().popcount(w_.data(), w_.size()));
  }
  bool empty() const { return setops::active_kernels().none(w_.data(), w_.size()); }

  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return a.nbits_ == b.nbits_ &&
           setops::active_kernels().equal(a.w_.data(), b.w_.data(), a.w_.size());
  }
  friend bool operator!=(const ElemSet& a, const ElemSet& b) { return !(a == b); }

  bool is_subset_of(const ElemSet& other) const {
    return setops::active_kernels().subset(w_.data(), other.w_.data(), w_.size());
  }

  ElemSet& operator|=(const ElemSet& o) {
    setops::active_kernels().bit_or(w_.data(), w_.data(), o.w_.data(), w_.size());
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    setops::active_kernels().bit_and(w_.data(), w_.data(), o.w_.data(), w_.size());
    return *this;
  }
  /// Set difference.
  ElemSet& operator-=(const ElemSet& o) {
    setops::active_kernels().bit_andnot(w_.data(), w_.data(), o.w_.data(), w_.size());
    return *this;
  }

  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend ElemSet operator-(ElemSet a, const ElemSet& b) { return a -= b; }

  /// Smallest member, or -1 when empty.
  int first() const;

  /// Visits members in ascending order; f takes a uint32_t index.
  template <typename F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      uint64_t w = w_[wi];
      while (w) {
        unsigned bit = static_cast<unsigned>(__builtin_ctzll(w));
        f(static_cast<uint32_t>(wi * 64 + bit));
        w &= w - 1;
      }
    }
  }

  /// Members as element indices, ascending.
  std::vector<uint16_t> to_vector() const;

  /// Deterministic total order on equal-universe sets: compare by the
  /// smallest element present in one set but not the other; the set that
  /// contains it sorts first. Returns <0, 0, >0.
  static int compare(const ElemSet& a, const ElemSet& b);

  size_t hash() const;

  const uint64_t* words() const { return w_.data(); }
  size_t word_count() const { return w_.size(); }

 private:
  uint32_t nbits_ = 0;
  std::vector<uint64_t> w_;
};

struct ElemSetHash {
  size_t operator()(const ElemSet& s) const { return s.hash(); }
};

}  // namespace residua
