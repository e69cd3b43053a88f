#include "residua/elemset.hpp"

#include <algorithm>

namespace residua {

int ElemSet::first() const {
  for (size_t wi = 0; wi < w_.size(); ++wi) {
    if (w_[wi]) return static_cast<int>(wi * 64 + __builtin_ctzll(w_[wi]));
  }
  return -1;
}

std::vector<uint16_t> ElemSet::to_vector() const {
  std::vector<uint16_t> out;
  out.reserve(count());
  for_each([&](uint32_t i) { out.push_back(static_cast<uint16_t>(i)); });
  return out;
}

int ElemSet::compare(const ElemSet& a, const ElemSet& b) {
  for (size_t wi = 0; wi < a.w_.size(); ++wi) {
    uint64_t d = a.w_[wi] ^ b.w_[wi];
    if (d) {
      uint64_t lowest = d & (~d + 1);
      return (a.w_[wi] & lowest) ? -1 : 1;
    }
  }
  return 0;
}

size_t ElemSet::hash() const {
  // FNV-1a over the words plus the universe size.
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(nbits_);
  for (uint64_t w : w_) mix(w);
  return static_cast<size_t>(h);
}

}  // namespace residua
