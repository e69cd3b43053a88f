#pragma once

#include <cstddef>
#include <cstdint>

// Word-array set kernels. Every subgroup, coset and closure in this library
// is a bitset over element indices; these are the inner loops of the lattice
// and census searches. A scalar reference implementation always exists; on
// x86-64 an AVX2 variant and on aarch64 a NEON variant are selected at
// runtime. All variants are equivalence-tested against the scalar kernels.

namespace residua::setops {

struct Kernels {
  // dst may alias a or b; arrays hold nw 64-bit words.
  void (*bit_and)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t nw);
  void (*bit_or)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t nw);
  void (*bit_andnot)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t nw);  // a & ~b
  bool (*equal)(const uint64_t* a, const uint64_t* b, size_t nw);
  bool (*subset)(const uint64_t* a, const uint64_t* b, size_t nw);  // a subset of b
  bool (*none)(const uint64_t* a, size_t nw);                       // all words zero
  size_t (*popcount)(const uint64_t* a, size_t nw);
  const char* name;
};

/// Portable reference kernels.
const Kernels& scalar_kernels();

/// True when the running CPU supports AVX2 (always false off x86-64).
bool cpu_has_avx2();

#if defined(__x86_64__) || defined(_M_X64)
/// AVX2 kernels. Only call through this when cpu_has_avx2() is true.
const Kernels& avx2_kernels();
#endif

#if defined(__aarch64__)
/// NEON kernels (baseline on aarch64).
const Kernels& neon_kernels();
#endif

/// Best kernel set for the running CPU, chosen once at first use.
const Kernels& active_kernels();

}  // namespace residua::setops
