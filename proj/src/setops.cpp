#include "residua/setops.hpp"

#include <bit>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace residua::setops {

namespace {

// ---------------------------------------------------------------------------
// Scalar reference kernels
// ---------------------------------------------------------------------------

void and_scalar(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t nw) {
  for (size_t i = 0; i < nw; ++i) dst[i] = a[i] & b[i];
}

void or_scalar(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t nw) {
  for (size_t i = 0; i < nw; ++i) dst[i] = a[i] | b[i];
}

void andnot_scalar(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t nw) {
  for (size_t i = 0; i < nw; ++i) dst[i] = a[i] & ~b[i];
}

bool equal_scalar(const uint64_t* a, const uint64_t* b, size_t nw) {
  for (size_t i = 0; i < nw; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool subset_scalar(const uint64_t* a, const uint64_t* b, size_t nw) {
  for (size_t i = 0; i < nw; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool none_scalar(const uint64_t* a, size_t nw) {
  for (size_t i = 0; i < nw; ++i)
    if (a[i]) return false;
  return true;
}

size_t popcount_scalar(const uint64_t* a, size_t nw) {
  size_t total = 0;
  for (size_t i = 0; i < nw; ++i) total += static_cast<size_t>(std::popcount(a[i]));
  return total;
}

// ---------------------------------------------------------------------------
// AVX2 kernels (x86-64, runtime gated by cpu_has_avx2)
// ---------------------------------------------------------------------------

#if defined(__x86_64__) || defined(_M_X64)

__attribute__((target("avx2"))) void and_avx2(uint64_t* dst, const uint64_t* a,
                                              const uint64_t* b, size_t nw) {
  size_t i = 0;
  for (; i + 4 <= nw; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(va, vb));
  }
  for (; i < nw; ++i) dst[i] = a[i] & b[i];
}

__attribute__((target("avx2"))) void or_avx2(uint64_t* dst, const uint64_t* a,
                                             const uint64_t* b, size_t nw) {
  size_t i = 0;
  for (; i + 4 <= nw; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(va, vb));
  }
  for (; i < nw; ++i) dst[i] = a[i] | b[i];
}

__attribute__((target("avx2"))) void andnot_avx2(uint64_t* dst, const uint64_t* a,
                                                 const uint64_t* b, size_t nw) {
  size_t i = 0;
  for (; i + 4 <= nw; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // andnot(x, y) = ~x & y, so pass b first to get a & ~b
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(vb, va));
  }
  for (; i < nw; ++i) dst[i] = a[i] & ~b[i];
}

__attribute__((target("avx2"))) bool equal_avx2(const uint64_t* a, const uint64_t* b,
                                                size_t nw) {
  size_t i = 0;
  for (; i + 4 <= nw; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i d = _mm256_xor_si256(va, vb);
    if (!_mm256_testz_si256(d, d)) return false;
  }
  for (; i < nw; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

__attribute__((target("avx2"))) bool subset_avx2(const uint64_t* a, const uint64_t* b,
                                                 size_t nw) {
  size_t i = 0;
  for (; i + 4 <= nw; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i d = _mm256_andnot_si256(vb, va);  // a & ~b
    if (!_mm256_testz_si256(d, d)) return false;
  }
  for (; i < nw; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

__attribute__((target("avx2"))) bool none_avx2(const uint64_t* a, size_t nw) {
  size_t i = 0;
  for (; i + 4 <= nw; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    if (!_mm256_testz_si256(va, va)) return false;
  }
  for (; i < nw; ++i)
    if (a[i]) return false;
  return true;
}

// Nibble-LUT popcount (pshufb) + psadbw horizontal accumulate.
__attribute__((target("avx2"))) size_t popcount_avx2(const uint64_t* a, size_t nw) {
  const __m256i lut =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= nw; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  uint64_t lanes[4];
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
  size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < nw; ++i) total += static_cast<size_t>(std::popcount(a[i]));
  return total;
}

#endif  // x86-64

// ---------------------------------------------------------------------------
// NEON kernels (aarch64)
// ---------------------------------------------------------------------------

#if defined(__aarch64__)

void and_neon(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t nw) {
  size_t i = 0;
  for (; i + 2 <= nw; i += 2) {
    vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  }
  for (; i < nw; ++i) dst[i] = a[i] & b[i];
}

void or_neon(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t nw) {
  size_t i = 0;
  for (; i + 2 <= nw; i += 2) {
    vst1q_u64(dst + i, vorrq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  }
  for (; i < nw; ++i) dst[i] = a[i] | b[i];
}

void andnot_neon(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t nw) {
  size_t i = 0;
  for (; i + 2 <= nw; i += 2) {
    vst1q_u64(dst + i, vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  }
  for (; i < nw; ++i) dst[i] = a[i] & ~b[i];
}

bool equal_neon(const uint64_t* a, const uint64_t* b, size_t nw) {
  size_t i = 0;
  for (; i + 2 <= nw; i += 2) {
    uint64x2_t d = veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vmaxvq_u32(vreinterpretq_u32_u64(d)) != 0) return false;
  }
  for (; i < nw; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool subset_neon(const uint64_t* a, const uint64_t* b, size_t nw) {
  size_t i = 0;
  for (; i + 2 <= nw; i += 2) {
    uint64x2_t d = vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vmaxvq_u32(vreinterpretq_u32_u64(d)) != 0) return false;
  }
  for (; i < nw; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool none_neon(const uint64_t* a, size_t nw) {
  size_t i = 0;
  for (; i + 2 <= nw; i += 2) {
    if (vmaxvq_u32(vreinterpretq_u32_u64(vld1q_u64(a + i))) != 0) return false;
  }
  for (; i < nw; ++i)
    if (a[i]) return false;
  return true;
}

size_t popcount_neon(const uint64_t* a, size_t nw) {
  size_t total = 0;
  size_t i = 0;
  for (; i + 2 <= nw; i += 2) {
    uint8x16_t cnt = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(a + i)));
    total += vaddlvq_u8(cnt);
  }
  for (; i < nw; ++i) total += static_cast<size_t>(std::popcount(a[i]));
  return total;
}

#endif  // aarch64

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k = {and_scalar, or_scalar,     andnot_scalar, equal_scalar,
                            subset_scalar, none_scalar, popcount_scalar, "scalar"};
  return k;
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

#if defined(__x86_64__) || defined(_M_X64)
const Kernels& avx2_kernels() {
  static const Kernels k = {and_avx2, or_avx2,   andnot_avx2, equal_avx2,
                            subset_avx2, none_avx2, popcount_avx2, "avx2"};
  return k;
}
#endif

#if defined(__aarch64__)
const Kernels& neon_kernels() {
  static const Kernels k = {and_neon, or_neon,   andnot_neon, equal_neon,
                            subset_neon, none_neon, popcount_neon, "neon"};
  return k;
}
#endif

const Kernels& active_kernels() {
  static const Kernels& chosen = []() -> const Kernels& {
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2()) return avx2_kernels();
#elif defined(__aarch64__)
    return neon_kernels();
#endif
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace residua::setops
