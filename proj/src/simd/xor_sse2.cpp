#include <emmintrin.h>

#include "codedcache/simd/xor_kernels.hpp"

namespace codedcache::simd {

void xor_into_sse2(std::byte* dst, const std::byte* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m128i a = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
    const __m128i b = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm_xor_si128(a, b));
  }
  xor_into_scalar(dst + i, src + i, n - i);
}

bool all_zero_sse2(const std::byte* buf, std::size_t n) {
  std::size_t i = 0;
  __m128i acc = _mm_setzero_si128();
  for (; i + 16 <= n; i += 16) acc = _mm_or_si128(acc, _mm_loadu_si128(reinterpret_cast<const __m128i*>(buf + i)));
  if (_mm_movemask_epi8(_mm_cmpeq_epi8(acc, _mm_setzero_si128())) != 0xFFFF) return false;
  return all_zero_scalar(buf + i, n - i);
}

}  // namespace codedcache::simd
