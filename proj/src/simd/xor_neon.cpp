#include <arm_neon.h>

#include "codedcache/simd/xor_kernels.hpp"

namespace codedcache::simd {

void xor_into_neon(std::byte* dst, const std::byte* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    auto* d = reinterpret_cast<std::uint8_t*>(dst + i);
    const auto* s = reinterpret_cast<const std::uint8_t*>(src + i);
    vst1q_u8(d, veorq_u8(vld1q_u8(d), vld1q_u8(s)));
  }
  xor_into_scalar(dst + i, src + i, n - i);
}

bool all_zero_neon(const std::byte* buf, std::size_t n) {
  std::size_t i = 0;
  uint8x16_t acc = vdupq_n_u8(0);
  for (; i + 16 <= n; i += 16) acc = vorrq_u8(acc, vld1q_u8(reinterpret_cast<const std::uint8_t*>(buf + i)));
  if (vmaxvq_u8(acc) != 0) return false;
  return all_zero_scalar(buf + i, n - i);
}

}  // namespace codedcache::simd
