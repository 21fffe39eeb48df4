#include <cstring>

#include "codedcache/simd/xor_kernels.hpp"

namespace codedcache::simd {

void xor_into_scalar(std::byte* dst, const std::byte* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    std::uint64_t a;
    std::uint64_t b;
    std::memcpy(&a, dst + i, 8);
    std::memcpy(&b, src + i, 8);
    a ^= b;
    std::memcpy(dst + i, &a, 8);
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

bool all_zero_scalar(const std::byte* buf, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (buf[i] != std::byte{0}) return false;
  }
  return true;
}

}  // namespace codedcache::simd
