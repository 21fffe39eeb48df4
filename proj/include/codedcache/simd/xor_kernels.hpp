#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace codedcache::simd {

enum class Isa { Scalar, Sse2, Avx2, Neon };
std::string_view to_string(Isa isa);

/// dst[i] ^= src[i] for i < n.
using XorFn = void (*)(std::byte* dst, const std::byte* src, std::size_t n);
/// True when every byte of buf[0..n) is zero.
using ZeroFn = bool (*)(const std::byte* buf, std::size_t n);

struct KernelSet {
  Isa isa;
  XorFn xor_into;
  ZeroFn all_zero;
};

/// Reference implementations; every other variant must agree with these.
void xor_into_scalar(std::byte* dst, const std::byte* src, std::size_t n);
bool all_zero_scalar(const std::byte* buf, std::size_t n);

/// Whether `isa` was compiled in and the running CPU supports it.
bool isa_available(Isa isa);
/// Kernels for a specific ISA; throws std::invalid_argument if unavailable.
KernelSet kernels_for(Isa isa);
/// Best available kernels. CODEDCACHE_ISA=scalar|sse2|avx2|neon forces one.
const KernelSet& active_kernels();

inline void xor_into(std::span<std::byte> dst, std::span<const std::byte> src) {
  active_kernels().xor_into(dst.data(), src.data(), dst.size() < src.size() ? dst.size() : src.size());
}

inline void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  const std::size_t n = (dst.size() < src.size() ? dst.size() : src.size()) * sizeof(std::uint64_t);
  active_kernels().xor_into(reinterpret_cast<std::byte*>(dst.data()),
                            reinterpret_cast<const std::byte*>(src.data()), n);
}

}  // namespace codedcache::simd
