#include <cstdlib>
#include <stdexcept>
#include <string>

#include "codedcache/simd/xor_kernels.hpp"

namespace codedcache::simd {

#if defined(CODEDCACHE_HAVE_X86)
void xor_into_sse2(std::byte* dst, const std::byte* src, std::size_t n);
bool all_zero_sse2(const std::byte* buf, std::size_t n);
void xor_into_avx2(std::byte* dst, const std::byte* src, std::size_t n);
bool all_zero_avx2(const std::byte* buf, std::size_t n);
#endif
#if defined(CODEDCACHE_HAVE_NEON)
void xor_into_neon(std::byte* dst, const std::byte* src, std::size_t n);
bool all_zero_neon(const std::byte* buf, std::size_t n);
#endif

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Sse2: return "sse2";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
#if defined(CODEDCACHE_HAVE_X86)
    case Isa::Sse2: return __builtin_cpu_supports("sse2");
    case Isa::Avx2: return __builtin_cpu_supports("avx2");
#endif
#if defined(CODEDCACHE_HAVE_NEON)
    case Isa::Neon: return true;
#endif
    default: return false;
  }
}

KernelSet kernels_for(Isa isa) {
  if (!isa_available(isa)) throw std::invalid_argument("ISA not available: " + std::string(to_string(isa)));
  switch (isa) {
#if defined(CODEDCACHE_HAVE_X86)
    case Isa::Sse2: return {isa, xor_into_sse2, all_zero_sse2};
    case Isa::Avx2: return {isa, xor_into_avx2, all_zero_avx2};
#endif
#if defined(CODEDCACHE_HAVE_NEON)
    case Isa::Neon: return {isa, xor_into_neon, all_zero_neon};
#endif
    default: return {Isa::Scalar, xor_into_scalar, all_zero_scalar};
  }
}

namespace {

KernelSet select_kernels() {
  if (const char* forced = std::getenv("CODEDCACHE_ISA")) {
    const std::string name(forced);
    for (Isa isa : {Isa::Scalar, Isa::Sse2, Isa::Avx2, Isa::Neon}) {
      if (name == to_string(isa) && isa_available(isa)) return kernels_for(isa);
    }
  }
  for (Isa isa : {Isa::Avx2, Isa::Neon, Isa::Sse2}) {
    if (isa_available(isa)) return kernels_for(isa);
  }
  return kernels_for(Isa::Scalar);
}

}  // namespace

const KernelSet& active_kernels() {
  static const KernelSet selected = select_kernels();
  return selected;
}

}  // namespace codedcache::simd
