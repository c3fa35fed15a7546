#include <immintrin.h>

#include "epi/kernels.hpp"

namespace epi::kernels {

std::size_t common_prefix_avx2(std::span<const Letter> a, std::span<const Letter> b) {
  std::size_t n = std::min(a.size(), b.size());
  const Letter* pa = a.data();
  const Letter* pb = b.data();
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pa + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pb + i));
    auto eq = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
    if (eq != 0xFFFFFFFFu) return i + static_cast<std::size_t>(__builtin_ctz(~eq));
  }
  while (i < n && pa[i] == pb[i]) ++i;
  return i;
}

}  // namespace epi::kernels
