#if defined(__aarch64__)
#include <arm_neon.h>

#include "epi/kernels.hpp"

namespace epi::kernels {

std::size_t common_prefix_neon(std::span<const Letter> a, std::span<const Letter> b) {
  std::size_t n = std::min(a.size(), b.size());
  const Letter* pa = a.data();
  const Letter* pb = b.data();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    uint8x16_t eq = vceqq_u8(vld1q_u8(pa + i), vld1q_u8(pb + i));
    if (vminvq_u8(eq) != 0xFF) break;
  }
  while (i < n && pa[i] == pb[i]) ++i;
  return i;
}

}  // namespace epi::kernels
#endif
