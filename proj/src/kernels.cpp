#include "epi/kernels.hpp"

#include <algorithm>
#include <atomic>

namespace epi::kernels {

namespace {

std::atomic<int> forced{-1};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

}  // namespace

const char* level_name(Level level) {
  switch (level) {
    case Level::Scalar: return "scalar";
    case Level::Avx2: return "avx2";
    case Level::Neon: return "neon";
  }
  return "?";
}

bool level_available(Level level) {
  switch (level) {
    case Level::Scalar: return true;
    case Level::Avx2:
#ifdef EPI_HAVE_AVX2
      return cpu_has_avx2();
#else
      return false;
#endif
    case Level::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Level best_level() {
  if (level_available(Level::Avx2)) return Level::Avx2;
  if (level_available(Level::Neon)) return Level::Neon;
  return Level::Scalar;
}

Level active_level() {
  int f = forced.load(std::memory_order_relaxed);
  return f < 0 ? best_level() : static_cast<Level>(f);
}

void force_level(Level level) {
  if (!level_available(level)) {
    throw Unsupported(std::string("kernel level unavailable: ") + level_name(level));
  }
  forced.store(static_cast<int>(level), std::memory_order_relaxed);
}

void reset_level() { forced.store(-1, std::memory_order_relaxed); }

std::size_t common_prefix_scalar(std::span<const Letter> a, std::span<const Letter> b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

#if !defined(__aarch64__)
std::size_t common_prefix_neon(std::span<const Letter> a, std::span<const Letter> b) {
  return common_prefix_scalar(a, b);
}
#endif

#ifndef EPI_HAVE_AVX2
std::size_t common_prefix_avx2(std::span<const Letter> a, std::span<const Letter> b) {
  return common_prefix_scalar(a, b);
}
#endif

std::size_t common_prefix(std::span<const Letter> a, std::span<const Letter> b) {
  switch (active_level()) {
    case Level::Avx2: return common_prefix_avx2(a, b);
    case Level::Neon: return common_prefix_neon(a, b);
    case Level::Scalar: break;
  }
  return common_prefix_scalar(a, b);
}

std::size_t periodic_extent(std::span<const Letter> w, std::size_t p) {
  if (p == 0) throw InvalidArgument("period must be positive");
  if (p >= w.size()) return w.size();
  return p + common_prefix(w, w.subspan(p));
}

std::vector<std::size_t> z_array(std::span<const Letter> w) {
  std::size_t n = w.size();
  std::vector<std::size_t> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t zi = 0;
    if (i < r) zi = std::min(r - i, z[i - l]);
    if (i + zi >= r) {
      zi += common_prefix(w.subspan(zi), w.subspan(i + zi));
      l = i;
      r = i + zi;
    }
    z[i] = zi;
  }
  return z;
}

}  // namespace epi::kernels
