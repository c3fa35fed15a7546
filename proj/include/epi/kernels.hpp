#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "epi/types.hpp"

namespace epi::kernels {

enum class Level { Scalar, Avx2, Neon };

const char* level_name(Level level);
bool level_available(Level level);
Level best_level();
Level active_level();

// Overrides runtime dispatch. Throws Unsupported if the level is unavailable.
void force_level(Level level);
void reset_level();

// Length of the longest common prefix of a and b.
std::size_t common_prefix(std::span<const Letter> a, std::span<const Letter> b);

std::size_t common_prefix_scalar(std::span<const Letter> a, std::span<const Letter> b);
std::size_t common_prefix_avx2(std::span<const Letter> a, std::span<const Letter> b);
std::size_t common_prefix_neon(std::span<const Letter> a, std::span<const Letter> b);

// Length of the longest prefix of w having period p (p >= 1).
std::size_t periodic_extent(std::span<const Letter> w, std::size_t p);

// Z-array: z[i] = common_prefix(w, w[i..]), z[0] = |w|.
std::vector<std::size_t> z_array(std::span<const Letter> w);

}  // namespace epi::kernels
