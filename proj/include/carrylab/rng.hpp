#pragma once

#include <cstdint>

namespace carrylab {

// Counter-based generator: the k-th draw for a given seed is a pure function
// of (seed, k), so sampled sweeps produce the same stream no matter how the
// index range is partitioned across workers or runs.
inline std::uint64_t mix_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform draw in [0, n). Uses plain reduction; the modulo bias is below
// n / 2^64, irrelevant at the space sizes swept here, and keeps the stream
// identical across platforms.
inline std::uint64_t draw_below(std::uint64_t seed, std::uint64_t index, std::uint64_t n) {
    return n == 0 ? 0 : mix_at(seed, index) % n;
}

}  // namespace carrylab
