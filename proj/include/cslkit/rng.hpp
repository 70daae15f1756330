#pragma once

#include <cstdint>
#include <random>

namespace cslkit {

/// splitmix64 step; used to derive independent substream seeds from a
/// master seed so that parallel workers produce schedule-independent output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic substream seed for (master, stream_id).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream_id) {
    std::uint64_t s = master ^ (0xA0761D6478BD642Full * (stream_id + 1));
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return a ^ (b << 1);
}

inline std::mt19937_64 make_rng(std::uint64_t master, std::uint64_t stream_id) {
    return std::mt19937_64(derive_seed(master, stream_id));
}

} // namespace cslkit
