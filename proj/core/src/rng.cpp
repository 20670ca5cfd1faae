#include "blomkit/rng.hpp"

#include <limits>
#include <stdexcept>

namespace blomkit {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags) {
    std::uint64_t state = base;
    std::uint64_t out = splitmix64(state);
    for (std::uint64_t tag : tags) {
        state ^= tag + 0x9e3779b97f4a7c15ULL + (state << 6) + (state >> 2);
        out = splitmix64(state);
    }
    return out;
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: empty range");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    // Largest multiple of n representable in [0, 2^64); draws at or above it
    // would bias the remainder and are rejected.
    const std::uint64_t cutoff = max - (max % n + 1) % n;
    std::uint64_t v = next_u64();
    while (v > cutoff) v = next_u64();
    return v % n;
}

} // namespace blomkit
