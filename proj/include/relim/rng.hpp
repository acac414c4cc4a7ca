#ifndef RELIM_RNG_HPP
#define RELIM_RNG_HPP

#include <cstdint>

namespace relim {

// Counter-based random values: every draw is a pure function of (seed, tag),
// so parallel consumers get the same stream as a sequential run regardless of
// evaluation order.

// splitmix64 finalizer
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent stream selector: derive(s, a) and derive(s, b) are decorrelated
// for a != b.
constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t tag) {
    return mix64(mix64(seed) ^ mix64(tag));
}

// Map 64 random bits to a double in [0, 1) with 53-bit resolution.
constexpr double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Uniform draw in [0, n) without modulo bias worth worrying about at n << 2^64.
constexpr std::uint64_t bounded(std::uint64_t bits, std::uint64_t n) {
    return static_cast<std::uint64_t>(unit_double(bits) * static_cast<double>(n)) % n;
}

} // namespace relim

#endif
