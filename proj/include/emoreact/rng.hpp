#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Seed derivation and small sampling helpers. Every random stream in the
// pipeline is derived from one run seed through these functions so that
// results do not depend on scheduling.
namespace emoreact::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t derive(std::uint64_t seed, std::string_view stream) {
    return splitmix64(seed ^ fnv1a64(stream));
}

inline std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

// Unbiased integer in [0, n) (Lemire's multiply-shift with rejection).
// Used instead of std::uniform_int_distribution so permutation streams are
// identical across standard library implementations.
template <class Engine>
std::size_t uniform_index(Engine& engine, std::size_t n) {
    const std::uint64_t range = n;
    std::uint64_t x = engine();
    __uint128_t m = static_cast<__uint128_t>(x) * range;
    auto low = static_cast<std::uint64_t>(m);
    if (low < range) {
        const std::uint64_t threshold = (0 - range) % range;
        while (low < threshold) {
            x = engine();
            m = static_cast<__uint128_t>(x) * range;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::size_t>(m >> 64);
}

// Uniform double in [0, 1) from the top 53 bits.
template <class Engine>
double uniform01(Engine& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

} // namespace emoreact::rng
