#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace promptforge {

/// splitmix64 finalizer; the basis for all derived sub-seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace detail {
inline std::uint64_t mix_part(std::uint64_t seed, std::uint64_t v) noexcept {
    return splitmix64(seed ^ splitmix64(v));
}
inline std::uint64_t mix_part(std::uint64_t seed, std::string_view v) noexcept {
    return mix_part(seed, fnv1a64(v));
}
} // namespace detail

/// Derives an independent sub-seed from a master seed and a sequence of
/// tags (integers or strings). Every random stream in the project is keyed
/// this way so runs are reproducible from one master seed.
template <typename... Parts>
std::uint64_t derive_seed(std::uint64_t master, Parts... parts) {
    std::uint64_t s = splitmix64(master);
    ((s = detail::mix_part(s, parts)), ...);
    return s;
}

/// Uniform double in [0, 1) from the engine's raw 64-bit output.
/// Unlike std::uniform_real_distribution this is pinned to one algorithm,
/// so sampled sequences are identical across standard libraries.
inline double canonical_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace promptforge
