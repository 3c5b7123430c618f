#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <unordered_map>
#include <vector>

#include "mcolor/error.hpp"

namespace mcolor {

using u128 = unsigned __int128;

/// SplitMix64 finalizer. Used only to derive stream seeds from keys.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Tags separating the independent uses of one global seed.
enum class StreamTag : std::uint64_t {
    GraphIds = 1,
    GraphEdges = 2,
    GraphPoints = 3,
    NodeDraws = 4,
    GlobalOrder = 5,
    Resample = 6,
    Sampling = 7,
};

constexpr std::uint64_t derive_seed(std::uint64_t seed, StreamTag tag, std::uint64_t key = 0) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ static_cast<std::uint64_t>(tag));
    return splitmix64(h ^ key);
}

/// A reproducible random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; the distributions below are written out
/// by hand because the std:: distributions are implementation-defined.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}
    Stream(std::uint64_t seed, StreamTag tag, std::uint64_t key = 0) : engine_(derive_seed(seed, tag, key)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        for (;;) {
            const std::uint64_t r = next();
            if (r < limit) return r % bound;
        }
    }

    /// Uniform in [0, bound) over 128-bit values.
    u128 below128(u128 bound) {
        if (bound >> 64 == 0) return below(static_cast<std::uint64_t>(bound));
        const u128 max = ~u128{0};
        const u128 limit = bound * (max / bound);
        for (;;) {
            const u128 r = (static_cast<u128>(next()) << 64) | next();
            if (r < limit) return r % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// First `count` entries of a Fisher-Yates shuffle of {1, ..., universe}. The
/// shuffle is kept sparse so that a large universe costs O(count) memory.
inline std::vector<std::uint64_t> random_injection(std::uint64_t count, std::uint64_t universe, Stream& rng) {
    require(count <= universe, ErrorKind::InvalidParams, "injection needs count <= universe");
    std::unordered_map<std::uint64_t, std::uint64_t> swapped;
    auto at = [&](std::uint64_t i) {
        auto it = swapped.find(i);
        return it == swapped.end() ? i + 1 : it->second;
    };
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t j = i + rng.below(universe - i);
        const std::uint64_t vi = at(i);
        const std::uint64_t vj = at(j);
        out.push_back(vj);
        swapped[j] = vi;
    }
    return out;
}

/// Dense full shuffle of {0, ..., size-1}.
inline std::vector<std::uint32_t> random_permutation(std::uint32_t size, Stream& rng) {
    std::vector<std::uint32_t> p(size);
    for (std::uint32_t i = 0; i < size; ++i) p[i] = i;
    for (std::uint32_t i = size; i > 1; --i) {
        const auto j = static_cast<std::uint32_t>(rng.below(i));
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

}  // namespace mcolor
