#pragma once

#include <cstdint>

namespace quadcover {

/// splitmix64. The generator is part of the documented output contract:
/// every seeded construction must reproduce bit-exactly, so the exact
/// update and output functions are pinned here rather than delegated to
/// an implementation-defined std engine.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound) via the multiply-shift reduction
    /// ((next() * bound) >> 64).
    std::uint32_t below(std::uint32_t bound) {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

/// Derives an independent stream seed for sample `index`. Sampled scans
/// draw matrix i from mix_seed(seed, i), so partitioning the index range
/// across workers cannot change which matrix an index produces.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x632be59bd9b4e019ull + index * 0x9e3779b97f4a7c15ull));
    return g.next();
}

}  // namespace quadcover
