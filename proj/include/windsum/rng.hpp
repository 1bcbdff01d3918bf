#pragma once

#include <cstdint>

namespace windsum {

/// splitmix64: used only to derive independent per-chunk stream states
/// from (seed, chunk index). Chunk streams, not thread streams, are the
/// unit of reproducibility: the same (seed, n, chunk size) yields the
/// same samples no matter how many threads run.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xoshiro256** — small, fast, seedable from splitmix64.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    /// Stream for chunk `chunk` of run `seed`.
    Xoshiro256(std::uint64_t seed, std::uint64_t chunk)
        : Xoshiro256(derive(seed, chunk)) {}

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on the open interval (0,1): never returns 0 or 1, so logs
    /// and double-logs downstream are always finite.
    double next_open01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t chunk) {
        std::uint64_t sm = seed;
        std::uint64_t a = splitmix64(sm);
        sm = a ^ (chunk * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL);
        return splitmix64(sm);
    }
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

}  // namespace windsum
