#pragma once

#include <cstdint>
#include <random>

namespace imc {

// splitmix64 step; used to derive independent, reproducible substreams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic random source. mt19937_64 output is fixed by the standard and
// the bounded draws below avoid std::uniform_int_distribution, whose mapping
// is implementation-defined; results are therefore identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform draw from [0, n), n >= 1, via rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % n;
    }

    // Uniform draw from [lo, hi] inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    bool coin() { return (next() & 1) != 0; }

    // True with probability numer/denom.
    bool chance(std::uint64_t numer, std::uint64_t denom) {
        return below(denom) < numer;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace imc
