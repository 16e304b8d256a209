#pragma once

#include <cstdint>
#include <random>

namespace gibbsuniq {

inline constexpr char kRngName[] = "mt19937_64/splitmix64-streams";

/// splitmix64 step; used to derive independent stream seeds from
/// (seed, stream index) so parallel chains never share state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t x = (state += 0x9e3779b97f4a7c15ull);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s ^= stream * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull;
    std::uint64_t b = splitmix64(s);
    return a ^ (b + 0x9e3779b97f4a7c15ull * (stream + 1));
}

/// Thin wrapper producing portable doubles: the uniform mapping is pinned to
/// 53-bit mantissa scaling rather than std::uniform_real_distribution, whose
/// output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in {0, ..., n-1} for n >= 1.
    std::uint64_t uniform_index(std::uint64_t n) {
        // modulo bias is < 2^-53 * n here; negligible for configuration sizes
        return static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace gibbsuniq
