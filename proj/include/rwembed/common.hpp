#pragma once

#include <cstdint>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>

namespace rwembed {

using NodeId = std::int32_t;

/// Error raised when an input file or argument violates a documented contract.
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Error raised when a numerical routine fails to converge or detects an
/// inconsistent intermediate state.
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-fatal diagnostics (duplicate edges merged, bipartite input, truncated
/// spectra, ...) go through this hook so tests and the CLI can capture them.
inline std::function<void(const std::string&)>& warning_handler() {
    static std::function<void(const std::string&)> handler =
        [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; };
    return handler;
}

inline void warn(const std::string& msg) { warning_handler()(msg); }

// ---------------------------------------------------------------------------
// Deterministic RNG helpers. std::shuffle and the std distributions are
// implementation-defined, so anything that must be bit-identical across
// platforms draws through these instead.
// ---------------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Mixes a base seed with a stream index (walk index, epoch, attempt, ...)
/// into an independent 64-bit seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream * 0xd6e8feb86659fd93ULL + 1));
}

/// Uniform double in [0,1) from a 64-bit generator, 53 bits of precision.
template <class Rng>
double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Unbiased uniform integer in [0, bound) (Lemire's multiply-shift method).
template <class Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    using u128 = unsigned __int128;
    std::uint64_t x = rng();
    u128 m = static_cast<u128>(x) * static_cast<u128>(bound);
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
        std::uint64_t threshold = -bound % bound;
        while (lo < threshold) {
            x = rng();
            m = static_cast<u128>(x) * static_cast<u128>(bound);
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

/// Deterministic Fisher-Yates shuffle.
template <class Vec, class Rng>
void shuffle_inplace(Vec& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace rwembed
