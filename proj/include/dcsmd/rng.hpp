#pragma once

#include <cstdint>
#include <random>

// Counter-based stream splitting. Every random draw in a simulation comes
// from a named stream derived from (master seed, purpose, trial, agent), so
// independent trials can run in parallel without shared mutable state and a
// rerun with the same master seed reproduces every stream exactly.

namespace dcsmd::rng {

using Engine = std::mt19937_64;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

enum class StreamTag : std::uint64_t {
    Data = 1,       // per-trial dataset generation
    Init = 2,       // per-trial initial iterates
    Noise = 3,      // per-(trial, agent) gradient noise
    Schedule = 4,   // graph-schedule randomization
    Diagnostic = 5  // sampling inside verification suites
};

inline constexpr std::uint64_t derive_seed(std::uint64_t master, StreamTag tag,
                                           std::uint64_t trial = 0,
                                           std::uint64_t agent = 0) {
    std::uint64_t h = splitmix64(master);
    h = splitmix64(h ^ (static_cast<std::uint64_t>(tag) * 0x9e3779b97f4a7c15ULL));
    h = splitmix64(h ^ (trial * 0xbf58476d1ce4e5b9ULL));
    h = splitmix64(h ^ (agent * 0x94d049bb133111ebULL));
    return h;
}

inline Engine make_stream(std::uint64_t master, StreamTag tag,
                          std::uint64_t trial = 0, std::uint64_t agent = 0) {
    return Engine(derive_seed(master, tag, trial, agent));
}

}  // namespace dcsmd::rng
