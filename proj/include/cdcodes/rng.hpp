#pragma once

#include <cstdint>

namespace cdcodes {

/// splitmix64: seedable, splittable, fully specified by its integer recurrence
/// so tallies reproduce across platforms and reimplementations.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) via the 128-bit multiply reduction.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    /// Independent stream for a sub-task; deterministic in (seed, index).
    static SplitMix64 derive(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mixer(seed ^ (index * 0x9e3779b97f4a7c15ULL + 0x6a09e667f3bcc909ULL));
        return SplitMix64(mixer.next());
    }

    static constexpr const char* algorithm = "splitmix64";

  private:
    std::uint64_t state_;
};

} // namespace cdcodes
