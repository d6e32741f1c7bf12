#pragma once

#include <cstdint>
#include <random>

namespace secrecy {

using Seed = std::uint64_t;

/// Per-trial random stream. Streams are caller-owned and never shared between workers.
using RandomStream = std::mt19937_64;

/// Counter-based seed derivation: a SplitMix64 finalizer over (parent, index).
/// The same (parent, index) pair always yields the same child seed, so a trial's
/// stream depends only on its index and never on scheduling.
Seed derive_seed(Seed parent, std::uint64_t index) noexcept;

inline RandomStream make_stream(Seed seed) { return RandomStream{seed}; }

/// Uniform draw on [0, 1) with 53 random bits.
inline double uniform01(RandomStream& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace secrecy
