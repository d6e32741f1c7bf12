#include "secrecy/random.hpp"

namespace secrecy {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Seed derive_seed(Seed parent, std::uint64_t index) noexcept {
  // Two rounds so that neighbouring parents do not produce overlapping child sequences.
  return mix64(mix64(parent + kGolden) + (index + 1) * kGolden);
}

}  // namespace secrecy
