#include "seqlab/rng.hpp"

#include "seqlab/errors.hpp"

namespace seqlab {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next_u64() {
  state_ += kGolden;
  return mix(state_);
}

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * next_double();
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
  if (bound == 0) throw ConfigError("Rng::next_below: bound must be positive");
  // Multiply-shift reduction; the modulo bias is below 2^-53 for the
  // desk-scale bounds used here and the mapping is fixed by definition.
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
}

Rng Rng::split(std::uint64_t label) const {
  return Rng(mix(state_ + kGolden * (2 * label + 1)));
}

}  // namespace seqlab
