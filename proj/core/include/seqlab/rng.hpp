#ifndef SEQLAB_RNG_HPP
#define SEQLAB_RNG_HPP

#include <cstdint>
#include <vector>

namespace seqlab {

// Deterministic splittable PRNG. The generator is SplitMix64 (Steele,
// Lea & Flood 2014): a 64-bit counter advanced by the golden-ratio
// increment, output through two xor-multiply mixing rounds. The same
// seed yields the same stream on every platform; child streams derived
// with split() are independent of the parent's future output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform in [0, 1) with 53 random bits.
  double next_double();

  double uniform(double lo, double hi);

  // Uniform integer in [0, bound); bound must be positive.
  std::uint64_t next_below(std::uint64_t bound);

  // Derives an independent child stream keyed by `label` without
  // advancing this generator.
  Rng split(std::uint64_t label) const;

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// In-place Fisher-Yates shuffle driven by the given stream.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace seqlab

#endif  // SEQLAB_RNG_HPP
