#pragma once

#include <cstdint>
#include <random>

namespace nfsim {

// Deterministic random stream. Substreams are derived from (seed, stream)
// so that adding or removing one consumer of randomness does not perturb
// the draw sequences of the others. mt19937_64 output is fully specified
// by the standard; the distribution helpers below avoid the
// implementation-defined std distributions so draws are identical across
// platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : gen_(mix(mix(seed) ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n); n > 0. Modulo bias is negligible for the
  // small n used here and keeps the draw count per call fixed.
  std::uint32_t uniform_int(std::uint32_t n) {
    return static_cast<std::uint32_t>(next_u64() % n);
  }

  double uniform_range(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    // splitmix64 finalizer
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 gen_;
};

}  // namespace nfsim
