#pragma once

#include <cstdint>

// Self-contained random number generation. Everything downstream of a seed
// is bit-reproducible across platforms and standard libraries, which the
// report reproducibility contract depends on; std::*_distribution is
// implementation-defined and therefore not used.

namespace sprintrt {

// xoshiro256++ with splitmix64 seeding.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent stream derived from (seed, stream). Batched computations
  // give every batch its own stream so results do not depend on how work
  // is scheduled.
  static Rng stream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t next_u64();

  // Uniform on the open interval (0, 1).
  double uniform();

  // Uniform integer in [0, bound), bound >= 1, unbiased.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Standard normal (Marsaglia polar method).
  double normal();

  // Gamma(shape, scale 1) via Marsaglia-Tsang, boosted for shape < 1.
  double gamma(double shape);

 private:
  std::uint64_t state_[4];
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

// splitmix64 step; also used as a general-purpose 64-bit mixer.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace sprintrt
