#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace telescope {

/// Default seed used by every command that is not given one explicitly.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED7E1EULL;

/// Seedable generator with a platform-independent uniform stream.
///
/// The standard library distributions are implementation-defined, so the
/// conversions to doubles and bounded integers are done here to keep draws
/// bit-identical across toolchains for the same seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  [[nodiscard]] std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Seed for replicate `stream` derived from `root`.
///
/// Replicates seeded this way produce the same results regardless of how
/// they are distributed across workers.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

/// Unbiased Fisher-Yates shuffle.
void shuffle(std::span<int> values, Rng& rng);

}  // namespace telescope
