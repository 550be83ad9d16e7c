#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "lorenz/rows.hpp"

namespace lorenz {

/// Seeded pseudorandom source whose output is fixed across platforms.
///
/// Bits come from std::mt19937_64, whose algorithm and output sequence are
/// pinned by the C++ standard. The conversions below are written out here
/// instead of using <random> distributions, which are implementation-defined:
///
///   uniform()   = (next() >> 11) * 2^-53                      in [0, 1)
///   integer()   = rejection sampling on next() modulo the span
///   normal()    = Box-Muller on two uniform() draws (cosine branch)
///
/// Sub-streams are derived with derive_seed(), which folds an FNV-1a hash of a
/// stream name and an index into the parent seed through SplitMix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  double normal();
  bool coin() { return (next() >> 63) != 0; }

  /// Uniformly distributed direction on the Euclidean unit sphere.
  Vector sphere(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index) noexcept;

}  // namespace lorenz
