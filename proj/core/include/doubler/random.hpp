#pragma once

#include <cstdint>

#include "doubler/element.hpp"
#include "doubler/rational.hpp"

namespace doubler {

/// SplitMix64 (Steele, Lea, Flood). Each step adds 0x9E3779B97F4A7C15 to the
/// state and returns
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z ^ (z >> 31)
/// so the n-th output (1-based) depends only on seed + n * 0x9E3779B97F4A7C15.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += kGamma;
    return mix(state_);
  }

  /// The n-th output (1-based) of a generator seeded with `seed`.
  static std::uint64_t nth_output(std::uint64_t seed, std::uint64_t n) noexcept {
    return mix(seed + n * kGamma);
  }

  /// Uniform integer in [lo, hi]. Draws r until r >= 2^64 mod m (m = hi-lo+1)
  /// and returns lo + r mod m, so the result is exactly uniform.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) noexcept;

  std::uint64_t state() const noexcept { return state_; }

 private:
  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

/// Generator for trial t (0-based) of a run seeded with `seed`: seeded with
/// the (t+1)-th output of SplitMix64(seed). Trials can be evaluated in any
/// order or on any worker with identical results.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t t) noexcept {
  return SplitMix64(SplitMix64::nth_output(seed, t + 1));
}

/// Integer coordinates uniform in [-bound, bound], drawn in coordinate order.
/// Requires bound >= 1.
Element random_element(std::shared_ptr<const TowerSpec> tower, SplitMix64& rng, std::int64_t bound);

/// Scalar p/q with p uniform in [-bound, bound], then q uniform in [1, bound].
Rational random_scalar(SplitMix64& rng, std::int64_t bound);

}  // namespace doubler
